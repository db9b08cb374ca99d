#pragma once

#include <optional>
#include <string>

#include "flatnorm/complex.hpp"

namespace flatnorm {

/// Result of a flat-norm-with-scale minimization: the filling S, the residual
/// T - dS, their masses, and the objective lambda*M(S) + M(T - dS).
///
/// `value` is always the unit-metric objective recomputed from the returned
/// chains; `objective` is the functional the solver actually minimized (they
/// differ only for Euclidean-approximating cut stencils). `gap` is the
/// solver's optimality certificate: primal minus a feasible dual bound for
/// the LP path, |max-flow - cut value| for the min-cut path.
struct Decomposition {
  Decomposition(double lambda_in, Chain input_in, Chain s_in)
      : lambda(lambda_in),
        input(std::move(input_in)),
        s_chain(std::move(s_in)),
        t_minus_ds(input - boundary(s_chain)),
        mass_s(mass(s_chain)),
        mass_t_minus_ds(mass(t_minus_ds)),
        value(lambda * mass_s + mass_t_minus_ds) {}

  double lambda;
  std::optional<BinarySet> sigma;  // populated by the min-cut path
  Chain input;                     // T as recorded
  Chain s_chain;                   // degree k+1
  Chain t_minus_ds;                // degree k
  double mass_s;
  double mass_t_minus_ds;
  double value;
  double objective = 0.0;
  double gap = 0.0;
  bool degenerate_lambda = false;
  std::string solver;
};

}  // namespace flatnorm
