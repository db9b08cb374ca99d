#pragma once

#include <stdexcept>
#include <string>

namespace flatnorm {

/// Malformed or unreadable input data (files, formats).
struct IoError : std::runtime_error {
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

/// Internal solver failure (non-convergence, lost certificates).
struct SolverError : std::runtime_error {
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace flatnorm
