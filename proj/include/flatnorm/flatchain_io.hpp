#pragma once

#include <iosfwd>
#include <string>

#include "flatnorm/complex.hpp"

namespace flatnorm {

/// Serializes a chain in the FLATCHAIN text format. Cells are written in
/// ascending id order; integer coefficients print without a decimal point,
/// others with 9 significant digits. Degree-0 chains are not representable.
std::string write_flatchain(const Chain& chain);
void write_flatchain_file(const std::string& path, const Chain& chain);

/// Parses the FLATCHAIN format; throws IoError on malformed input.
Chain read_flatchain(std::istream& in);
Chain read_flatchain_file(const std::string& path);

/// Formats a number with 9 significant digits (integers stay integral).
std::string format_number(double v);

}  // namespace flatnorm
