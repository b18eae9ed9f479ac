#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "curvesing/polynomial.hpp"

namespace curvesing {

/// Parses a polynomial over Q. Grammar: sums and differences of products of
/// powers; factors are rational literals, variables of the ring, or
/// parenthesized expressions; exponents are non-negative integers. A numeric
/// literal may directly precede a variable ("3f").
QPoly parse_poly(std::string_view text, const RingPtr& ring);

/// ';'-separated list of polynomials.
std::vector<QPoly> parse_poly_list(std::string_view text, const RingPtr& ring);

/// Comma-separated variable names.
std::vector<std::string> parse_variable_list(std::string_view text);

struct IdealText {
  RingPtr ring;
  std::vector<QPoly> generators;
};

/// Ideal file: a header "ring: QQ[a,b,c]" followed by one polynomial per
/// line. Blank lines and text after '#' are ignored.
IdealText parse_ideal_text(std::string_view text);

std::string format_ideal_text(const RingPtr& ring, const std::vector<QPoly>& generators);

}  // namespace curvesing
