#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "orbitsep/ratfunc.hpp"

namespace orbitsep {

// Expression grammar shared by system files and printed output:
//   integer literals, variable identifiers, + - * / ^ with standard
//   precedence, parentheses; ^ binds tightest and takes a non-negative
//   integer exponent. Unary minus is accepted.
RatFunc parse_expression(std::string_view text,
                         std::span<const std::string> vars, Field field,
                         int line_no = 1);

std::string monomial_str(const Monomial& m, std::span<const std::string> vars);
std::string poly_str(const Poly& p, std::span<const std::string> vars);
std::string ratfunc_str(const RatFunc& f, std::span<const std::string> vars);

}  // namespace orbitsep
