#pragma once

#include <string>
#include <vector>

#include "quasitoric/linalg.hpp"

namespace quasitoric::detail {

// "2*x + (1+sqrt(2))*y - z"; "0" when every coefficient vanishes.
inline std::string linear_form(const Row& coeffs, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    QuadScalar c = coeffs[i];
    if (c.is_zero()) continue;
    const bool negative = c.is_rational() ? c.sign() < 0 : c.r().is_zero() && c.s() < 0;
    if (negative) c = -c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c == QuadScalar(1)) {
      out += names[i];
    } else if (c.is_rational() || c.r().is_zero()) {
      out += c.to_string() + "*" + names[i];
    } else {
      out += "(" + c.to_string() + ")*" + names[i];
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace quasitoric::detail
