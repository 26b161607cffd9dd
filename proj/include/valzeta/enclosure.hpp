#pragma once

#include "valzeta/complex_box.hpp"

namespace valzeta {

/// Validated value of a truncated series: `value` already includes the
/// remainder disc of radius `remainder_radius` (added as a square to both
/// components). `certified` is false only when a precondition of the
/// remainder bound could not be checked.
struct Enclosure {
  ComplexBox value;
  Real remainder_radius;
  bool certified = true;
};

/// max(width(re), width(im)), rounded up.
Real width(const ComplexBox& z);

}  // namespace valzeta
