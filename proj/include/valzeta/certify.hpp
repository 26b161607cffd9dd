#pragma once

#include <string_view>

#include "valzeta/complex_box.hpp"
#include "valzeta/interval.hpp"

namespace valzeta {

/// Which disjunct of "f != 0" an enclosure certifies. For a real value:
/// f > 0 or f < 0. For a complex rectangle: Re > 0, Re < 0, Im > 0 or Im < 0.
enum class CertifiedSign {
  Positive,
  Negative,
  RePositive,
  ReNegative,
  ImPositive,
  ImNegative,
  Uncertified,
};

CertifiedSign certify_nonzero(const RealInterval& a);
/// Real part is tried before the imaginary part.
CertifiedSign certify_nonzero(const ComplexBox& a);

std::string_view to_string(CertifiedSign s);

}  // namespace valzeta
