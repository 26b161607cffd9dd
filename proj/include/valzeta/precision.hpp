#pragma once

#include <mpfr.h>

#include "valzeta/errors.hpp"

namespace valzeta {

/// Working precision (significand bits) for interval endpoints.
class PrecisionContext {
 public:
  static constexpr mpfr_prec_t kMinimum = 53;
  static constexpr mpfr_prec_t kDefault = 128;

  constexpr PrecisionContext() = default;
  explicit PrecisionContext(mpfr_prec_t bits) : bits_(bits) {
    if (bits < kMinimum || bits > MPFR_PREC_MAX) {
      throw DomainError("working precision must be at least 53 bits");
    }
  }

  constexpr mpfr_prec_t bits() const { return bits_; }

  PrecisionContext widened(mpfr_prec_t extra) const {
    return PrecisionContext(bits_ + extra);
  }

  friend constexpr bool operator==(PrecisionContext, PrecisionContext) = default;

 private:
  mpfr_prec_t bits_ = kDefault;
};

}  // namespace valzeta
