#pragma once

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "valzeta/interval.hpp"

namespace support {

inline const valzeta::PrecisionContext kCtx(128);

inline bool contains(const valzeta::RealInterval& x, const mpq_class& q) {
  return mpfr_cmp_q(x.lo().get(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(x.hi().get(), q.get_mpq_t()) >= 0;
}

inline bool contains(const valzeta::RealInterval& x, const oracle::Float& v) {
  return oracle::to_float(x.lo()) <= v && v <= oracle::to_float(x.hi());
}

inline double width_of(const valzeta::RealInterval& x) { return x.width().to_double(MPFR_RNDU); }

inline valzeta::RealInterval dec(const char* text) { return valzeta::RealInterval::from_decimal(text, kCtx); }

/// Random dyadic rational n / 2^20 with |n| <= bound * 2^20; exact in both
/// MPFR and Boost floats.
inline mpq_class random_dyadic(std::mt19937_64& rng, double bound) {
  const auto limit = static_cast<long>(bound * (1 << 20));
  std::uniform_int_distribution<long> dist(-limit, limit);
  mpq_class q(dist(rng), 1 << 20);
  q.canonicalize();
  return q;
}

inline oracle::Float to_float(const mpq_class& q) {
  return oracle::Float(q.get_num().get_str()) / oracle::Float(q.get_den().get_str());
}

}  // namespace support
