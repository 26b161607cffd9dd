#pragma once

#include <algorithm>

#include "valzeta/interval.hpp"

namespace valzeta {

/// Rectangle re + i*im in the complex plane. Arithmetic uses the real
/// interval formulas componentwise, so results contain the exact set-image
/// but may overestimate it (rectangles are not closed under rotation).
class ComplexBox {
 public:
  explicit ComplexBox(RealInterval re) : re_(std::move(re)), im_(RealInterval(0L, re_.context())) {}
  ComplexBox(RealInterval re, RealInterval im) : re_(std::move(re)), im_(std::move(im)) {}
  ComplexBox(long re, long im, PrecisionContext ctx) : re_(re, ctx), im_(im, ctx) {}

  const RealInterval& re() const { return re_; }
  const RealInterval& im() const { return im_; }
  mpfr_prec_t precision() const { return std::max(re_.precision(), im_.precision()); }
  PrecisionContext context() const { return PrecisionContext(precision()); }

  bool contains(const ComplexBox& inner) const {
    return re_.contains(inner.re_) && im_.contains(inner.im_);
  }
  bool contains_zero() const { return re_.contains_zero() && im_.contains_zero(); }
  bool intersects(const ComplexBox& o) const { return re_.intersects(o.re_) && im_.intersects(o.im_); }
  bool is_real() const { return im_.is_point() && im_.lo().is_zero(); }

  ComplexBox conj() const { return ComplexBox(re_, -im_); }
  ComplexBox operator-() const { return ComplexBox(-re_, -im_); }

  friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re_ + b.re_, a.im_ + b.im_);
  }
  friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
    return ComplexBox(a.re_ - b.re_, a.im_ - b.im_);
  }
  friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b);
  /// Throws UncertifiedDivisor when b may contain zero.
  friend ComplexBox operator/(const ComplexBox& a, const ComplexBox& b);

  friend ComplexBox operator*(const ComplexBox& a, const RealInterval& r) {
    return ComplexBox(a.re_ * r, a.im_ * r);
  }
  friend ComplexBox operator*(const RealInterval& r, const ComplexBox& a) { return a * r; }
  friend ComplexBox operator/(const ComplexBox& a, const RealInterval& r) {
    return ComplexBox(a.re_ / r, a.im_ / r);
  }
  friend ComplexBox operator+(const ComplexBox& a, const RealInterval& r) {
    return ComplexBox(a.re_ + r, a.im_);
  }
  friend ComplexBox operator+(const ComplexBox& a, long v) { return ComplexBox(a.re_ + v, a.im_); }
  friend ComplexBox operator-(const ComplexBox& a, long v) { return ComplexBox(a.re_ - v, a.im_); }
  friend ComplexBox operator-(long v, const ComplexBox& a) { return ComplexBox(v - a.re_, -a.im_); }
  friend ComplexBox operator*(const ComplexBox& a, long v) { return ComplexBox(a.re_ * v, a.im_ * v); }

  ComplexBox& operator+=(const ComplexBox& b) { return *this = *this + b; }
  ComplexBox& operator*=(const ComplexBox& b) { return *this = *this * b; }

  /// Adds the square [-r,r] x [-r,r], which contains the disc of radius r.
  ComplexBox inflated(const Real& radius) const;

 private:
  RealInterval re_;
  RealInterval im_;
};

ComplexBox sqr(const ComplexBox& z);
/// Enclosure of |z|.
RealInterval abs(const ComplexBox& z);
/// Upper bound on |z| over the box.
Real magnitude(const ComplexBox& z);

}  // namespace valzeta
