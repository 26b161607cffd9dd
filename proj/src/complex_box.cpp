#include "valzeta/complex_box.hpp"

#include "valzeta/certify.hpp"
#include "valzeta/elementary.hpp"
#include "valzeta/errors.hpp"

namespace valzeta {

ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
  return ComplexBox(a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_);
}

ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
  if (certify_nonzero(b) == CertifiedSign::Uncertified) {
    throw UncertifiedDivisor("complex divisor box may contain zero");
  }
  // One component of b excludes zero, so the squared norm is bounded away from 0.
  const RealInterval norm = sqr(b.re_) + sqr(b.im_);
  return ComplexBox((a.re_ * b.re_ + a.im_ * b.im_) / norm, (a.im_ * b.re_ - a.re_ * b.im_) / norm);
}

ComplexBox ComplexBox::inflated(const Real& radius) const {
  const RealInterval disc = RealInterval::symmetric(radius);
  return ComplexBox(re_ + disc, im_ + disc);
}

ComplexBox sqr(const ComplexBox& z) {
  return ComplexBox(sqr(z.re()) - sqr(z.im()), ldexp(z.re() * z.im(), 1));
}

RealInterval abs(const ComplexBox& z) {
  if (z.is_real()) return abs(z.re());
  return sqrt(sqr(z.re()) + sqr(z.im()));
}

Real magnitude(const ComplexBox& z) { return abs(z).hi(); }

}  // namespace valzeta
