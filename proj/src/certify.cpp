#include "valzeta/certify.hpp"

namespace valzeta {

CertifiedSign certify_nonzero(const RealInterval& a) {
  if (a.is_positive()) return CertifiedSign::Positive;
  if (a.is_negative()) return CertifiedSign::Negative;
  return CertifiedSign::Uncertified;
}

CertifiedSign certify_nonzero(const ComplexBox& a) {
  if (a.re().is_positive()) return CertifiedSign::RePositive;
  if (a.re().is_negative()) return CertifiedSign::ReNegative;
  if (a.im().is_positive()) return CertifiedSign::ImPositive;
  if (a.im().is_negative()) return CertifiedSign::ImNegative;
  return CertifiedSign::Uncertified;
}

std::string_view to_string(CertifiedSign s) {
  switch (s) {
    case CertifiedSign::Positive: return "positive";
    case CertifiedSign::Negative: return "negative";
    case CertifiedSign::RePositive: return "re-positive";
    case CertifiedSign::ReNegative: return "re-negative";
    case CertifiedSign::ImPositive: return "im-positive";
    case CertifiedSign::ImNegative: return "im-negative";
    case CertifiedSign::Uncertified: return "uncertified";
  }
  return "uncertified";
}

}  // namespace valzeta
