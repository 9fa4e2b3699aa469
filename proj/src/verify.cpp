#include "qsum/summability.hpp"

namespace qsum {

bool verify_certificate(const RatFun& f, const Certificate& cert, const QParam& q) {
  const RatFun dx = apply_shift(cert.g, ShiftMonomial::tau(kX), q) - cert.g;
  const RatFun dy = apply_shift(cert.h, ShiftMonomial::tau(kY), q) - cert.h;
  return dx + dy == f;
}

}  // namespace qsum
