#include "gennet/qsqrt2.hpp"

#include <cmath>
#include <stdexcept>

namespace gennet {

QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y) {
  BigRational n = y.a * y.a - 2 * y.b * y.b;
  if (sgn(n) == 0) throw std::domain_error("QSqrt2 division by zero");
  QSqrt2 c{y.a / n, -y.b / n};
  return x * c;
}

double QSqrt2::to_double() const { return a.get_d() + b.get_d() * std::sqrt(2.0); }

std::string QSqrt2::str() const {
  if (sgn(b) == 0) return a.get_str();
  std::string rad = (b == 1 ? "" : b.get_str() + "*") + "sqrt(2)";
  if (sgn(a) == 0) return rad;
  return a.get_str() + " + " + rad;
}

QSqrt2 eval_at_inv_sqrt2(const Poly& p) {
  // (1/sqrt2)^i = 2^(-i/2)
  QSqrt2 r;
  for (int i = 0; i <= p.degree(); ++i) {
    const BigRational& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    BigRational scale(1, BigInt(1) << ((i + 1) / 2));
    if (i % 2 == 0)
      r.a += c * scale;
    else
      r.b += c * scale;
  }
  return r;
}

}  // namespace gennet
