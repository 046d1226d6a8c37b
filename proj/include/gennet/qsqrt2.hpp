#pragma once

#include <string>

#include "gennet/poly.hpp"
#include "gennet/rational.hpp"

namespace gennet {

// a + b*sqrt(2)
struct QSqrt2 {
  BigRational a = 0;
  BigRational b = 0;

  QSqrt2() = default;
  QSqrt2(BigRational a_, BigRational b_) : a(std::move(a_)), b(std::move(b_)) {}
  static QSqrt2 sqrt2() { return {0, 1}; }

  friend QSqrt2 operator+(const QSqrt2& x, const QSqrt2& y) { return {x.a + y.a, x.b + y.b}; }
  friend QSqrt2 operator-(const QSqrt2& x, const QSqrt2& y) { return {x.a - y.a, x.b - y.b}; }
  friend QSqrt2 operator*(const QSqrt2& x, const QSqrt2& y) {
    return {x.a * y.a + 2 * x.b * y.b, x.a * y.b + x.b * y.a};
  }
  friend QSqrt2 operator/(const QSqrt2& x, const QSqrt2& y);
  bool operator==(const QSqrt2& o) const { return a == o.a && b == o.b; }

  double to_double() const;
  std::string str() const;
};

// p evaluated at z = 1/sqrt(2)
QSqrt2 eval_at_inv_sqrt2(const Poly& p);

}  // namespace gennet
