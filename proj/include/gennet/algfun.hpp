#pragma once

#include <string>

#include "gennet/poly.hpp"
#include "gennet/series.hpp"

namespace gennet {

// (p + q*s) / r with s^2 = 1 - 2z^2.
// Canonical: gcd(p, q, r) = 1 and r monic; zero is (0, 0, 1).
class AlgFun {
 public:
  AlgFun() : r_(Poly::constant(1)) {}
  AlgFun(Poly p, Poly q = Poly(), Poly r = Poly::constant(1));
  AlgFun(const BigRational& c) : AlgFun(Poly::constant(c)) {}  // NOLINT
  AlgFun(long c) : AlgFun(BigRational(c)) {}                   // NOLINT

  static AlgFun z() { return AlgFun(Poly::z()); }
  static AlgFun s() { return AlgFun(Poly(), Poly::constant(1)); }
  // 1 - 2z^2
  static const Poly& radicand();

  const Poly& p() const { return p_; }
  const Poly& q() const { return q_; }
  const Poly& r() const { return r_; }
  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  bool is_rational() const { return q_.is_zero(); }

  AlgFun operator-() const;
  friend AlgFun operator+(const AlgFun& a, const AlgFun& b);
  friend AlgFun operator-(const AlgFun& a, const AlgFun& b);
  friend AlgFun operator*(const AlgFun& a, const AlgFun& b);
  friend AlgFun operator/(const AlgFun& a, const AlgFun& b);
  AlgFun& operator+=(const AlgFun& b) { return *this = *this + b; }
  AlgFun& operator-=(const AlgFun& b) { return *this = *this - b; }
  AlgFun& operator*=(const AlgFun& b) { return *this = *this * b; }
  bool operator==(const AlgFun& o) const { return p_ == o.p_ && q_ == o.q_ && r_ == o.r_; }

  AlgFun inverse() const;
  AlgFun conjugate() const;  // s -> -s
  std::string str() const;

 private:
  void canonicalize();
  Poly p_, q_, r_;
};

AlgFun pow(const AlgFun& x, int e);
AlgFun canonicalize(const AlgFun& x);

// Exact Taylor coefficients through z^N; throws std::domain_error if x has a pole at 0.
SeriesZ series_expand(const AlgFun& x, int N);

}  // namespace gennet
