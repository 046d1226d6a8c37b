#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gennet/rational.hpp"

namespace gennet {

// Dense univariate polynomial in z over Q.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<BigRational> coeffs);
  Poly(std::initializer_list<BigRational> coeffs);

  static Poly constant(const BigRational& c);
  static Poly monomial(const BigRational& c, int degree);
  static Poly z() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  BigRational coeff(int i) const;
  const std::vector<BigRational>& coeffs() const { return c_; }
  const BigRational& leading() const { return c_.back(); }
  // lowest power with a nonzero coefficient; -1 for zero
  int valuation() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const BigRational& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const BigRational& c) { return a *= c; }
  friend Poly operator*(const BigRational& c, Poly a) { return a *= c; }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  Poly monic() const;
  Poly shift(int k) const;  // multiply by z^k
  BigRational eval(const BigRational& x) const;
  Poly substitute_square() const;  // p(z) -> p(z^2)
  std::string str(const std::string& var = "z") const;

  // quotient and remainder, b nonzero
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
  // exact division; throws std::domain_error if b does not divide a
  static Poly div_exact(const Poly& a, const Poly& b);

 private:
  void trim();
  std::vector<BigRational> c_;
};

Poly pow(const Poly& p, unsigned e);
// monic gcd; gcd(0, 0) = 0
Poly gcd(Poly a, Poly b);

}  // namespace gennet
