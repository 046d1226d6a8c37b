#include "gennet/algfun.hpp"

#include <stdexcept>

namespace gennet {

const Poly& AlgFun::radicand() {
  static const Poly rad{1, 0, -2};
  return rad;
}

AlgFun::AlgFun(Poly p, Poly q, Poly r) : p_(std::move(p)), q_(std::move(q)), r_(std::move(r)) {
  if (r_.is_zero()) throw std::domain_error("AlgFun with zero denominator");
  canonicalize();
}

void AlgFun::canonicalize() {
  if (is_zero()) {
    p_ = Poly();
    q_ = Poly();
    r_ = Poly::constant(1);
    return;
  }
  if (r_.degree() > 0) {
    Poly g = gcd(r_, p_.is_zero() ? q_ : p_);
    if (g.degree() > 0 && !p_.is_zero() && !q_.is_zero()) g = gcd(g, q_);
    if (g.degree() > 0) {
      p_ = Poly::div_exact(p_, g);
      q_ = Poly::div_exact(q_, g);
      r_ = Poly::div_exact(r_, g);
    }
  }
  if (r_.leading() != 1) {
    BigRational inv = 1 / r_.leading();
    p_ *= inv;
    q_ *= inv;
    r_ *= inv;
  }
}

AlgFun canonicalize(const AlgFun& x) { return AlgFun(x.p(), x.q(), x.r()); }

AlgFun AlgFun::operator-() const {
  AlgFun r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

AlgFun operator+(const AlgFun& a, const AlgFun& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.r_ == b.r_) return AlgFun(a.p_ + b.p_, a.q_ + b.q_, a.r_);
  Poly g = gcd(a.r_, b.r_);
  Poly ca = Poly::div_exact(b.r_, g);
  Poly cb = Poly::div_exact(a.r_, g);
  return AlgFun(a.p_ * ca + b.p_ * cb, a.q_ * ca + b.q_ * cb, a.r_ * ca);
}

AlgFun operator-(const AlgFun& a, const AlgFun& b) { return a + (-b); }

AlgFun operator*(const AlgFun& a, const AlgFun& b) {
  if (a.is_zero() || b.is_zero()) return AlgFun();
  Poly p = a.p_ * b.p_;
  if (!a.q_.is_zero() && !b.q_.is_zero()) p += a.q_ * b.q_ * AlgFun::radicand();
  Poly q = a.p_ * b.q_ + a.q_ * b.p_;
  return AlgFun(std::move(p), std::move(q), a.r_ * b.r_);
}

AlgFun AlgFun::conjugate() const {
  AlgFun r = *this;
  r.q_ = -r.q_;
  return r;
}

AlgFun AlgFun::inverse() const {
  if (is_zero()) throw std::domain_error("AlgFun division by zero");
  // r / (p + q s) = r (p - q s) / (p^2 - q^2 (1 - 2z^2))
  Poly norm = p_ * p_ - q_ * q_ * radicand();
  if (norm.is_zero()) throw std::domain_error("AlgFun division by zero");
  return AlgFun(r_ * p_, -(r_ * q_), norm);
}

AlgFun operator/(const AlgFun& a, const AlgFun& b) { return a * b.inverse(); }

AlgFun pow(const AlgFun& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  AlgFun r = 1;
  AlgFun b = x;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

std::string AlgFun::str() const {
  std::string num = "(" + p_.str() + ") + (" + q_.str() + ")*s";
  if (r_ == Poly::constant(1)) return num;
  return "[" + num + "] / (" + r_.str() + ")";
}

SeriesZ series_expand(const AlgFun& x, int N) {
  if (N < 0) throw std::invalid_argument("negative truncation order");
  int v = x.r().valuation();
  int M = N + v;
  SeriesZ num(M);
  for (int i = 0; i <= std::min(M, x.p().degree()); ++i) num[i] = x.p().coeff(i);
  if (!x.q().is_zero()) {
    SeriesZ sq = sqrt_series(M);
    SeriesZ qs(M);
    for (int i = 0; i <= std::min(M, x.q().degree()); ++i) qs[i] = x.q().coeff(i);
    num = num + qs * sq;
  }
  for (int i = 0; i < v; ++i)
    if (sgn(num[i]) != 0) throw std::domain_error("series_expand: pole at z = 0");
  SeriesZ shifted(N), den(N);
  for (int i = 0; i <= N; ++i) {
    shifted[i] = num[i + v];
    den[i] = x.r().coeff(i + v);
  }
  return shifted * series_inverse(den);
}

}  // namespace gennet
