#include "gennet/poly.hpp"

#include <sstream>
#include <stdexcept>

namespace gennet {

Poly::Poly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }

Poly Poly::constant(const BigRational& c) { return Poly(std::vector<BigRational>{c}); }

Poly Poly::monomial(const BigRational& c, int degree) {
  if (degree < 0) throw std::invalid_argument("negative degree");
  std::vector<BigRational> v(degree + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

BigRational Poly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

int Poly::valuation() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return static_cast<int>(i);
  return -1;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const BigRational& c) {
  if (sgn(c) == 0) {
    c_.clear();
    return *this;
  }
  for (auto& x : c_) x *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<BigRational> r(a.c_.size() + b.c_.size() - 1);
  BigRational t;
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (sgn(a.c_[i]) == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) {
      if (sgn(b.c_[j]) == 0) continue;
      t = a.c_[i] * b.c_[j];
      r[i + j] += t;
    }
  }
  return Poly(std::move(r));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  Poly r = *this;
  BigRational inv = 1 / leading();
  return r *= inv;
}

Poly Poly::shift(int k) const {
  if (is_zero() || k == 0) return *this;
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<BigRational> v(k);
  v.insert(v.end(), c_.begin(), c_.end());
  return Poly(std::move(v));
}

BigRational Poly::eval(const BigRational& x) const {
  BigRational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Poly Poly::substitute_square() const {
  if (is_zero()) return *this;
  std::vector<BigRational> v(2 * c_.size() - 1);
  for (size_t i = 0; i < c_.size(); ++i) v[2 * i] = c_[i];
  return Poly(std::move(v));
}

std::string Poly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigRational& c = c_[i];
    if (sgn(c) == 0) continue;
    BigRational a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = a == 1;
    if (!unit || i == 0) os << a.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<BigRational> rem = a.c_;
  std::vector<BigRational> quo(a.degree() - b.degree() + 1);
  BigRational inv = 1 / b.leading();
  BigRational t;
  for (int i = a.degree(); i >= b.degree(); --i) {
    if (sgn(rem[i]) == 0) continue;
    BigRational q = rem[i] * inv;
    quo[i - b.degree()] = q;
    for (int j = 0; j <= b.degree(); ++j) {
      t = q * b.c_[j];
      rem[i - b.degree() + j] -= t;
    }
  }
  rem.resize(b.degree());
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly Poly::div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

Poly pow(const Poly& p, unsigned e) {
  Poly r = Poly::constant(1);
  Poly b = p;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = Poly::divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

}  // namespace gennet
