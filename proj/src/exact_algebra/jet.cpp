#include "gennet/jet.hpp"

#include <algorithm>
#include <stdexcept>

namespace gennet {

JetShape::JetShape(std::vector<MarkerSpec> markers) : markers_(std::move(markers)) {
  for (size_t i = 0; i < markers_.size(); ++i) {
    if (markers_[i].cap < 1 || markers_[i].cap > 2)
      throw std::invalid_argument("marker cap must be 1 or 2: " + markers_[i].name);
    for (size_t j = 0; j < i; ++j)
      if (markers_[j].name == markers_[i].name)
        throw std::invalid_argument("duplicate marker: " + markers_[i].name);
    size_ *= markers_[i].cap + 1;
  }
  degree_.resize(size_);
  for (int f = 0; f < size_; ++f) {
    auto m = multi(f);
    int d = 0;
    for (int x : m) d += x;
    degree_[f] = d;
  }
  add_.assign(size_ * size_, -1);
  for (int a = 0; a < size_; ++a) {
    auto ma = multi(a);
    for (int b = 0; b < size_; ++b) {
      auto mb = multi(b);
      bool ok = true;
      for (size_t i = 0; i < ma.size(); ++i) {
        ma[i] += mb[i];
        if (ma[i] > markers_[i].cap) ok = false;
      }
      if (ok) add_[a * size_ + b] = flat(ma);
      ma = multi(a);
    }
  }
}

int JetShape::index_of(const std::string& name) const {
  for (size_t i = 0; i < markers_.size(); ++i)
    if (markers_[i].name == name) return static_cast<int>(i);
  return -1;
}

int JetShape::flat(const std::vector<int>& m) const {
  if (m.size() != markers_.size()) throw std::invalid_argument("multi-index arity mismatch");
  int f = 0;
  for (size_t i = markers_.size(); i-- > 0;) {
    if (m[i] < 0 || m[i] > markers_[i].cap)
      throw std::out_of_range("multi-index exceeds cap of marker " + markers_[i].name);
    f = f * (markers_[i].cap + 1) + m[i];
  }
  return f;
}

std::vector<int> JetShape::multi(int f) const {
  std::vector<int> m(markers_.size());
  for (size_t i = 0; i < markers_.size(); ++i) {
    m[i] = f % (markers_[i].cap + 1);
    f /= markers_[i].cap + 1;
  }
  return m;
}

int JetShape::max_degree() const {
  int d = 0;
  for (auto& m : markers_) d += m.cap;
  return d;
}

bool JetShape::operator==(const JetShape& o) const {
  if (markers_.size() != o.markers_.size()) return false;
  for (size_t i = 0; i < markers_.size(); ++i)
    if (markers_[i].name != o.markers_[i].name || markers_[i].cap != o.markers_[i].cap) return false;
  return true;
}

ShapePtr make_shape(std::vector<MarkerSpec> markers) {
  return std::make_shared<const JetShape>(std::move(markers));
}

MarkerJet::MarkerJet(ShapePtr shape) : shape_(std::move(shape)), c_(shape_->size()) {}

MarkerJet MarkerJet::constant(ShapePtr shape, const AlgFun& c) {
  MarkerJet j(std::move(shape));
  j.c_[0] = c;
  return j;
}

MarkerJet MarkerJet::marker(ShapePtr shape, const std::string& name) {
  int i = shape->index_of(name);
  if (i < 0) throw std::invalid_argument("undeclared marker: " + name);
  std::vector<int> m(shape->markers().size());
  m[i] = 1;
  MarkerJet j(shape);
  j.c_[shape->flat(m)] = 1;
  return j;
}

bool MarkerJet::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const AlgFun& x) { return x.is_zero(); });
}

static void require_same(const MarkerJet& a, const MarkerJet& b) {
  if (a.shape() != b.shape() && !(*a.shape() == *b.shape()))
    throw std::invalid_argument("jet shapes differ; align() first");
}

MarkerJet MarkerJet::operator-() const {
  MarkerJet r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

MarkerJet operator+(const MarkerJet& a, const MarkerJet& b) {
  require_same(a, b);
  MarkerJet r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

MarkerJet operator-(const MarkerJet& a, const MarkerJet& b) {
  require_same(a, b);
  MarkerJet r = a;
  for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

MarkerJet operator*(const MarkerJet& a, const MarkerJet& b) {
  require_same(a, b);
  const JetShape& sh = *a.shape_;
  MarkerJet r(a.shape_);
  for (int i = 0; i < sh.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; j < sh.size(); ++j) {
      int k = sh.add(i, j);
      if (k < 0 || b.c_[j].is_zero()) continue;
      r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

MarkerJet operator*(const AlgFun& k, const MarkerJet& a) {
  MarkerJet r = a;
  for (auto& x : r.c_)
    if (!x.is_zero()) x = k * x;
  return r;
}

bool MarkerJet::operator==(const MarkerJet& o) const {
  return *shape_ == *o.shape_ && c_ == o.c_;
}

MarkerJet MarkerJet::inverse() const {
  if (base().is_zero()) throw std::domain_error("jet inverse: zero base coefficient");
  AlgFun inv0 = base().inverse();
  // x = c (1 + e), e nilpotent
  MarkerJet e = inv0 * *this;
  e.c_[0] = AlgFun();
  MarkerJet neg = -e;
  MarkerJet term = MarkerJet::constant(shape_, 1);
  MarkerJet sum = term;
  for (int d = 1; d <= shape_->max_degree(); ++d) {
    term = term * neg;
    if (term.is_zero()) break;
    sum = sum + term;
  }
  return inv0 * sum;
}

MarkerJet MarkerJet::sqrt() const {
  if (!(base() == AlgFun(AlgFun::radicand())))
    throw std::domain_error("jet sqrt: base coefficient is not 1 - 2z^2 (malformed radicand)");
  AlgFun inv0 = base().inverse();
  MarkerJet e = inv0 * *this;
  e.c_[0] = AlgFun();
  MarkerJet term = MarkerJet::constant(shape_, 1);
  MarkerJet sum = term;
  BigRational b = 1;
  for (int j = 1; j <= shape_->max_degree(); ++j) {
    term = term * e;
    if (term.is_zero()) break;
    b *= ratio(3 - 2 * j, 2 * j);  // binom(1/2, j)
    sum = sum + AlgFun(b) * term;
  }
  return AlgFun::s() * sum;
}

AlgFun MarkerJet::extract(const std::vector<int>& m) const {
  int f = shape_->flat(m);
  BigInt fac = 1;
  for (int x : m) fac *= factorial(x);
  return AlgFun(BigRational(fac)) * c_[f];
}

MarkerJet pow(const MarkerJet& x, int e) {
  if (e < 0) return pow(x.inverse(), -e);
  MarkerJet r = MarkerJet::constant(x.shape(), 1);
  for (int i = 0; i < e; ++i) r = r * x;
  return r;
}

std::pair<MarkerJet, MarkerJet> align(const MarkerJet& a, const MarkerJet& b) {
  if (*a.shape() == *b.shape()) return {a, b};
  std::vector<MarkerSpec> common;
  for (auto& m : a.shape()->markers()) {
    int j = b.shape()->index_of(m.name);
    if (j < 0) throw std::invalid_argument("incompatible marker sets: " + m.name);
    common.push_back({m.name, std::min(m.cap, b.shape()->markers()[j].cap)});
  }
  if (common.size() != b.shape()->markers().size())
    throw std::invalid_argument("incompatible marker sets");
  ShapePtr sh = make_shape(common);
  auto restrict = [&](const MarkerJet& x) {
    MarkerJet r(sh);
    for (int f = 0; f < x.shape()->size(); ++f) {
      auto mx = x.shape()->multi(f);
      std::vector<int> m(common.size());
      bool ok = true;
      for (size_t i = 0; i < common.size(); ++i) {
        m[i] = mx[x.shape()->index_of(common[i].name)];
        if (m[i] > common[i].cap) ok = false;
      }
      if (ok) r.coeff(sh->flat(m)) = x.coeff(f);
    }
    return r;
  };
  return {restrict(a), restrict(b)};
}

}  // namespace gennet
