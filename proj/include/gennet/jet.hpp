#pragma once

#include <memory>
#include <string>
#include <vector>

#include "gennet/algfun.hpp"

namespace gennet {

struct MarkerSpec {
  std::string name;
  int cap = 1;
};

// Ordered marker declaration; a multi-index is stored in mixed radix (cap + 1).
class JetShape {
 public:
  explicit JetShape(std::vector<MarkerSpec> markers);

  const std::vector<MarkerSpec>& markers() const { return markers_; }
  int size() const { return size_; }
  int index_of(const std::string& name) const;  // -1 if undeclared
  int flat(const std::vector<int>& multi) const;
  std::vector<int> multi(int flat) const;
  int total_degree(int flat) const { return degree_[flat]; }
  // flat index of a+b, or -1 when a cap is exceeded
  int add(int a, int b) const { return add_[a * size_ + b]; }
  int max_degree() const;
  bool operator==(const JetShape& o) const;

 private:
  std::vector<MarkerSpec> markers_;
  int size_ = 1;
  std::vector<int> degree_;
  std::vector<int> add_;
};

using ShapePtr = std::shared_ptr<const JetShape>;
ShapePtr make_shape(std::vector<MarkerSpec> markers);

// Truncated polynomial in nilpotent markers with AlgFun coefficients.
class MarkerJet {
 public:
  explicit MarkerJet(ShapePtr shape);
  static MarkerJet constant(ShapePtr shape, const AlgFun& c);
  static MarkerJet marker(ShapePtr shape, const std::string& name);

  const ShapePtr& shape() const { return shape_; }
  const AlgFun& base() const { return c_[0]; }
  const AlgFun& coeff(int flat) const { return c_[flat]; }
  AlgFun& coeff(int flat) { return c_[flat]; }
  bool is_zero() const;

  MarkerJet operator-() const;
  friend MarkerJet operator+(const MarkerJet& a, const MarkerJet& b);
  friend MarkerJet operator-(const MarkerJet& a, const MarkerJet& b);
  friend MarkerJet operator*(const MarkerJet& a, const MarkerJet& b);
  friend MarkerJet operator*(const AlgFun& k, const MarkerJet& a);
  bool operator==(const MarkerJet& o) const;

  MarkerJet inverse() const;
  MarkerJet sqrt() const;
  // mixed derivative at all markers 0: coefficient times prod(index_i!)
  AlgFun extract(const std::vector<int>& multi) const;

 private:
  ShapePtr shape_;
  std::vector<AlgFun> c_;
};

MarkerJet pow(const MarkerJet& x, int e);
// Restrict both operands to common markers with min caps.
std::pair<MarkerJet, MarkerJet> align(const MarkerJet& a, const MarkerJet& b);

}  // namespace gennet
