#pragma once

#include <map>
#include <mutex>
#include <set>
#include <string>
#include <vector>

#include "gennet/jet.hpp"

namespace gennet {

// Substitution for a formal y, y~ or y^ slot: a set of marker names (empty = 0).
using MarkerSum = std::set<std::string>;

MarkerJet marker_sum(const ShapePtr& shape, const MarkerSum& y);

MarkerJet motzkin_M(const MarkerSum& y, const ShapePtr& shape);
MarkerJet motzkin_Mtilde(const std::string& i, const MarkerSum& y, const ShapePtr& shape);
MarkerJet path_P(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh, const ShapePtr& shape);
MarkerJet path_Pstar(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh, const ShapePtr& shape);
// (1 - z M(z, Y))^(-p)
MarkerJet quasi_inverse(const MarkerSum& y, int p, const ShapePtr& shape);

// Residual M - z - zYM - (z/2)M^2, expanded through z^N, one series per jet slot.
std::vector<SeriesZ> check_motzkin_equation(int N, const MarkerSum& y, const ShapePtr& shape);

// Memoizing evaluator for blocks over one jet shape.
class BlockContext {
 public:
  explicit BlockContext(ShapePtr shape) : shape_(std::move(shape)) {}
  const ShapePtr& shape() const { return shape_; }

  MarkerJet sum(const MarkerSum& y);
  MarkerJet M(const MarkerSum& y);
  MarkerJet Mtilde(const std::string& i, const MarkerSum& y);
  MarkerJet P(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh);
  MarkerJet Pstar(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh);
  MarkerJet Q(const MarkerSum& y, int p);

 private:
  ShapePtr shape_;
  std::map<MarkerSum, MarkerJet> m_cache_;
  std::map<MarkerSum, MarkerJet> qinv_cache_;
};

}  // namespace gennet
