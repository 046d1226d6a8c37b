#include "gennet/blocks.hpp"

#include <stdexcept>

namespace gennet {

MarkerJet marker_sum(const ShapePtr& shape, const MarkerSum& y) {
  MarkerJet r(shape);
  for (auto& m : y) r = r + MarkerJet::marker(shape, m);
  return r;
}

MarkerJet BlockContext::sum(const MarkerSum& y) { return marker_sum(shape_, y); }

MarkerJet BlockContext::M(const MarkerSum& y) {
  auto it = m_cache_.find(y);
  if (it != m_cache_.end()) return it->second;
  AlgFun z = AlgFun::z();
  MarkerJet Y = sum(y);
  MarkerJet one = MarkerJet::constant(shape_, 1);
  // 1 + (Y^2 - 2) z^2 - 2 z Y
  MarkerJet rad = one + AlgFun(z * z) * (Y * Y - MarkerJet::constant(shape_, 2)) - AlgFun(2 * z) * Y;
  MarkerJet m = z.inverse() * (one - z * Y - rad.sqrt());
  m_cache_.emplace(y, m);
  return m;
}

MarkerJet BlockContext::Mtilde(const std::string& i, const MarkerSum& y) {
  MarkerJet yi = MarkerJet::marker(shape_, i);
  return (MarkerJet::constant(shape_, 1) - AlgFun::z() * yi) * M(y);
}

MarkerJet BlockContext::P(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh) {
  AlgFun z = AlgFun::z();
  MarkerJet one = MarkerJet::constant(shape_, 1);
  MarkerJet Y = sum(y);
  MarkerJet num = one - z * Y + z * sum(yh);
  MarkerJet den = one - z * (Y + M(yt));
  return num * den.inverse();
}

MarkerJet BlockContext::Pstar(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh) {
  return P(y, yt, yh) - MarkerJet::constant(shape_, 1);
}

MarkerJet BlockContext::Q(const MarkerSum& y, int p) {
  auto it = qinv_cache_.find(y);
  if (it == qinv_cache_.end()) {
    MarkerJet base = (MarkerJet::constant(shape_, 1) - AlgFun::z() * M(y)).inverse();
    it = qinv_cache_.emplace(y, base).first;
  }
  return pow(it->second, p);
}

MarkerJet motzkin_M(const MarkerSum& y, const ShapePtr& shape) { return BlockContext(shape).M(y); }

MarkerJet motzkin_Mtilde(const std::string& i, const MarkerSum& y, const ShapePtr& shape) {
  return BlockContext(shape).Mtilde(i, y);
}

MarkerJet path_P(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh, const ShapePtr& shape) {
  return BlockContext(shape).P(y, yt, yh);
}

MarkerJet path_Pstar(const MarkerSum& y, const MarkerSum& yt, const MarkerSum& yh,
                     const ShapePtr& shape) {
  return BlockContext(shape).Pstar(y, yt, yh);
}

MarkerJet quasi_inverse(const MarkerSum& y, int p, const ShapePtr& shape) {
  return BlockContext(shape).Q(y, p);
}

std::vector<SeriesZ> check_motzkin_equation(int N, const MarkerSum& y, const ShapePtr& shape) {
  BlockContext ctx(shape);
  MarkerJet m = ctx.M(y);
  AlgFun z = AlgFun::z();
  MarkerJet res = m - MarkerJet::constant(shape, z) - z * ctx.sum(y) * m -
                  AlgFun(z * BigRational(1, 2)) * (m * m);
  std::vector<SeriesZ> out;
  for (int f = 0; f < shape->size(); ++f) out.push_back(series_expand(res.coeff(f), N));
  return out;
}

}  // namespace gennet
