#pragma once

#include <set>
#include <string>
#include <vector>

#include "gennet/blocks.hpp"

namespace gennet {

// Prefix expression over block constructors.
//   atoms:  z  s  <rational>
//   (+ e...) (- e...) (* e...) (/ a b) (^ e int)
//   (M Y) (Mt i Y) (P Y Yt Yh) (Ps Y Yt Yh) (Q Y p)   with Y = [m1 m2 ...]
struct Expr {
  enum class Kind { Number, Z, S, Op, Block };
  Kind kind = Kind::Number;
  BigRational number;
  std::string head;
  std::vector<Expr> args;
  std::vector<MarkerSum> sums;
  std::string marker;
  int power = 0;
};

Expr parse_expr(const std::string& text);
std::string format_expr(const Expr& e);
// every marker name appearing in sums or Mt indices
std::set<std::string> markers_used(const Expr& e);
MarkerJet eval_expr(const Expr& e, BlockContext& ctx);

}  // namespace gennet
