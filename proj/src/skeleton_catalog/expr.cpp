#include "gennet/expr.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace gennet {
namespace {

std::vector<std::string> tokenize(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(cur);
    cur.clear();
  };
  for (char c : s) {
    if (c == '(' || c == ')' || c == '[' || c == ']') {
      flush();
      out.emplace_back(1, c);
    } else if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<std::string> toks) : t_(std::move(toks)) {}

  Expr parse() {
    Expr e = expr();
    if (pos_ != t_.size()) fail("trailing tokens");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw std::invalid_argument("expression: " + msg + " at token " + std::to_string(pos_));
  }
  const std::string& peek() const {
    if (pos_ >= t_.size()) fail("unexpected end");
    return t_[pos_];
  }
  std::string next() {
    std::string s = peek();
    ++pos_;
    return s;
  }
  void expect(const std::string& s) {
    if (next() != s) fail("expected '" + s + "'");
  }

  MarkerSum sum() {
    expect("[");
    MarkerSum m;
    while (peek() != "]") {
      std::string name = next();
      if (!m.insert(name).second) fail("repeated marker in sum: " + name);
    }
    expect("]");
    return m;
  }

  int integer() {
    std::string s = next();
    try {
      size_t used = 0;
      int v = std::stoi(s, &used);
      if (used != s.size()) fail("bad integer " + s);
      return v;
    } catch (const std::logic_error&) {
      fail("bad integer " + s);
    }
  }

  Expr expr() {
    const std::string tok = next();
    Expr e;
    if (tok == "z") {
      e.kind = Expr::Kind::Z;
      return e;
    }
    if (tok == "s") {
      e.kind = Expr::Kind::S;
      return e;
    }
    if (tok != "(") {
      e.kind = Expr::Kind::Number;
      try {
        e.number = parse_rational(tok);
      } catch (const std::invalid_argument&) {
        fail("unknown atom '" + tok + "'");
      }
      return e;
    }
    e.head = next();
    const std::string& h = e.head;
    if (h == "+" || h == "-" || h == "*" || h == "/") {
      e.kind = Expr::Kind::Op;
      while (peek() != ")") e.args.push_back(expr());
      if (e.args.empty()) fail("empty operator");
      if (h == "/" && e.args.size() != 2) fail("'/' takes two arguments");
    } else if (h == "^") {
      e.kind = Expr::Kind::Op;
      e.args.push_back(expr());
      e.power = integer();
      if (e.power < 0) fail("negative power");
    } else if (h == "M") {
      e.kind = Expr::Kind::Block;
      e.sums.push_back(sum());
    } else if (h == "Mt") {
      e.kind = Expr::Kind::Block;
      e.marker = next();
      e.sums.push_back(sum());
    } else if (h == "P" || h == "Ps") {
      e.kind = Expr::Kind::Block;
      for (int i = 0; i < 3; ++i) e.sums.push_back(sum());
    } else if (h == "Q") {
      e.kind = Expr::Kind::Block;
      e.sums.push_back(sum());
      e.power = integer();
      if (e.power < 1) fail("Q power must be positive");
    } else {
      fail("unknown head '" + h + "'");
    }
    expect(")");
    return e;
  }

  std::vector<std::string> t_;
  size_t pos_ = 0;
};

std::string format_sum(const MarkerSum& m) {
  std::string s = "[";
  bool first = true;
  for (auto& x : m) {
    if (!first) s += " ";
    s += x;
    first = false;
  }
  return s + "]";
}

}  // namespace

Expr parse_expr(const std::string& text) { return Parser(tokenize(text)).parse(); }

std::string format_expr(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return e.number.get_str();
    case Expr::Kind::Z: return "z";
    case Expr::Kind::S: return "s";
    default: break;
  }
  std::string s = "(" + e.head;
  if (e.head == "Mt") s += " " + e.marker;
  for (auto& a : e.args) s += " " + format_expr(a);
  for (auto& m : e.sums) s += " " + format_sum(m);
  if (e.head == "^" || e.head == "Q") s += " " + std::to_string(e.power);
  return s + ")";
}

std::set<std::string> markers_used(const Expr& e) {
  std::set<std::string> out;
  if (!e.marker.empty()) out.insert(e.marker);
  for (auto& m : e.sums) out.insert(m.begin(), m.end());
  for (auto& a : e.args) {
    auto sub = markers_used(a);
    out.insert(sub.begin(), sub.end());
  }
  return out;
}

MarkerJet eval_expr(const Expr& e, BlockContext& ctx) {
  const ShapePtr& sh = ctx.shape();
  switch (e.kind) {
    case Expr::Kind::Number: return MarkerJet::constant(sh, AlgFun(e.number));
    case Expr::Kind::Z: return MarkerJet::constant(sh, AlgFun::z());
    case Expr::Kind::S: return MarkerJet::constant(sh, AlgFun::s());
    case Expr::Kind::Block:
      if (e.head == "M") return ctx.M(e.sums[0]);
      if (e.head == "Mt") return ctx.Mtilde(e.marker, e.sums[0]);
      if (e.head == "P") return ctx.P(e.sums[0], e.sums[1], e.sums[2]);
      if (e.head == "Ps") return ctx.Pstar(e.sums[0], e.sums[1], e.sums[2]);
      if (e.head == "Q") return ctx.Q(e.sums[0], e.power);
      break;
    case Expr::Kind::Op: {
      if (e.head == "^") return pow(eval_expr(e.args[0], ctx), e.power);
      MarkerJet acc = eval_expr(e.args[0], ctx);
      if (e.head == "-" && e.args.size() == 1) return -acc;
      for (size_t i = 1; i < e.args.size(); ++i) {
        MarkerJet x = eval_expr(e.args[i], ctx);
        if (e.head == "+") acc = acc + x;
        else if (e.head == "-") acc = acc - x;
        else if (e.head == "*") acc = acc * x;
        else acc = acc * x.inverse();
      }
      return acc;
    }
  }
  throw std::logic_error("bad expression node");
}

}  // namespace gennet
