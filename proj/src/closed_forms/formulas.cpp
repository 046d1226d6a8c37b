#include <mutex>
#include <stdexcept>

#include "gennet/closed_forms.hpp"

namespace gennet {

namespace {

using Q = BigRational;

Q pow2(long e) {
  Q r = 1;
  if (e >= 0) mpz_mul_2exp(r.get_num_mpz_t(), BigInt(1).get_mpz_t(), e);
  else mpz_mul_2exp(r.get_den_mpz_t(), BigInt(1).get_mpz_t(), -e);
  r.canonicalize();
  return r;
}

Q fact(long n) { return Q(factorial(n)); }
Q binom(long n, long k) { return Q(binomial(n, k)); }

Q poly(std::initializer_list<Q> c, const Q& x) {  // highest degree first
  Q r = 0;
  for (auto& v : c) r = r * x + v;
  return r;
}

FormulaValue val(const Q& v) { return {true, v}; }
FormulaValue undefined() { return {}; }

bool odd_at_least(int n, int lo) { return n % 2 == 1 && n >= lo; }

// ---- one reticulation ----

FormulaValue vertex_k1_all(int n) {
  if (!odd_at_least(n, 3)) return undefined();
  long m = (n - 1) / 2;
  return val(fact(n) * pow2((n - 3) / 2) * (Q(n + 1) * binom(n - 1, m) / pow2(n - 1) - 1));
}

FormulaValue vertex_k1_tree_child(int n) {
  if (!odd_at_least(n, 3)) return undefined();
  long m = (n - 1) / 2;
  return val(fact(n) * pow2((n - 3) / 2) * (Q(n - 1) * binom(n - 1, m) / pow2(n - 1) - 1));
}

FormulaValue leaf_k1_all(int l) {
  if (l < 1) return undefined();
  return val(fact(l) * pow2(l) * (Q(l + 1) * binom(2 * l, l) / pow2(2 * l) - Q(1, 2)));
}

FormulaValue leaf_k1_tree_child(int l) {
  if (l < 1) return undefined();
  return val(fact(l) * pow2(l) * (Q(l) * binom(2 * l, l) / pow2(2 * l) - Q(1, 2)));
}

// l! (r(l) 2^-l binom(2l+2k-2, l+k-1) - 2^l p(l))
FormulaValue table_row(int k, int l) {
  if (l < 1) return undefined();
  Q L = l, r, p;
  if (k == 1) {
    r = L;
    p = Q(1, 2);
  } else if (k == 2) {
    r = (L + 1) * poly({6, 19, 18, -7, 0}, L) / (2 * (6 * L - 3) * (2 * L + 1));
    p = poly({2, 5, 3}, L) / 2;
  } else {
    r = (L + 1) * (L + 2) * poly({280, 3072, 12834, 22386, 10949, -5211, -3990}, L) /
        (840 * (2 * L + 3) * (2 * L + 1) * (2 * L - 1));
    p = poly({48, 415, 1326, 1799, 816}, L) / 768;
  }
  return val(fact(l) * (r * binom(2 * l + 2 * k - 2, l + k - 1) / pow2(l) - pow2(l) * p));
}

// ---- two reticulations ----

FormulaValue vertex_k2_no_mult(int n) {
  if (!odd_at_least(n, 5)) return undefined();
  Q m = (n - 1) / 2;
  Q P1 = poly({30, 20, 15, -20}, m), P2 = poly({2, 1, 0}, m);
  return val(fact(n) * pow2((n - 5) / 2) *
             (P1 * Q(n - 1) * binom(n - 1, (n - 1) / 2) / (15 * Q(n - 2) * pow2(n - 1)) - P2));
}

FormulaValue vertex_k2_mult(int n) {
  if (!odd_at_least(n, 5)) return undefined();
  return val(fact(n) * pow2((n - 3) / 2) * Q(n - 1) *
             (Q(n - 1) * binom(n - 1, (n - 1) / 2) / pow2(n) - Q(1, 2)));
}

FormulaValue vertex_k2_all(int n) {
  if (!odd_at_least(n, 5)) return undefined();
  Q m = (n - 1) / 2;
  Q A = poly({30, 80, -15, -20}, m), B = poly({1, Q(3, 2), 0}, m);
  return val(fact(n) * pow2((n - 3) / 2) *
             (A * Q(n - 1) * binom(n - 1, (n - 1) / 2) / (15 * Q(n - 2) * pow2(n - 1)) - B));
}

Q k2_leaf_core(int l) {  // (l+1) binom(2l+2, l+1) / ((6l-3)(2l+1) 4^l)
  Q L = l;
  return (L + 1) * binom(2 * l + 2, l + 1) / ((6 * L - 3) * (2 * L + 1) * pow2(2 * l));
}

FormulaValue leaf_k2_dot(int l) {
  if (l < 1) return undefined();
  Q L = l;
  return val(fact(l) * pow2(l - 1) *
             (poly({6, 19, 18, -7, -3}, L) * k2_leaf_core(l) - poly({2, 5, 3}, L)));
}

FormulaValue leaf_k2_ddot(int l) {
  if (l < 1) return undefined();
  Q L = l;
  return val(fact(l) * pow2(l - 1) * (L + 1) * binom(2 * l + 2, l + 1) /
             ((2 * L - 1) * (2 * L + 1) * pow2(2 * l)));
}

FormulaValue leaf_k2_no_mult(int l) {
  if (l < 1) return undefined();
  Q L = l;
  return val(fact(l) * pow2(l - 1) *
             (poly({6, 19, 18, -7, 0}, L) * k2_leaf_core(l) - poly({2, 5, 3}, L)));
}

FormulaValue leaf_k2_mult(int l) {
  if (l < 1) return undefined();
  Q L = l;
  return val(fact(l) * pow2(l + 1) * (L + 1) *
             ((L + 1) * binom(2 * l + 2, l + 1) / pow2(2 * l + 2) - Q(1, 2)));
}

FormulaValue leaf_k2_all(int l) {
  if (l < 1) return undefined();
  Q L = l;
  Q A = poly({6, 31, 30, -10, -3}, L), B = poly({2, Q(41, 8), Q(25, 8)}, L);
  return val(fact(l) * pow2(l - 1) * (A * k2_leaf_core(l) - B));
}

// ---- three reticulations, in m = (n - 1) / 2 ----
// Factors printed as (2n - 3) and (2n - 5) inside these m-formulas are read with m in place of n;
// only that reading reproduces the generating functions they expand.

Q cm(long m) { return Q(m) * Q(m - 1) * binom(2 * m, m); }  // m (m-1) binom(2m, m)

Q F_all(long m) {
  Q M = m;
  Q A = poly({104, 836, 876, -454, -79}, M), B = poly({48, 127, -60, -121, 6}, M);
  return pow2(m - 6) / 3 * (A * cm(m) / (35 * (2 * M - 1) * pow2(2 * (m - 2))) - B);
}

Q F_no_mult(long m) {
  Q M = m;
  Q A = poly({104, 416, 596, -384, 61}, M), B = poly({48, 31, -12, -73, 6}, M);
  return pow2(m - 6) / 3 * (A * cm(m) / (35 * (2 * M - 1) * pow2(2 * (m - 2))) - B);
}

Q F_mult(long m) {
  Q M = m;
  Q A = poly({6, 4, -1, -2}, M), B = poly({1, Q(-1, 2), 0, Q(-1, 2)}, M);
  return pow2(m - 1) * (A * cm(m) / (3 * (2 * M - 1) * pow2(2 * m)) - B);
}

Q F_dot(long m) {
  if (m == 3) return 8;
  Q M = m;
  Q A = poly({280, -288, -1086, -2626, 9239, -7463, 4290}, M);
  Q B = poly({24, Q(-31, 2), 6, Q(85, 2), -21}, M);
  return pow2(m - 5) / 3 *
         (A * cm(m) / (35 * (2 * M - 5) * (2 * M - 3) * (2 * M - 1) * pow2(2 * (m - 2))) - B);
}

Q F_ddot_s1(long m) {
  Q M = m;
  return pow2(m - 2) * cm(m) / ((2 * M - 3) * (2 * M - 1) * pow2(2 * m));
}

Q F_ddot_s2(long m) {
  if (m == 3) return 0;
  Q M = m;
  return pow2(m - 3) * (poly({2, -15, 38, -34}, M) * cm(m) /
                            ((2 * M - 5) * (2 * M - 3) * (2 * M - 1) * pow2(2 * (m - 1))) -
                        (M - 3) / 2);
}

Q F_mult_dot(long m) {
  Q M = m;
  Q A = poly({6, -5, -7, -2, 6}, M), B = poly({2, -1, -1, 0}, M);
  return pow2(m - 2) * (A * cm(m) / (3 * (2 * M - 3) * (2 * M - 1) * pow2(2 * (m - 1))) - B);
}

Q F_mult_ddot(long m) {
  Q M = m;
  return pow2(m - 1) * Q(m) * Q(m - 1) * Q(m - 2) * binom(2 * m, m) /
         ((2 * M - 3) * (2 * M - 1) * pow2(2 * m));
}

std::function<FormulaValue(int)> vertex_m(Q (*f)(long)) {
  return [f](int n) -> FormulaValue {
    if (!odd_at_least(n, 7)) return undefined();
    return val(fact(n) * f((n - 1) / 2));
  };
}

FormulaValue leaf_k3_no_mult(int l) {
  if (l < 1) return undefined();
  if (l == 1) return val(51);
  long m = l + 2;
  return val(fact(l) * (F_dot(m) + 4 * F_ddot_s1(m) + 2 * F_ddot_s2(m)));
}

FormulaValue leaf_k3_mult_pieces(int l) {
  if (l < 1) return undefined();
  long m = l + 2;
  return val(fact(l) * (F_mult_dot(m) + 2 * F_mult_ddot(m)));
}

FormulaValue leaf_k3_mult(int l) {
  if (l < 1) return undefined();
  Q L = l;
  Q core = (L + 1) * (L + 2) * (L + 2) * poly({6, 31, 45, 15}, L) * binom(2 * l + 4, l + 2) /
           (3 * (2 * L + 1) * (2 * L + 3) * pow2(2 * l + 2));
  return val(fact(l) * pow2(l) * (core - poly({2, 11, 19, 10}, L)));
}

Poly wpoly(std::initializer_list<Q> c) {  // lowest degree first
  return Poly(std::vector<BigRational>(c));
}

Formula standard_form_row(std::string id, Target t, std::string desc, Poly a, Poly b, int half) {
  Formula f;
  f.id = std::move(id);
  f.target = std::move(t);
  f.description = std::move(desc);
  f.min_arg = 1;
  f.form = PrintedForm{std::move(a), std::move(b), half};
  AlgFun g = f.form->to_algfun();
  auto cache = std::make_shared<std::pair<std::mutex, SeriesZ>>();
  f.eval = [g, cache](int n) -> FormulaValue {
    if (n < 1) return undefined();
    std::lock_guard<std::mutex> lock(cache->first);
    if (cache->second.order < n) cache->second = series_expand(g, std::max(n, 2 * cache->second.order + 1));
    return val(cache->second.egf_count(n));
  };
  return f;
}

Target V(int k, Stratum s, Part p = Part::Whole, std::string fam = "") {
  return {k, Labeling::Vertex, s, p, std::move(fam)};
}
Target L(int k, Stratum s, Part p = Part::Whole, std::string fam = "") {
  return {k, Labeling::Leaf, s, p, std::move(fam)};
}

std::vector<Formula> build_registry() {
  using S = Stratum;
  std::vector<Formula> r;
  auto add = [&](std::string id, Target t, std::string desc, int min_arg,
                 std::function<FormulaValue(int)> f) {
    r.push_back(Formula{std::move(id), std::move(t), std::move(desc), min_arg, std::nullopt, std::move(f)});
  };
  Q h = Q(1, 2);

  add("vertex.k1.all", V(1, S::All), "vertex-labeled, one reticulation", 3, vertex_k1_all);
  add("vertex.k1.tree-child", V(1, S::NoMult), "vertex-labeled tree-child, one reticulation", 3,
      vertex_k1_tree_child);
  add("leaf.k1.all", L(1, S::All), "leaf-labeled, one reticulation", 1, leaf_k1_all);
  add("leaf.k1.tree-child", L(1, S::NoMult), "leaf-labeled tree-child, one reticulation", 1,
      leaf_k1_tree_child);
  add("leaf.k1.no-mult.table", L(1, S::NoMult), "tabulated r/p form, one reticulation", 1,
      [](int l) { return table_row(1, l); });
  r.push_back(standard_form_row("sf.k1.all", V(1, S::All), "standard form, one reticulation",
                                wpoly({1, -1}), wpoly({1, -1}), 3));
  r.push_back(standard_form_row("sf.k1.tree-child", V(1, S::NoMult),
                                "closed generating function, tree-child, one reticulation",
                                wpoly({0, h}), wpoly({0, h}), 3));

  add("vertex.k2.no-mult", V(2, S::NoMult), "vertex-labeled, two reticulations, no double edge", 5,
      vertex_k2_no_mult);
  add("vertex.k2.mult", V(2, S::Mult), "vertex-labeled, two reticulations, double edge", 5,
      vertex_k2_mult);
  add("vertex.k2.all", V(2, S::All), "vertex-labeled, two reticulations, combined", 5, vertex_k2_all);
  r.push_back(standard_form_row("sf.k2.all", V(2, S::All), "standard form, two reticulations",
                                wpoly({0, Q(5, 2), Q(-1, 2), -2, 1}), wpoly({0, Q(5, 2), -1}), 7));
  r.push_back(standard_form_row("sf.k2.no-mult", V(2, S::NoMult),
                                "standard form, two reticulations, no double edge",
                                wpoly({0, Q(3, 2), h, 0, 1}), wpoly({0, Q(3, 2), 1}), 7));
  r.push_back(standard_form_row("sf.k2.mult", V(2, S::Mult),
                                "standard form, two reticulations, double edge",
                                wpoly({0, 1, 1}), wpoly({0, 1}), 1));
  r.push_back(standard_form_row("sf.k2.dot", V(2, S::NoMult, Part::Dot),
                                "standard form, two reticulations, asymmetric part",
                                wpoly({0, 1, 4, -9, 11, -4}), wpoly({0, 1, 4, -6, 4}), 7));
  r.push_back(standard_form_row("sf.k2.ddot", V(2, S::NoMult, Part::Ddot, "k2_ddot"),
                                "standard form, two reticulations, symmetric part",
                                wpoly({0, h, -h}), wpoly({0, h}), 1));
  add("leaf.k2.dot", L(2, S::NoMult, Part::Dot), "leaf-labeled asymmetric part, two reticulations", 1,
      leaf_k2_dot);
  add("leaf.k2.ddot", L(2, S::NoMult, Part::Ddot, "k2_ddot"),
      "leaf-labeled symmetric part, two reticulations", 1, leaf_k2_ddot);
  add("leaf.k2.no-mult", L(2, S::NoMult), "leaf-labeled, two reticulations, no double edge", 1,
      leaf_k2_no_mult);
  add("leaf.k2.mult", L(2, S::Mult), "leaf-labeled, two reticulations, double edge", 1, leaf_k2_mult);
  add("leaf.k2.all", L(2, S::All), "leaf-labeled, two reticulations, combined", 1, leaf_k2_all);
  add("leaf.k2.no-mult.table", L(2, S::NoMult), "tabulated r/p form, two reticulations", 1,
      [](int l) { return table_row(2, l); });

  add("vertex.k3.all", V(3, S::All), "vertex-labeled, three reticulations, combined", 7,
      vertex_m(F_all));
  add("vertex.k3.no-mult", V(3, S::NoMult), "vertex-labeled, three reticulations, no double edge", 7,
      vertex_m(F_no_mult));
  add("vertex.k3.mult", V(3, S::Mult), "vertex-labeled, three reticulations, double edge", 7,
      vertex_m(F_mult));
  add("vertex.k3.dot", V(3, S::NoMult, Part::Dot),
      "vertex-labeled asymmetric part, three reticulations, no double edge", 7, vertex_m(F_dot));
  add("vertex.k3.ddot-s1", V(3, S::NoMult, Part::Ddot, "k3_ddot_s1"),
      "vertex-labeled symmetric family 1, three reticulations", 7, vertex_m(F_ddot_s1));
  add("vertex.k3.ddot-s2", V(3, S::NoMult, Part::Ddot, "k3_ddot_s2"),
      "vertex-labeled symmetric family 2, three reticulations", 7, vertex_m(F_ddot_s2));
  add("vertex.k3.mult-dot", V(3, S::Mult, Part::Dot),
      "vertex-labeled asymmetric part, three reticulations, double edge", 7, vertex_m(F_mult_dot));
  add("vertex.k3.mult-ddot", V(3, S::Mult, Part::Ddot, "k3_mult_ddot"),
      "vertex-labeled symmetric part, three reticulations, double edge", 7, vertex_m(F_mult_ddot));
  r.push_back(standard_form_row("sf.k3.all", V(3, S::All), "standard form, three reticulations",
                                wpoly({0, 0, Q(109, 4), Q(-23, 2), -10, 5, 1}),
                                wpoly({0, 0, Q(109, 4), -5, Q(-7, 2), 1}), 11));
  r.push_back(standard_form_row("sf.k3.no-mult", V(3, S::NoMult),
                                "standard form, three reticulations, no double edge",
                                wpoly({0, 0, Q(69, 4), 2, 4, 2, 3}),
                                wpoly({0, 0, Q(69, 4), 11, Q(9, 2), 1}), 11));
  r.push_back(standard_form_row("sf.k3.mult", V(3, S::Mult),
                                "standard form, three reticulations, double edge",
                                wpoly({0, 0, 10, Q(13, 2), -1, 1}), wpoly({0, 0, 10, 4}), 11));
  r.push_back(standard_form_row("sf.k3.mult-ddot", V(3, S::Mult, Part::Ddot, "k3_mult_ddot"),
                                "closed generating function, symmetric part with double edge",
                                wpoly({0, h}), Poly(), 3));
  add("leaf.k3.no-mult", L(3, S::NoMult), "leaf-labeled, three reticulations, no double edge", 1,
      leaf_k3_no_mult);
  add("leaf.k3.no-mult.table", L(3, S::NoMult), "tabulated r/p form, three reticulations", 1,
      [](int l) { return table_row(3, l); });
  add("leaf.k3.mult", L(3, S::Mult), "leaf-labeled, three reticulations, double edge", 1,
      leaf_k3_mult);
  add("leaf.k3.mult.parts", L(3, S::Mult), "leaf-labeled double-edge count from its two parts", 1,
      leaf_k3_mult_pieces);
  return r;
}

}  // namespace

AlgFun PrintedForm::to_algfun() const {
  if (half_exponent % 2 == 0) throw std::invalid_argument("standard form needs a half-integer exponent");
  const Poly& rad = AlgFun::radicand();
  Poly za = a.substitute_square().shift(1);
  Poly zb = b.substitute_square().shift(1);
  return AlgFun(-(zb * rad), za, pow(rad, static_cast<unsigned>((half_exponent + 1) / 2)));
}

const std::vector<Formula>& formula_registry() {
  static const std::vector<Formula> reg = build_registry();
  return reg;
}

const Formula& find_formula(const std::string& id) {
  for (auto& f : formula_registry())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown formula '" + id + "'");
}

FormulaValue exact_vertex(int k, int n, Stratum stratum) {
  static const std::map<std::pair<int, Stratum>, std::string> ids = {
      {{1, Stratum::All}, "vertex.k1.all"},       {{1, Stratum::NoMult}, "vertex.k1.tree-child"},
      {{2, Stratum::All}, "vertex.k2.all"},       {{2, Stratum::NoMult}, "vertex.k2.no-mult"},
      {{2, Stratum::Mult}, "vertex.k2.mult"},     {{3, Stratum::All}, "vertex.k3.all"},
      {{3, Stratum::NoMult}, "vertex.k3.no-mult"}, {{3, Stratum::Mult}, "vertex.k3.mult"}};
  if (k == 1 && stratum == Stratum::Mult) {
    FormulaValue a = vertex_k1_all(n), b = vertex_k1_tree_child(n);
    if (!a.defined) return a;
    return val(a.value - b.value);
  }
  auto it = ids.find({k, stratum});
  if (it == ids.end()) throw std::invalid_argument("no closed formula for this k and stratum");
  return find_formula(it->second).eval(n);
}

FormulaValue exact_leaf(int k, int l, Stratum stratum) {
  static const std::map<std::pair<int, Stratum>, std::string> ids = {
      {{1, Stratum::All}, "leaf.k1.all"},      {{1, Stratum::NoMult}, "leaf.k1.tree-child"},
      {{2, Stratum::All}, "leaf.k2.all"},      {{2, Stratum::NoMult}, "leaf.k2.no-mult"},
      {{2, Stratum::Mult}, "leaf.k2.mult"},    {{3, Stratum::NoMult}, "leaf.k3.no-mult"},
      {{3, Stratum::Mult}, "leaf.k3.mult"}};
  if (k == 3 && stratum == Stratum::All) {
    FormulaValue a = leaf_k3_no_mult(l), b = leaf_k3_mult(l);
    if (!a.defined) return a;
    return val(a.value + b.value);
  }
  if (k == 1 && stratum == Stratum::Mult) {
    FormulaValue a = leaf_k1_all(l), b = leaf_k1_tree_child(l);
    if (!a.defined) return a;
    return val(a.value - b.value);
  }
  auto it = ids.find({k, stratum});
  if (it == ids.end()) throw std::invalid_argument("no closed formula for this k and stratum");
  return find_formula(it->second).eval(l);
}

BigInt exact_tree_child_vertex(int n) {
  FormulaValue v = vertex_k1_tree_child(n);
  if (!v.integral()) throw std::invalid_argument("tree-child count needs odd n >= 3");
  return v.value.get_num();
}

BigRational exact_tree_child_leaf(int l) {
  FormulaValue v = leaf_k1_tree_child(l);
  if (!v.defined) throw std::invalid_argument("tree-child leaf count needs l >= 1");
  return v.value;
}

}  // namespace gennet
