#include <future>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "gennet/catalog.hpp"

namespace gennet {

AlgFun evaluate_term(const SkeletonTerm& t, Reading reading) {
  bool adj = reading == Reading::Adjudicated;
  ShapePtr shape = make_shape(t.markers);
  BlockContext ctx(shape);
  const Expr& main = (adj && t.adjudicated_expr) ? t.adjudicated_expr->expr : t.expr;
  MarkerJet jet = eval_expr(main, ctx);
  for (size_t i = 0; i < t.subs.size(); ++i) {
    const SubTerm* st = &t.subs[i];
    if (adj) {
      auto it = t.adjudicated_subs.find(static_cast<int>(i) + 1);
      if (it != t.adjudicated_subs.end()) st = &it->second;
    }
    jet = jet - AlgFun(st->weight) * eval_expr(st->expr, ctx);
  }
  std::vector<int> idx(t.markers.size());
  for (auto& d : t.derive) {
    int i = shape->index_of(d);
    if (i < 0) throw std::invalid_argument("term " + t.id + ": derivative in undeclared marker " + d);
    ++idx[i];
  }
  BigRational pre = (adj && t.adjudicated_prefactor) ? *t.adjudicated_prefactor : t.prefactor;
  if (sgn(pre) == 0) return AlgFun();
  return AlgFun(pre) * jet.extract(idx);
}

AlgFun assemble(const Catalog& c, Reading reading, int threads) {
  std::vector<AlgFun> vals(c.terms.size());
  if (threads <= 1) {
    for (size_t i = 0; i < c.terms.size(); ++i) vals[i] = evaluate_term(c.terms[i], reading);
  } else {
    for (size_t start = 0; start < c.terms.size(); start += threads) {
      std::vector<std::future<AlgFun>> fs;
      for (size_t i = start; i < std::min(c.terms.size(), start + threads); ++i)
        fs.push_back(std::async(std::launch::async, [&, i] { return evaluate_term(c.terms[i], reading); }));
      for (size_t j = 0; j < fs.size(); ++j) vals[start + j] = fs[j].get();
    }
  }
  AlgFun sum;
  for (auto& v : vals) sum += v;
  BigRational norm = (reading == Reading::Adjudicated && c.adjudicated_normalizer)
                         ? *c.adjudicated_normalizer
                         : c.normalizer;
  return AlgFun(norm) * sum;
}

AlgFun assemble(int k, Stratum s, Reading reading) {
  static std::mutex mu;
  static std::map<std::tuple<int, Stratum, Reading>, AlgFun> cache;
  auto key = std::make_tuple(k, s, reading);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  AlgFun g;
  if (s == Stratum::All)
    g = assemble(k, Stratum::NoMult, reading) + assemble(k, Stratum::Mult, reading);
  else
    g = assemble(find_catalog(k, s == Stratum::NoMult ? CatalogStratum::NoMult : CatalogStratum::Mult),
                 reading);
  std::lock_guard<std::mutex> lock(mu);
  cache.emplace(key, g);
  return g;
}

StandardForm normalize_to_standard_form(const AlgFun& g, int k) {
  const Poly& rad = AlgFun::radicand();
  auto exact = [](const Poly& num, const Poly& den) {
    auto [q, r] = Poly::divmod(num, den);
    if (!r.is_zero()) throw std::domain_error("non-conforming denominator");
    return q;
  };
  StandardForm f;
  f.k = k;
  f.a = exact(g.q() * pow(rad, static_cast<unsigned>(2 * k)), g.r());
  f.b = exact(-(g.p() * pow(rad, static_cast<unsigned>(2 * k - 1))), g.r());
  if (!(from_standard_form(f) == g)) throw std::domain_error("non-conforming denominator");
  return f;
}

AlgFun from_standard_form(const StandardForm& f) {
  const Poly& rad = AlgFun::radicand();
  return AlgFun(-(f.b * rad), f.a, pow(rad, static_cast<unsigned>(2 * f.k)));
}

Poly reduced_polynomial(const Poly& a) {
  std::vector<BigRational> v;
  for (int i = 0; i <= a.degree(); ++i) {
    if (i % 2 == 0) {
      if (sgn(a.coeff(i)) != 0) throw std::domain_error("polynomial is not z times an even polynomial");
    } else {
      v.push_back(a.coeff(i));
    }
  }
  return Poly(std::move(v));
}

CountTable vertex_counts(int k, int n_max, Reading reading) {
  CountTable t;
  t.provenance = "series";
  SeriesZ no = series_expand(assemble(k, Stratum::NoMult, reading), n_max);
  SeriesZ mu = series_expand(assemble(k, Stratum::Mult, reading), n_max);
  for (int n = 1; n <= n_max; n += 2) {
    BigRational a = no.egf_count(n), b = mu.egf_count(n);
    t.add({k, n, Labeling::Vertex, Stratum::NoMult}, a);
    t.add({k, n, Labeling::Vertex, Stratum::Mult}, b);
    t.add({k, n, Labeling::Vertex, Stratum::All}, a + b);
  }
  return t;
}

CountTable leaf_counts(int k, int l_max, Reading reading) {
  CountTable t;
  t.provenance = "series";
  int n_max = 2 * l_max + 2 * k - 1;
  for (Stratum s : {Stratum::NoMult, Stratum::Mult}) {
    CatalogStratum cs = s == Stratum::NoMult ? CatalogStratum::NoMult : CatalogStratum::Mult;
    AlgFun h = assemble(k, s, reading);
    for (const Catalog* d : ddot_catalogs(k, cs))
      h += AlgFun(BigRational(d->symmetry_multiplier - 1)) * assemble(*d, reading);
    SeriesZ ser = series_expand(h, n_max);
    for (int l = 1; l <= l_max; ++l) {
      int n = 2 * l + 2 * k - 1;
      BigRational v = ser[n] * BigRational(factorial(l));
      t.add({k, l, Labeling::Leaf, s}, v);
      t.add({k, l, Labeling::Leaf, Stratum::All}, v);
    }
  }
  return t;
}

}  // namespace gennet
