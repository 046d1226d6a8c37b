#include <map>
#include <mutex>
#include "json.hpp"

#include "gennet/closed_forms.hpp"

namespace gennet {

namespace {

std::vector<CatalogStratum> catalog_strata(Stratum s) {
  if (s == Stratum::NoMult) return {CatalogStratum::NoMult};
  if (s == Stratum::Mult) return {CatalogStratum::Mult};
  return {CatalogStratum::NoMult, CatalogStratum::Mult};
}

std::vector<const Catalog*> selected_ddots(int k, CatalogStratum parent, const std::string& family) {
  std::vector<const Catalog*> out;
  for (auto* c : ddot_catalogs(k, parent))
    if (family.empty() || c->name == family) out.push_back(c);
  return out;
}

int family_multiplier(int k, Stratum s, const std::string& family) {
  for (auto cs : catalog_strata(s))
    for (auto* c : selected_ddots(k, cs, family)) return c->symmetry_multiplier;
  throw std::invalid_argument("unknown symmetric family '" + family + "'");
}

struct SeriesCache {
  std::mutex mu;
  std::map<std::tuple<int, Stratum, std::string>, SeriesZ> entries;

  const SeriesZ& get(int k, Stratum s, const std::string& tag, int order,
                     const std::function<AlgFun()>& make) {
    std::lock_guard<std::mutex> lock(mu);
    auto& e = entries[{k, s, tag}];
    if (e.order < order) e = series_expand(make(), std::max(order, 2 * e.order + 1));
    return e;
  }
};

SeriesCache& cache() {
  static SeriesCache c;
  return c;
}

AlgFun whole_gf(int k, Stratum s) { return assemble(k, s); }

AlgFun ddot_gf(int k, CatalogStratum cs, const std::string& family) {
  AlgFun g;
  for (auto* c : selected_ddots(k, cs, family)) g = g + assemble(*c);
  return g;
}

AlgFun dot_gf(int k, Stratum s) {
  AlgFun g;
  for (auto cs : catalog_strata(s)) {
    Stratum one = cs == CatalogStratum::NoMult ? Stratum::NoMult : Stratum::Mult;
    g = g + assemble(k, one) - ddot_gf(k, cs, "");
  }
  return g;
}

// [z^n] of the leaf-weighted series: dot part plus each symmetric family times its multiplier
BigRational leaf_coefficient(const Target& t, int n) {
  BigRational sum = 0;
  if (t.part != Part::Ddot)
    sum += cache().get(t.k, t.stratum, "dot", n, [&] { return dot_gf(t.k, t.stratum); })[n];
  if (t.part == Part::Dot) return sum;
  for (auto cs : catalog_strata(t.stratum))
    for (auto* c : selected_ddots(t.k, cs, t.family)) {
      const Catalog* cat = c;
      const SeriesZ& s = cache().get(t.k, t.stratum, "ddot:" + c->name, n, [cat] { return assemble(*cat); });
      sum += BigRational(c->symmetry_multiplier) * s[n];
    }
  return sum;
}

bool matches_aut(const Target& t, long long aut) {
  if (t.part == Part::Dot) return aut == 1;
  if (t.part == Part::Ddot)
    return t.family.empty() ? aut > 1 : aut == family_multiplier(t.k, t.stratum, t.family);
  return true;
}

bool in_stratum(const Classification& c, Stratum s) {
  return s == Stratum::All || (s == Stratum::Mult) == (c.r > 0);
}

Status compare(const FormulaValue& v, const std::optional<BigRational>& ref) {
  if (!v.defined || !ref) return Status::NotApplicable;
  return v.value == *ref ? Status::Match : Status::Mismatch;
}

std::string str_or_empty(const std::optional<BigRational>& x) { return x ? to_string(*x) : ""; }

}  // namespace

std::optional<BigRational> series_value(const Target& t, int arg) {
  int n = t.labeling == Labeling::Vertex ? arg : 2 * arg + 2 * t.k - 1;
  if (n < 1 || n % 2 == 0) return std::nullopt;
  if (t.labeling == Labeling::Leaf)
    return BigRational(factorial(arg)) * leaf_coefficient(t, n);
  BigRational coeff;
  if (t.part == Part::Whole) {
    coeff = cache().get(t.k, t.stratum, "whole", n, [&] { return whole_gf(t.k, t.stratum); })[n];
  } else if (t.part == Part::Dot) {
    coeff = cache().get(t.k, t.stratum, "dot", n, [&] { return dot_gf(t.k, t.stratum); })[n];
  } else {
    coeff = cache().get(t.k, t.stratum, "ddot:" + t.family, n, [&] {
      AlgFun g;
      for (auto cs : catalog_strata(t.stratum)) g = g + ddot_gf(t.k, cs, t.family);
      return g;
    })[n];
  }
  return BigRational(factorial(n)) * coeff;
}

void OracleData::collect(int max_n, const OracleOptions& opts) {
  OracleOptions o = opts;
  o.max_n = std::max(o.max_n, max_n);
  max_n_ = max_n;
  for (int n = 3; n <= max_n; n += 2) {
    EnumerationResult e = enumerate(n, o);
    CountTable tab = e.table();
    for (auto& [key, v] : tab.counts)
      if (key.labeling == Labeling::Vertex) vertex_[{key.k, key.size, key.stratum}] = v.get_num();
    for (int k = 1; k <= 3; ++k) {
      int l = (n + 1) / 2 - k;
      if (l < 1) continue;
      for (auto& c : leaf_classes(n, k, o)) {
        BigInt orbit = orbit_sum(n, {c});
        for (Stratum s : {Stratum::All, Stratum::NoMult, Stratum::Mult}) {
          if (!in_stratum(c.cls, s)) continue;
          leaf_[{k, l, s}] += 1;
          leaf_by_aut_[{k, l, s, c.automorphisms}] += 1;
          vertex_by_aut_[{k, n, s, c.automorphisms}] += orbit;
        }
      }
    }
  }
}

std::optional<BigRational> OracleData::value(const Target& t, int arg) const {
  int n = t.labeling == Labeling::Vertex ? arg : 2 * arg + 2 * t.k - 1;
  if (n < 3 || n % 2 == 0 || n > max_n_ || t.k > 3) return std::nullopt;
  if (t.labeling == Labeling::Vertex && t.part == Part::Whole) {
    auto it = vertex_.find({t.k, n, t.stratum});
    return BigRational(it == vertex_.end() ? BigInt(0) : it->second);
  }
  if (t.labeling == Labeling::Leaf && t.part == Part::Whole) {
    auto it = leaf_.find({t.k, arg, t.stratum});
    return BigRational(it == leaf_.end() ? BigInt(0) : it->second);
  }
  BigInt sum = 0;
  if (t.labeling == Labeling::Vertex) {
    for (auto& [key, v] : vertex_by_aut_)
      if (std::get<0>(key) == t.k && std::get<1>(key) == n && std::get<2>(key) == t.stratum &&
          matches_aut(t, std::get<3>(key)))
        sum += v;
  } else {
    for (auto& [key, v] : leaf_by_aut_)
      if (std::get<0>(key) == t.k && std::get<1>(key) == arg && std::get<2>(key) == t.stratum &&
          matches_aut(t, std::get<3>(key)))
        sum += v;
  }
  return BigRational(sum);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Match: return "match";
    case Status::Mismatch: return "mismatch";
    case Status::NotApplicable: return "n/a";
  }
  return "?";
}

std::string FormulaResult::status() const {
  if (!value.defined) return "undefined";
  if (vs_series == Status::Mismatch || vs_oracle == Status::Mismatch) return "mismatch";
  if (!value.integral()) return "non-integer";
  if (vs_series == Status::Match || vs_oracle == Status::Match) return "match";
  return "unchecked";
}

std::vector<FormulaResult> consistency_report(int k, int max_n, const OracleData* oracle) {
  std::vector<FormulaResult> rows;
  for (auto& f : formula_registry()) {
    if (f.target.k != k) continue;
    bool vertex = f.target.labeling == Labeling::Vertex;
    int first = vertex ? std::max(f.min_arg, 2 * k + 1) : std::max(f.min_arg, 1);
    if (vertex && first % 2 == 0) ++first;
    for (int arg = first;; arg += vertex ? 2 : 1) {
      int n = vertex ? arg : 2 * arg + 2 * k - 1;
      if (n > max_n) break;
      FormulaResult r;
      r.formula_id = f.id;
      r.k = k;
      r.labeling = f.target.labeling;
      r.arg = arg;
      r.value = f.eval(arg);
      r.series = series_value(f.target, arg);
      if (oracle) r.oracle = oracle->value(f.target, arg);
      r.vs_series = compare(r.value, r.series);
      r.vs_oracle = compare(r.value, r.oracle);
      rows.push_back(std::move(r));
    }
  }
  return rows;
}

void write_report_json(std::ostream& out, const std::vector<FormulaResult>& rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (auto& r : rows) {
    arr.push_back({{"formula_id", r.formula_id},
                   {"k", r.k},
                   {"labeling", to_string(r.labeling)},
                   {"n_or_l", r.arg},
                   {"value", r.value.defined ? to_string(r.value.value) : ""},
                   {"series_value", str_or_empty(r.series)},
                   {"oracle_value", str_or_empty(r.oracle)},
                   {"status", r.status()}});
  }
  out << arr.dump(2) << "\n";
}

void write_report_csv(std::ostream& out, const std::vector<FormulaResult>& rows) {
  out << "formula_id,k,labeling,n_or_l,value,series_value,oracle_value,status\n";
  for (auto& r : rows)
    out << r.formula_id << ',' << r.k << ',' << to_string(r.labeling) << ',' << r.arg << ','
        << (r.value.defined ? to_string(r.value.value) : "") << ',' << str_or_empty(r.series) << ','
        << str_or_empty(r.oracle) << ',' << r.status() << '\n';
}

}  // namespace gennet
