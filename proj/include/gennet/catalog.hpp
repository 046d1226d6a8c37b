#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gennet/count_table.hpp"
#include "gennet/expr.hpp"

namespace gennet {

enum class CatalogStratum { NoMult, Mult, LeafDot, LeafDdot };
std::string to_string(CatalogStratum s);
CatalogStratum parse_catalog_stratum(const std::string& s);

// Which weights and expressions to use: the transcription, or the oracle-certified overrides.
enum class Reading { AsPrinted, Adjudicated };

struct SubTerm {
  BigRational weight = 1;
  std::string text;
  Expr expr;
};

struct SkeletonTerm {
  std::string id;
  std::string note;
  BigRational prefactor = 1;
  std::vector<MarkerSpec> markers;
  std::vector<std::string> derive;
  std::string text;
  Expr expr;
  std::vector<SubTerm> subs;  // value = prefactor * D(expr - sum w_i sub_i)

  std::optional<BigRational> adjudicated_prefactor;
  std::optional<SubTerm> adjudicated_expr;
  std::map<int, SubTerm> adjudicated_subs;  // 1-based index into subs
  std::string justification;

  bool adjudicated() const {
    return adjudicated_prefactor || adjudicated_expr || !adjudicated_subs.empty();
  }
};

struct Catalog {
  std::string name;
  int k = 0;
  CatalogStratum stratum = CatalogStratum::NoMult;
  CatalogStratum parent = CatalogStratum::NoMult;  // for leaf-symmetry strata
  BigRational normalizer = 1;
  std::optional<BigRational> adjudicated_normalizer;
  std::string justification;
  int symmetry_multiplier = 1;
  std::vector<SkeletonTerm> terms;
};

Catalog parse_catalog(const std::string& text, const std::string& name);
// empty when well-formed
std::vector<std::string> validate_catalog(const Catalog& c);

// Directory from GENNET_CATALOG_DIR, else the in-tree data directory.
std::string catalog_dir();
std::vector<Catalog> load_catalogs(const std::string& dir);
// Catalogs from catalog_dir(), loaded and validated once per process.
const std::vector<Catalog>& default_catalogs();
const Catalog& find_catalog(int k, CatalogStratum s);
std::vector<const Catalog*> ddot_catalogs(int k, CatalogStratum parent);

AlgFun evaluate_term(const SkeletonTerm& t, Reading reading = Reading::Adjudicated);
// weighted sum of terms times the global normalizer
AlgFun assemble(const Catalog& c, Reading reading = Reading::Adjudicated, int threads = 1);
// cached; stratum NoMult, Mult or All
AlgFun assemble(int k, Stratum s, Reading reading = Reading::Adjudicated);

struct StandardForm {
  int k = 0;
  Poly a;
  Poly b;
};

// g = (a - b s) / (1 - 2z^2)^(2k - 1/2); throws std::domain_error("non-conforming denominator")
StandardForm normalize_to_standard_form(const AlgFun& g, int k);
AlgFun from_standard_form(const StandardForm& f);
// a(z) = z * A(z^2): returns A, or throws if a is not of that shape
Poly reduced_polynomial(const Poly& a);

// Leaf-labeled counts per stratum (and All) for l = 1..l_max.
CountTable leaf_counts(int k, int l_max, Reading reading = Reading::Adjudicated);
// Vertex-labeled counts n!*[z^n] for odd n <= n_max.
CountTable vertex_counts(int k, int n_max, Reading reading = Reading::Adjudicated);

}  // namespace gennet
