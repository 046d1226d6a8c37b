#pragma once
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gennet/algfun.hpp"
#include "gennet/catalog.hpp"
#include "gennet/count_table.hpp"
#include "gennet/oracle.hpp"

namespace gennet {

// What a formula counts. Dot/ddot parts split a stratum into networks without and with a
// leaf-fixing symmetry; `family` names the ddot catalog (empty = all ddot families of the stratum).
enum class Part { Whole, Dot, Ddot };

struct Target {
  int k = 0;
  Labeling labeling = Labeling::Vertex;
  Stratum stratum = Stratum::All;
  Part part = Part::Whole;
  std::string family;
};

struct FormulaValue {
  bool defined = false;  // false for even n or arguments outside the formula's range
  BigRational value;
  bool integral() const { return defined && is_integer(value); }
};

// Printed standard form z (a(z^2) - b(z^2) s) / (1 - 2z^2)^(half_exponent / 2).
struct PrintedForm {
  Poly a;
  Poly b;
  int half_exponent = 1;
  AlgFun to_algfun() const;
};

struct Formula {
  std::string id;
  Target target;
  std::string description;
  int min_arg = 1;                       // smallest n (vertex) or l (leaf) the formula covers
  std::optional<PrintedForm> form;       // set for standard-form rows
  std::function<FormulaValue(int)> eval; // argument is n (vertex) or l (leaf)
};

const std::vector<Formula>& formula_registry();
const Formula& find_formula(const std::string& id);

// Vertex-labeled counts from the closed formulas; stratum All, NoMult or Mult.
FormulaValue exact_vertex(int k, int n, Stratum stratum);
// Leaf-labeled counts from the closed formulas.
FormulaValue exact_leaf(int k, int l, Stratum stratum);
// Tree-child networks with one reticulation.
BigInt exact_tree_child_vertex(int n);
BigRational exact_tree_child_leaf(int l);

// Exact series values for a target (adjudicated catalogs).
std::optional<BigRational> series_value(const Target& t, int arg);

// Oracle values available for comparison, keyed by target description and argument.
class OracleData {
 public:
  void collect(int max_n, const OracleOptions& opts = {});
  std::optional<BigRational> value(const Target& t, int arg) const;
  int max_n() const { return max_n_; }

 private:
  int max_n_ = 0;
  std::map<std::tuple<int, int, Stratum>, BigInt> vertex_;   // (k, n, stratum)
  std::map<std::tuple<int, int, Stratum>, BigInt> leaf_;     // (k, l, stratum)
  std::map<std::tuple<int, int, Stratum, long long>, BigInt> leaf_by_aut_;
  std::map<std::tuple<int, int, Stratum, long long>, BigInt> vertex_by_aut_;
};

enum class Status { Match, Mismatch, NotApplicable };
std::string to_string(Status s);

struct FormulaResult {
  std::string formula_id;
  int k = 0;
  Labeling labeling = Labeling::Vertex;
  int arg = 0;
  FormulaValue value;
  std::optional<BigRational> series;
  std::optional<BigRational> oracle;
  Status vs_series = Status::NotApplicable;
  Status vs_oracle = Status::NotApplicable;
  std::string status() const;  // match | mismatch | non-integer | undefined | unchecked
};

// Every registered formula for this k at every applicable argument whose vertex count is <= max_n.
std::vector<FormulaResult> consistency_report(int k, int max_n, const OracleData* oracle);

void write_report_json(std::ostream& out, const std::vector<FormulaResult>& rows);
void write_report_csv(std::ostream& out, const std::vector<FormulaResult>& rows);

}  // namespace gennet
