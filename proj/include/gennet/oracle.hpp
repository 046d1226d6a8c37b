#pragma once
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "gennet/count_table.hpp"

namespace gennet {

// Vertices are 0..n-1; edges are ordered (parent, child) pairs, a parallel pair appears twice.
struct Network {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
};

enum class VertexType { Root, Tree, Reticulation, Leaf };

struct Classification {
  int k = 0;
  int r = 0;  // reticulations entered by a double edge
  bool tree_child = false;
  int leaves = 0;
};

struct InvalidNetwork : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct BudgetExceeded : std::runtime_error {
  BudgetExceeded() : std::runtime_error("budget exceeded") {}
};

// throws InvalidNetwork
std::vector<VertexType> vertex_types(const Network& g);
Classification classify(const Network& g);

struct OracleOptions {
  double budget_seconds = 0;  // 0 = unlimited
  int threads = 1;
  int max_n = 9;
  bool allow_root_double_edge = true;
};

// Parses "30s", "5m", "2h", "90" (seconds) or "none".
double parse_budget(const std::string& text);

// Key (k, r, tree_child) -> number of vertex-labeled networks.
using OracleCounts = std::map<std::tuple<int, int, bool>, BigInt>;

struct EnumerationResult {
  int n = 0;
  OracleCounts counts;
  CountTable table() const;  // vertex-labeled, strata All / NoMult / Mult
  BigInt total(int k) const;
  BigInt tree_child(int k) const;
};

// Networks whose labels follow the block layout: 0 root, then tree vertices, reticulations, leaves.
// Every vertex-labeled network is one of these up to n!/(t! k! l!) relabelings.
void for_each_layout_network(int n, int k, const OracleOptions& opts,
                             const std::function<void(const Network&)>& fn);

// All valid networks on n vertices, optionally only for one k. Throws BudgetExceeded.
EnumerationResult enumerate(int n, const OracleOptions& opts = {}, std::optional<int> k = {});

// Edge-list emission: header "n k r", then "u v" per edge with 1-based labels.
void write_edge_list(std::ostream& out, const Network& g);

struct CanonicalForm {
  std::string code;  // equal codes <=> isomorphic with leaf labels fixed
  long long automorphisms = 1;
};

// Canonical form under relabelings of internal vertices that fix every leaf.
CanonicalForm canonical_form(const Network& g);

struct LeafClass {
  std::string code;
  Classification cls;
  long long automorphisms = 1;
  long long representatives = 0;  // layout networks in this class; equals t! k! / |Aut|
};

// One entry per isomorphism class (leaves labeled, internal vertices unlabeled) for size n and k.
std::vector<LeafClass> leaf_classes(int n, int k, const OracleOptions& opts = {});

// Number of leaf-labeled classes with l leaves and k reticulations in a stratum.
BigInt count_leaf_labeled(int l, int k, Stratum stratum, const OracleOptions& opts = {});

struct SymmetryCensus {
  int n = 0;
  int k = 0;
  std::map<long long, long long> classes_by_aut;        // |Aut| -> number of classes
  std::map<long long, BigInt> vertex_labeled_by_aut;    // |Aut| -> vertex-labeled networks
  long long symmetric_classes() const;
};

SymmetryCensus symmetry_census(int n, int k, Stratum stratum = Stratum::All,
                               const OracleOptions& opts = {});

// Sum over classes of binom(n, l) (n - l)! / |Aut|.
BigInt orbit_sum(int n, const std::vector<LeafClass>& classes);

// Independent check: filters every edge multiset of the right size (n <= 5 is practical).
OracleCounts brute_force_counts(int n, bool allow_root_double_edge = true);

}  // namespace gennet
