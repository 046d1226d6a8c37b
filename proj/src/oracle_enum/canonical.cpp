#include <algorithm>
#include <mutex>
#include <numeric>

#include "gennet/oracle.hpp"
#include "layout.hpp"

namespace gennet {

namespace {

// Replaces each signature by its rank among the distinct signatures.
std::vector<int> rank_signatures(const std::vector<std::vector<long long>>& sig) {
  std::vector<std::vector<long long>> uniq = sig;
  std::sort(uniq.begin(), uniq.end());
  uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
  std::vector<int> out(sig.size());
  for (size_t v = 0; v < sig.size(); ++v)
    out[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
  return out;
}

}  // namespace

CanonicalForm canonical_form(const Network& g) {
  auto type = vertex_types(g);
  int n = g.n;
  std::vector<std::vector<int>> ch(n), par(n);
  for (auto [u, v] : g.edges) {
    ch[u].push_back(v);
    par[v].push_back(u);
  }

  std::vector<int> leaf_rank(n, -1);
  int leaves = 0;
  for (int v = 0; v < n; ++v)
    if (type[v] == VertexType::Leaf) leaf_rank[v] = leaves++;

  // leaf-descendant sets, children before parents
  std::vector<unsigned long long> below(n, 0);
  std::vector<int> order(n), indeg(n);
  for (int v = 0; v < n; ++v) indeg[v] = static_cast<int>(par[v].size());
  {
    std::vector<int> stack;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) stack.push_back(v);
    int pos = 0;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      order[pos++] = x;
      for (int c : ch[x])
        if (--indeg[c] == 0) stack.push_back(c);
    }
  }
  for (int i = n - 1; i >= 0; --i) {
    int v = order[i];
    if (leaf_rank[v] >= 0) below[v] = 1ULL << leaf_rank[v];
    for (int c : ch[v]) below[v] |= below[c];
  }

  std::vector<std::vector<long long>> sig(n);
  for (int v = 0; v < n; ++v) {
    sig[v] = {static_cast<long long>(type[v]), static_cast<long long>(below[v])};
    if (leaf_rank[v] >= 0) sig[v].push_back(leaf_rank[v]);
  }
  std::vector<int> color = rank_signatures(sig);
  int classes = *std::max_element(color.begin(), color.end()) + 1;
  while (true) {
    for (int v = 0; v < n; ++v) {
      std::vector<long long> s{color[v]};
      std::vector<long long> cs, ps;
      for (int c : ch[v]) cs.push_back(color[c]);
      for (int p : par[v]) ps.push_back(color[p]);
      std::sort(cs.begin(), cs.end());
      std::sort(ps.begin(), ps.end());
      s.push_back(static_cast<long long>(cs.size()));
      s.insert(s.end(), cs.begin(), cs.end());
      s.push_back(-1);
      s.insert(s.end(), ps.begin(), ps.end());
      sig[v] = std::move(s);
    }
    std::vector<int> next = rank_signatures(sig);
    int next_classes = *std::max_element(next.begin(), next.end()) + 1;
    color = std::move(next);
    if (next_classes == classes) break;
    classes = next_classes;
  }

  // internal vertices grouped into cells, cells ordered by color
  std::vector<int> internal;
  for (int v = 0; v < n; ++v)
    if (leaf_rank[v] < 0) internal.push_back(v);
  std::stable_sort(internal.begin(), internal.end(),
                   [&](int a, int b) { return color[a] < color[b]; });
  std::vector<std::pair<int, int>> cells;  // [begin, end) into internal
  for (size_t i = 0; i < internal.size();) {
    size_t j = i;
    while (j < internal.size() && color[internal[j]] == color[internal[i]]) ++j;
    cells.push_back({static_cast<int>(i), static_cast<int>(j)});
    i = j;
  }
  int m = static_cast<int>(internal.size());

  std::vector<int> label(n);
  auto encode = [&] {
    for (int i = 0; i < m; ++i) label[internal[i]] = i;
    for (int v = 0; v < n; ++v)
      if (leaf_rank[v] >= 0) label[v] = m + leaf_rank[v];
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (auto [u, v] : g.edges) e.push_back({label[u], label[v]});
    std::sort(e.begin(), e.end());
    std::string code;
    code.reserve(2 * e.size() + 1);
    code.push_back(static_cast<char>(n));
    for (auto [u, v] : e) {
      code.push_back(static_cast<char>(u));
      code.push_back(static_cast<char>(v));
    }
    return code;
  };

  CanonicalForm best;
  best.automorphisms = 0;
  bool first = true;
  for (auto [b, e] : cells) std::sort(internal.begin() + b, internal.begin() + e);
  // odometer over the permutations of every cell
  while (true) {
    std::string code = encode();
    if (first || code < best.code) {
      best.code = std::move(code);
      best.automorphisms = 1;
      first = false;
    } else if (code == best.code) {
      ++best.automorphisms;
    }
    size_t c = 0;
    for (; c < cells.size(); ++c) {
      auto [b, e] = cells[c];
      if (std::next_permutation(internal.begin() + b, internal.begin() + e)) break;
    }
    if (c == cells.size()) break;
  }
  return best;
}

std::vector<LeafClass> leaf_classes(int n, int k, const OracleOptions& opts) {
  check_oracle_size(n, opts);
  LayoutSearch s(n, k, opts);
  std::vector<LeafClass> out;
  if (!s.valid()) return out;
  auto tasks = s.tasks();
  std::vector<std::map<std::string, LeafClass>> part(tasks.size());
  run_parallel(tasks.size(), opts.threads, [&](size_t i) {
    s.run(tasks[i], [&](const Network& g) {
      CanonicalForm f = canonical_form(g);
      auto it = part[i].find(f.code);
      if (it == part[i].end()) {
        LeafClass c;
        c.code = f.code;
        c.cls = classify(g);
        c.automorphisms = f.automorphisms;
        c.representatives = 1;
        part[i].emplace(f.code, c);
      } else {
        ++it->second.representatives;
      }
    });
  });
  std::map<std::string, LeafClass> all;
  for (auto& p : part)
    for (auto& [code, c] : p) {
      auto it = all.find(code);
      if (it == all.end()) all.emplace(code, c);
      else it->second.representatives += c.representatives;
    }
  for (auto& [code, c] : all) out.push_back(c);
  return out;
}

static bool in_stratum(const Classification& c, Stratum s) {
  return s == Stratum::All || (s == Stratum::Mult) == (c.r > 0);
}

BigInt count_leaf_labeled(int l, int k, Stratum stratum, const OracleOptions& opts) {
  BigInt count = 0;
  for (auto& c : leaf_classes(2 * l + 2 * k - 1, k, opts))
    if (in_stratum(c.cls, stratum)) ++count;
  return count;
}

long long SymmetryCensus::symmetric_classes() const {
  long long s = 0;
  for (auto& [aut, c] : classes_by_aut)
    if (aut > 1) s += c;
  return s;
}

SymmetryCensus symmetry_census(int n, int k, Stratum stratum, const OracleOptions& opts) {
  SymmetryCensus sc;
  sc.n = n;
  sc.k = k;
  for (auto& c : leaf_classes(n, k, opts)) {
    if (!in_stratum(c.cls, stratum)) continue;
    ++sc.classes_by_aut[c.automorphisms];
    sc.vertex_labeled_by_aut[c.automorphisms] += orbit_sum(n, {c});
  }
  return sc;
}

BigInt orbit_sum(int n, const std::vector<LeafClass>& classes) {
  BigInt s = 0;
  for (auto& c : classes) {
    int l = c.cls.leaves;
    BigInt internal = factorial(n - l);
    BigInt aut(static_cast<long>(c.automorphisms));
    if (internal % aut != 0) throw std::logic_error("automorphism count does not divide");
    s += binomial(n, l) * (internal / aut);
  }
  return s;
}

}  // namespace gennet
