#include <functional>

#include "gennet/oracle.hpp"

namespace gennet {

OracleCounts brute_force_counts(int n, bool allow_root_double_edge) {
  OracleCounts counts;
  if (n < 1) return counts;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v) pairs.push_back({u, v});
  const int P = static_cast<int>(pairs.size());
  std::vector<int> in(n), out(n), mult(P);

  auto accept = [&] {
    int roots = 0;
    for (int v = 0; v < n; ++v) {
      bool ok = (in[v] == 0 && out[v] == 2) || (in[v] == 1 && (out[v] == 2 || out[v] == 0)) ||
                (in[v] == 2 && out[v] == 1);
      if (!ok) return;
      if (in[v] == 0) ++roots;
    }
    if (roots != 1) return;
    Network g;
    g.n = n;
    for (int i = 0; i < P; ++i)
      for (int m = 0; m < mult[i]; ++m) g.edges.push_back(pairs[i]);
    if (!allow_root_double_edge)
      for (int i = 0; i < P; ++i)
        if (mult[i] == 2 && in[pairs[i].first] == 0) return;
    Classification c;
    try {
      c = classify(g);
    } catch (const InvalidNetwork&) {
      return;  // cyclic
    }
    ++counts[{c.k, c.r, c.tree_child}];
  };

  // every vertex but the root has in-degree 1 or 2 and out-degree at most 2
  std::function<void(int, int)> rec = [&](int i, int remaining) {
    if (remaining == 0) {
      accept();
      return;
    }
    if (i == P) return;
    auto [u, v] = pairs[i];
    for (int m = 0; m <= 2 && m <= remaining; ++m) {
      if (out[u] + m > 2 || in[v] + m > 2) break;
      mult[i] = m;
      out[u] += m;
      in[v] += m;
      rec(i + 1, remaining - m);
      out[u] -= m;
      in[v] -= m;
    }
    mult[i] = 0;
  };
  for (int k = 0; 2 * k < n + 1; ++k) rec(0, n - 1 + k);
  return counts;
}

}  // namespace gennet
