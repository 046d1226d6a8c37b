#include <algorithm>
#include <cctype>
#include <deque>

#include "gennet/oracle.hpp"

namespace gennet {

std::vector<VertexType> vertex_types(const Network& g) {
  if (g.n <= 0) throw InvalidNetwork("network has no vertices");
  std::vector<int> in(g.n), out(g.n);
  for (auto [u, v] : g.edges) {
    if (u < 0 || v < 0 || u >= g.n || v >= g.n) throw InvalidNetwork("edge endpoint out of range");
    if (u == v) throw InvalidNetwork("loop edge");
    ++out[u];
    ++in[v];
  }
  std::vector<VertexType> t(g.n);
  int roots = 0;
  for (int v = 0; v < g.n; ++v) {
    if (in[v] == 0 && out[v] == 2) {
      t[v] = VertexType::Root;
      ++roots;
    } else if (in[v] == 1 && out[v] == 2) {
      t[v] = VertexType::Tree;
    } else if (in[v] == 2 && out[v] == 1) {
      t[v] = VertexType::Reticulation;
    } else if (in[v] == 1 && out[v] == 0) {
      t[v] = VertexType::Leaf;
    } else {
      throw InvalidNetwork("vertex " + std::to_string(v) + " has degrees (" + std::to_string(in[v]) +
                           ", " + std::to_string(out[v]) + ")");
    }
  }
  if (roots != 1) throw InvalidNetwork("expected exactly one root");

  std::vector<std::vector<int>> ch(g.n);
  std::vector<int> indeg = in;
  for (auto [u, v] : g.edges) ch[u].push_back(v);
  std::deque<int> queue;
  for (int v = 0; v < g.n; ++v)
    if (indeg[v] == 0) queue.push_back(v);
  int seen = 0;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop_front();
    ++seen;
    for (int c : ch[x])
      if (--indeg[c] == 0) queue.push_back(c);
  }
  if (seen != g.n) throw InvalidNetwork("network has a directed cycle");

  // with one source and no cycle every vertex is reachable from the root
  std::map<std::pair<int, int>, int> mult;
  for (auto e : g.edges) ++mult[e];
  for (auto& [e, m] : mult)
    if (m > 2) throw InvalidNetwork("edge multiplicity above 2");
  return t;
}

Classification classify(const Network& g) {
  auto t = vertex_types(g);
  Classification c;
  std::vector<std::vector<int>> ch(g.n), par(g.n);
  for (auto [u, v] : g.edges) {
    ch[u].push_back(v);
    par[v].push_back(u);
  }
  for (int v = 0; v < g.n; ++v) {
    if (t[v] == VertexType::Reticulation) {
      ++c.k;
      if (par[v][0] == par[v][1]) ++c.r;
    }
    if (t[v] == VertexType::Leaf) ++c.leaves;
  }
  c.tree_child = c.r == 0;
  for (int v = 0; v < g.n && c.tree_child; ++v) {
    if (t[v] == VertexType::Leaf) continue;
    bool ok = std::any_of(ch[v].begin(), ch[v].end(),
                          [&](int x) { return t[x] != VertexType::Reticulation; });
    if (!ok) c.tree_child = false;
  }
  return c;
}

double parse_budget(const std::string& text) {
  if (text.empty() || text == "none" || text == "0") return 0;
  size_t pos = 0;
  double v = std::stod(text, &pos);
  std::string unit = text.substr(pos);
  if (v < 0) throw std::invalid_argument("negative budget");
  if (unit.empty() || unit == "s") return v;
  if (unit == "m") return v * 60;
  if (unit == "h") return v * 3600;
  throw std::invalid_argument("unknown budget unit '" + unit + "'");
}

void write_edge_list(std::ostream& out, const Network& g) {
  Classification c = classify(g);
  out << g.n << " " << c.k << " " << c.r << "\n";
  auto edges = g.edges;
  std::sort(edges.begin(), edges.end());
  for (auto [u, v] : edges) out << u + 1 << " " << v + 1 << "\n";
}

CountTable EnumerationResult::table() const {
  CountTable t;
  t.provenance = "oracle";
  for (auto& [key, c] : counts) {
    auto [k, r, tc] = key;
    BigRational v(c);
    t.add({k, n, Labeling::Vertex, Stratum::All}, v);
    t.add({k, n, Labeling::Vertex, r > 0 ? Stratum::Mult : Stratum::NoMult}, v);
  }
  return t;
}

BigInt EnumerationResult::total(int k) const {
  BigInt s = 0;
  for (auto& [key, c] : counts)
    if (std::get<0>(key) == k) s += c;
  return s;
}

BigInt EnumerationResult::tree_child(int k) const {
  BigInt s = 0;
  for (auto& [key, c] : counts)
    if (std::get<0>(key) == k && std::get<2>(key)) s += c;
  return s;
}

}  // namespace gennet
