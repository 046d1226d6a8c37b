#include <atomic>
#include <chrono>
#include <future>

#include "gennet/oracle.hpp"
#include "layout.hpp"

namespace gennet {

LayoutSearch::LayoutSearch(int n, int k, const OracleOptions& opts)
    : n_(n), k_(k), opts_(opts) {
  l_ = (n + 1) / 2 - k;
  t_ = l_ + k - 2;
  valid_ = n % 2 == 1 && k >= 0 && l_ >= 1 && t_ >= 0;
  if (!valid_) return;
  cap0_.assign(n, 0);
  kind_.assign(n, VertexType::Leaf);
  kind_[0] = VertexType::Root;
  cap0_[0] = 2;
  for (int v = 1; v <= t_; ++v) {
    kind_[v] = VertexType::Tree;
    cap0_[v] = 2;
  }
  for (int v = t_ + 1; v <= t_ + k; ++v) {
    kind_[v] = VertexType::Reticulation;
    cap0_[v] = 1;
  }
  if (opts.budget_seconds > 0) {
    deadline_ = std::chrono::steady_clock::now() +
                std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                    std::chrono::duration<double>(opts.budget_seconds));
    has_deadline_ = true;
  }
}

BigInt LayoutSearch::multiplier() const {
  return factorial(n_) / (factorial(t_) * factorial(k_) * factorial(l_));
}

std::vector<LayoutSearch::Choice> LayoutSearch::choices(int v, const std::vector<int>& cap,
                                                        const std::vector<Choice>& par) const {
  std::vector<Choice> out;
  std::vector<int> cands;
  for (int p = 0; p < n_; ++p)
    if (p != v && cap[p] > 0 && !reaches(v, p, par, v)) cands.push_back(p);
  if (kind_[v] != VertexType::Reticulation) {
    for (int p : cands) out.push_back({p, -1});
    return out;
  }
  for (size_t i = 0; i < cands.size(); ++i)
    for (size_t j = i; j < cands.size(); ++j) {
      int p = cands[i], q = cands[j];
      if (p == q && (cap[p] < 2 || (p == 0 && !opts_.allow_root_double_edge))) continue;
      out.push_back({p, q});
    }
  return out;
}

// true if `target` is an ancestor of (or equal to) `from` along parent links assigned before vertex `limit`
bool LayoutSearch::reaches(int target, int from, const std::vector<Choice>& par, int limit) const {
  int stack[64];
  int top = 0;
  unsigned long long seen = 1ULL << from;
  stack[top++] = from;
  while (top) {
    int x = stack[--top];
    if (x == target) return true;
    if (x == 0 || x >= limit) continue;
    for (int y : {par[x].a, par[x].b}) {
      if (y < 0 || (seen >> y & 1)) continue;
      seen |= 1ULL << y;
      stack[top++] = y;
    }
  }
  return false;
}
std::vector<std::vector<LayoutSearch::Choice>> LayoutSearch::tasks() const {
  std::vector<std::vector<Choice>> out;
  if (!valid_) return out;
  std::vector<Choice> par(n_, {-1, -1});
  for (auto c : choices(1, cap0_, par)) out.push_back({c});
  return out;
}

void LayoutSearch::run(const std::vector<Choice>& prefix,
                       const std::function<void(const Network&)>& fn) const {
  std::vector<int> cap = cap0_;
  std::vector<Choice> par(n_, {-1, -1});
  int v = 1;
  for (auto c : prefix) {
    par[v] = c;
    --cap[c.a];
    if (c.b >= 0) --cap[c.b];
    ++v;
  }
  long long nodes = 0;
  Network g;
  g.n = n_;
  std::function<void(int)> rec = [&](int u) {
    if (has_deadline_ && (++nodes & 0xFFF) == 0 && std::chrono::steady_clock::now() > deadline_)
      throw BudgetExceeded();
    if (u == n_) {
      g.edges.clear();
      for (int x = 1; x < n_; ++x) {
        g.edges.push_back({par[x].a, x});
        if (par[x].b >= 0) g.edges.push_back({par[x].b, x});
      }
      fn(g);
      return;
    }
    for (auto c : choices(u, cap, par)) {
      par[u] = c;
      --cap[c.a];
      if (c.b >= 0) --cap[c.b];
      rec(u + 1);
      ++cap[c.a];
      if (c.b >= 0) ++cap[c.b];
    }
    par[u] = {-1, -1};
  };
  rec(v);
}

void check_oracle_size(int n, const OracleOptions& opts) {
  if (n > opts.max_n)
    throw std::invalid_argument("n = " + std::to_string(n) + " exceeds the oracle maximum " +
                                std::to_string(opts.max_n));
}

void for_each_layout_network(int n, int k, const OracleOptions& opts,
                             const std::function<void(const Network&)>& fn) {
  check_oracle_size(n, opts);
  LayoutSearch s(n, k, opts);
  for (auto& task : s.tasks()) s.run(task, fn);
}

EnumerationResult enumerate(int n, const OracleOptions& opts, std::optional<int> only_k) {
  check_oracle_size(n, opts);
  EnumerationResult res;
  res.n = n;
  if (n % 2 == 0 || n < 3) return res;
  for (int k = 0; k <= (n + 1) / 2 - 1; ++k) {
    if (only_k && *only_k != k) continue;
    LayoutSearch s(n, k, opts);
    if (!s.valid()) continue;
    auto tasks = s.tasks();
    std::vector<std::map<std::tuple<int, int, bool>, long long>> part(tasks.size());
    run_parallel(tasks.size(), opts.threads, [&](size_t i) {
      s.run(tasks[i], [&](const Network& g) {
        Classification c = classify(g);
        ++part[i][{c.k, c.r, c.tree_child}];
      });
    });
    BigInt mult = s.multiplier();
    for (auto& m : part)
      for (auto& [key, c] : m) res.counts[key] += mult * BigInt(static_cast<long>(c));
  }
  return res;
}

void run_parallel(size_t count, int threads, const std::function<void(size_t)>& job) {
  if (threads <= 1 || count <= 1) {
    for (size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::future<void>> workers;
  for (int w = 0; w < threads; ++w)
    workers.push_back(std::async(std::launch::async, [&] {
      for (size_t i = next++; i < count; i = next++) job(i);
    }));
  for (auto& f : workers) f.get();
}

}  // namespace gennet
