#pragma once
#include <chrono>
#include <functional>
#include <vector>

#include "gennet/oracle.hpp"

namespace gennet {

// Backtracking over parent assignments for the block layout of one (n, k).
class LayoutSearch {
 public:
  struct Choice {
    int a = -1;
    int b = -1;  // second parent of a reticulation, -1 otherwise
  };

  LayoutSearch(int n, int k, const OracleOptions& opts);
  bool valid() const { return valid_; }
  int tree_vertices() const { return t_; }
  int leaves() const { return l_; }
  // n! / (t! k! l!)
  BigInt multiplier() const;
  // independent subtrees of the search, split on the parents of vertex 1
  std::vector<std::vector<Choice>> tasks() const;
  void run(const std::vector<Choice>& prefix, const std::function<void(const Network&)>& fn) const;

 private:
  std::vector<Choice> choices(int v, const std::vector<int>& cap, const std::vector<Choice>& par) const;
  bool reaches(int target, int from, const std::vector<Choice>& par, int limit) const;

  int n_, k_, l_ = 0, t_ = 0;
  OracleOptions opts_;
  bool valid_ = false;
  std::vector<int> cap0_;
  std::vector<VertexType> kind_;
  bool has_deadline_ = false;
  std::chrono::steady_clock::time_point deadline_;
};

void check_oracle_size(int n, const OracleOptions& opts);
void run_parallel(size_t count, int threads, const std::function<void(size_t)>& job);

}  // namespace gennet
