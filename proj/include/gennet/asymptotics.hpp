#pragma once
#include <optional>
#include <ostream>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "gennet/catalog.hpp"
#include "gennet/qsqrt2.hpp"

namespace gennet {

using HighFloat = boost::multiprecision::cpp_bin_float_50;

// Gamma(2k - 1/2) / sqrt(pi), a positive rational.
BigRational gamma_half_over_sqrt_pi(int k);

// Leading constant d_k of G_{k,n} ~ d_k (1 - (-1)^n) (sqrt2/e)^n n^(n+2k-1), exact in Q(sqrt 2).
// Computed from a_k of the assembled generating function as 2 a_k(1/sqrt2) / (4^k Gamma(2k-1/2)/sqrt(pi)).
QSqrt2 dk_exact(int k, Reading reading = Reading::Adjudicated);

// Second-order coefficient c'_k for k = 1, 2, 3.
HighFloat second_order_coefficient(int k);

HighFloat to_high(const BigRational& x);
HighFloat to_high(const QSqrt2& x);

// (sqrt2/e)^n n^(n+2k-1) (c_k + c'_k / sqrt n) with c_k = 2 d_k; order 1 drops c'_k. Zero at even n.
HighFloat asym_vertex(int k, int n, int order);
// 2^(3k-1) d_k (2/e)^l l^(l+2k-1)
HighFloat asym_leaf(int k, int l);

struct AsymptoticEstimate {
  int k = 0;
  int n = 0;
  BigRational exact;
  HighFloat est1;
  HighFloat est2;
  HighFloat rel_err1;
  HighFloat rel_err2;
  HighFloat fitted_residual;                // (exact / ((sqrt2/e)^n n^(n+2k-1)) - 2 d_k) sqrt n
  std::optional<HighFloat> tree_child_gap;  // k = 1 only: |G_{1,n} / T_{1,n} - 1| n
};

// Exact vertex-labeled count: closed form for k = 1, assembled series otherwise.
BigRational exact_vertex_count(int k, int n);

std::vector<AsymptoticEstimate> convergence_table(int k, const std::vector<int>& n_list);

std::string format_float(const HighFloat& x, int digits = 12);
void write_table_json(std::ostream& out, const std::vector<AsymptoticEstimate>& rows);
void write_table_csv(std::ostream& out, const std::vector<AsymptoticEstimate>& rows);

}  // namespace gennet
