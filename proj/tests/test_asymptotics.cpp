#include <gtest/gtest.h>

#include <boost/math/constants/constants.hpp>
#include <sstream>

#include "gennet/asymptotics.hpp"
#include "gennet/closed_forms.hpp"
#include "json.hpp"

using namespace gennet;

namespace {

HighFloat sqrt_pi() { return sqrt(boost::math::constants::pi<HighFloat>()); }

double d(const HighFloat& x) { return x.convert_to<double>(); }

}  // namespace

TEST(LeadingConstant, ExactValues) {
  EXPECT_EQ(dk_exact(1), QSqrt2(0, BigRational(1, 4)));
  EXPECT_EQ(dk_exact(2), QSqrt2(0, BigRational(1, 32)));
  EXPECT_EQ(dk_exact(3), QSqrt2(0, BigRational(1, 384)));
}

TEST(LeadingConstant, GammaFactor) {
  EXPECT_EQ(gamma_half_over_sqrt_pi(1), BigRational(1, 2));
  EXPECT_EQ(gamma_half_over_sqrt_pi(2), BigRational(15, 8));
  EXPECT_THROW(gamma_half_over_sqrt_pi(0), std::invalid_argument);
}

TEST(LeadingConstant, SingleReticulationCoefficient) {
  // c_1 = 2 d_1 = sqrt2 / 2
  EXPECT_EQ(QSqrt2(2, 0) * dk_exact(1), QSqrt2(0, BigRational(1, 2)));
  EXPECT_NEAR(d(second_order_coefficient(1)), d(-sqrt_pi() / 2), 1e-15);
}

TEST(VertexEstimate, EvenSizesVanish) {
  EXPECT_EQ(asym_vertex(1, 20, 1), 0);
  EXPECT_EQ(asym_vertex(2, 40, 2), 0);
}

TEST(VertexEstimate, RejectsBadArguments) {
  EXPECT_THROW(asym_vertex(1, 21, 3), std::invalid_argument);
  EXPECT_THROW(asym_vertex(1, 0, 1), std::invalid_argument);
  EXPECT_THROW(second_order_coefficient(4), std::invalid_argument);
}

TEST(VertexEstimate, SecondOrderImproves) {
  for (int k = 1; k <= 3; ++k)
    for (auto& r : convergence_table(k, {11, 21, 31, 41}))
      EXPECT_LT(abs(r.rel_err2), abs(r.rel_err1)) << k << " " << r.n;
}

TEST(VertexEstimate, FirstOrderErrorShrinks) {
  auto rows = convergence_table(1, {11, 21, 31, 41});
  for (size_t i = 1; i < rows.size(); ++i) EXPECT_LT(abs(rows[i].rel_err1), abs(rows[i - 1].rel_err1));
}

TEST(VertexEstimate, FittedResidualAtFortyOne) {
  // the residual approaches -sqrt(pi)/2 from above; at n = 41 it is still 16.5% short
  auto rows = convergence_table(1, {41, 101});
  HighFloat target = -sqrt_pi() / 2;
  EXPECT_NEAR(d(rows[0].fitted_residual), -0.7397, 1e-4);
  EXPECT_GT(d(abs(rows[0].fitted_residual / target - 1)), 0.10);
  EXPECT_LT(abs(rows[1].fitted_residual - target), abs(rows[0].fitted_residual - target));
  // two-point extrapolation in 1/sqrt(n) lands on the predicted coefficient
  HighFloat x0 = 1 / sqrt(HighFloat(41)), x1 = 1 / sqrt(HighFloat(101));
  HighFloat r0 = rows[0].fitted_residual, r1 = rows[1].fitted_residual;
  HighFloat limit = r1 - x1 * (r0 - r1) / (x0 - x1);
  EXPECT_NEAR(d(limit / target), 1.0, 0.01);
}

TEST(VertexEstimate, ExactCountsComeFromClosedFormAndSeries) {
  EXPECT_EQ(exact_vertex_count(1, 7), 30240);
  EXPECT_EQ(exact_vertex_count(2, 7), 97020);
  EXPECT_EQ(exact_vertex_count(3, 7), 104580);
}

TEST(TreeChildGap, BoundedAndDecreasing) {
  auto rows = convergence_table(1, {11, 21, 31, 41});
  for (size_t i = 0; i < rows.size(); ++i) {
    ASSERT_TRUE(rows[i].tree_child_gap);
    EXPECT_LT(d(*rows[i].tree_child_gap), 5);
    if (i) EXPECT_LT(*rows[i].tree_child_gap, *rows[i - 1].tree_child_gap);
  }
  EXPECT_FALSE(convergence_table(2, {11})[0].tree_child_gap);
}

TEST(LeafEstimate, ThirtyLeaves) {
  HighFloat ratio = asym_leaf(1, 30) / to_high(exact_leaf(1, 30, Stratum::All).value);
  EXPECT_GT(d(ratio), 0.5);
  EXPECT_LT(d(ratio), 1.5);
  EXPECT_GT(asym_leaf(1, 1), 0);
  EXPECT_THROW(asym_leaf(1, 0), std::invalid_argument);
}

TEST(LeafEstimate, ConsistentWithVertexEstimateViaStirling) {
  // l! / n! * 2 d_k (sqrt2/e)^n n^(n+2k-1) tends to 2^(3k-1) d_k (2/e)^l l^(l+2k-1)
  auto log_ratio = [](int k, int l) {
    int n = 2 * l + 2 * k - 1;
    return lgamma(HighFloat(l + 1)) - lgamma(HighFloat(n + 1)) + log(asym_vertex(k, n, 1)) - log(asym_leaf(k, l));
  };
  for (int k = 1; k <= 3; ++k) {
    HighFloat near = abs(log_ratio(k, 4000)), far = abs(log_ratio(k, 40000));
    EXPECT_LT(d(far), 5e-4) << k;
    EXPECT_LT(far * 5, near) << k;
  }
}

TEST(Table, EmptyInputGivesEmptyTable) { EXPECT_TRUE(convergence_table(1, {}).empty()); }

TEST(Table, SerializesDeterministically) {
  auto rows = convergence_table(1, {11, 21});
  std::ostringstream a, b, c;
  write_table_json(a, rows);
  write_table_json(b, convergence_table(1, {11, 21}));
  EXPECT_EQ(a.str(), b.str());
  auto j = nlohmann::json::parse(a.str());
  EXPECT_EQ(j[0]["exact"], "1247400000");
  write_table_csv(c, rows);
  EXPECT_EQ(c.str().substr(0, c.str().find('\n')), "k,n,exact,est1,est2,rel_err1,rel_err2,fitted_residual");
}
