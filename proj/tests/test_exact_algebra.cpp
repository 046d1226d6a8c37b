#include <gtest/gtest.h>

#include <random>

#include "gennet/algfun.hpp"
#include "gennet/jet.hpp"
#include "gennet/qsqrt2.hpp"
#include "gennet/series.hpp"

using namespace gennet;

namespace {

const AlgFun Z = AlgFun::z();
const AlgFun S = AlgFun::s();
const AlgFun ONE = AlgFun(1);

std::vector<BigRational> head(const SeriesZ& s, int n) {
  return std::vector<BigRational>(s.c.begin(), s.c.begin() + n + 1);
}

std::vector<BigRational> q(std::initializer_list<const char*> xs) {
  std::vector<BigRational> v;
  for (auto x : xs) v.push_back(parse_rational(x));
  return v;
}

AlgFun random_algfun(std::mt19937& rng) {
  std::uniform_int_distribution<int> coef(-3, 3);
  auto poly = [&](int deg) {
    std::vector<BigRational> c;
    for (int i = 0; i <= deg; ++i) c.push_back(coef(rng));
    return Poly(c);
  };
  Poly r = poly(2);
  if (r.is_zero()) r = Poly::constant(1);
  return AlgFun(poly(3), poly(2), r);
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), BigRational(-3, 2));
  EXPECT_EQ(to_string(BigRational(7, 1)), "7");
  EXPECT_EQ(to_string(BigRational(-3, 2)), "-3/2");
  EXPECT_TRUE(is_integer(ratio(10, 5)));
  EXPECT_EQ(ratio(21, 48), BigRational(7, 16));
  EXPECT_FALSE(is_integer(BigRational(1, 2)));
  EXPECT_EQ(factorial(10), BigInt(3628800));
  EXPECT_EQ(binomial(9, 4), BigInt(126));
  EXPECT_EQ(binomial(3, 5), BigInt(0));
}

TEST(Poly, DivisionAndGcd) {
  Poly a{1, 0, -2};  // 1 - 2z^2
  Poly b{1, 1};
  auto [quo, rem] = Poly::divmod(a * b, b);
  EXPECT_EQ(quo, a);
  EXPECT_TRUE(rem.is_zero());
  EXPECT_EQ(gcd(a * b, b * b), Poly({1, 1}));
  EXPECT_THROW(Poly::div_exact(a, b), std::domain_error);
  EXPECT_EQ(Poly({1, 2}).substitute_square(), Poly({1, 0, 2}));
  EXPECT_EQ(Poly({1}).shift(3), Poly::monomial(1, 3));
}

TEST(AlgFunAdd, InverseCancels) {
  EXPECT_TRUE((AlgFun(1) + AlgFun(-1)).is_zero());
  EXPECT_EQ(AlgFun(1) + AlgFun(-1), AlgFun());
}

TEST(AlgFunAdd, Doubling) { EXPECT_EQ(S + S, AlgFun(Poly(), Poly::constant(2))); }

TEST(AlgFunAdd, ConjugatesCancelRadical) {
  AlgFun twoz2 = 2 * Z * Z;
  EXPECT_EQ((ONE + S) / twoz2 + (ONE - S) / twoz2, ONE / (Z * Z));
}

TEST(AlgFunMul, DefiningRelation) { EXPECT_EQ(S * S, AlgFun(AlgFun::radicand())); }

TEST(AlgFunMul, ConjugateProduct) { EXPECT_EQ((ONE + S) * (ONE - S), 2 * Z * Z); }

TEST(AlgFunMul, FieldIdentity) { EXPECT_EQ(Z * (ONE / Z), ONE); }

TEST(AlgFunDiv, ConjugateRationalization) {
  EXPECT_EQ(ONE / (ONE - S), (ONE + S) / (2 * Z * Z));
}

TEST(AlgFunDiv, SelfQuotient) {
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    AlgFun x = random_algfun(rng);
    if (x.is_zero()) continue;
    EXPECT_EQ(x / x, ONE);
  }
}

TEST(AlgFunDiv, RadicandOverRoot) { EXPECT_EQ(AlgFun(AlgFun::radicand()) / S, S); }

TEST(AlgFunDiv, ZeroDivisorThrows) { EXPECT_THROW(ONE / AlgFun(), std::domain_error); }

TEST(AlgFunProperty, FieldAxiomsOnRandomElements) {
  std::mt19937 rng(11);
  for (int i = 0; i < 40; ++i) {
    AlgFun a = random_algfun(rng), b = random_algfun(rng), c = random_algfun(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    if (!b.is_zero()) EXPECT_EQ((a / b) * b, a);
    EXPECT_EQ(canonicalize(a), a);
    EXPECT_EQ(a.conjugate().conjugate(), a);
  }
}

TEST(AlgFunProperty, CanonicalRepresentationIsUnique) {
  AlgFun x(Poly{2, 4}, Poly{0, 2}, Poly{2});
  AlgFun y(Poly{1, 2}, Poly{0, 1}, Poly{1});
  EXPECT_EQ(x, y);
  EXPECT_EQ(x.r(), Poly{1});
}

TEST(SeriesExpand, Root) { EXPECT_EQ(head(series_expand(S, 4), 4), q({"1", "0", "-1", "0", "-1/2"})); }

TEST(SeriesExpand, MotzkinAtZeroMarker) {
  EXPECT_EQ(head(series_expand((ONE - S) / Z, 4), 4), q({"0", "1", "0", "1/2", "0"}));
}

TEST(SeriesExpand, Geometric) {
  EXPECT_EQ(head(series_expand(ONE / AlgFun(AlgFun::radicand()), 4), 4), q({"1", "0", "2", "0", "4"}));
}

TEST(SeriesExpand, PoleAtOriginThrows) { EXPECT_THROW(series_expand(ONE / Z, 3), std::domain_error); }

TEST(SeriesExpand, AgreesWithSeriesArithmetic) {
  std::mt19937 rng(3);
  const int N = 12;
  for (int i = 0; i < 20; ++i) {
    AlgFun a = random_algfun(rng), b = random_algfun(rng);
    if (a.r().coeff(0) == 0 || b.r().coeff(0) == 0) continue;
    EXPECT_EQ(series_expand(a * b, N), series_expand(a, N) * series_expand(b, N));
    EXPECT_EQ(series_expand(a + b, N), series_expand(a, N) + series_expand(b, N));
  }
  EXPECT_EQ(series_expand(S, N), sqrt_series(N));
  SeriesZ one(N);
  one[0] = 1;
  EXPECT_EQ(sqrt_series(N) * sqrt_series(N), series_expand(AlgFun(AlgFun::radicand()), N));
  EXPECT_EQ(series_inverse(sqrt_series(N)) * sqrt_series(N), one);
}

TEST(SeriesExpand, EgfCount) {
  SeriesZ s = series_expand((ONE - S) / Z, 5);
  EXPECT_EQ(s.egf_count(3), BigRational(3));
  EXPECT_EQ(s.egf_count(5), BigRational(60));  // 5! * 1/2
}

TEST(QSqrt2, ArithmeticAndEvaluation) {
  QSqrt2 r2 = QSqrt2::sqrt2();
  EXPECT_EQ(r2 * r2, QSqrt2(2, 0));
  EXPECT_EQ(QSqrt2(1, 0) / r2, QSqrt2(0, BigRational(1, 2)));
  // 1 - z + z^2 at 1/sqrt2 = 3/2 - sqrt2/2
  EXPECT_EQ(eval_at_inv_sqrt2(Poly{1, -1, 1}), QSqrt2(BigRational(3, 2), BigRational(-1, 2)));
  EXPECT_EQ(QSqrt2(0, BigRational(1, 4)).str(), "1/4*sqrt(2)");
}

class JetTest : public ::testing::Test {
 protected:
  ShapePtr two = make_shape({{"y1", 1}, {"y2", 1}});
  ShapePtr one = make_shape({{"y1", 1}});
  ShapePtr gen = make_shape({{"yg", 2}});
  MarkerJet c(const ShapePtr& sh, const AlgFun& x) { return MarkerJet::constant(sh, x); }
  MarkerJet m(const ShapePtr& sh, const std::string& n) { return MarkerJet::marker(sh, n); }
};

TEST_F(JetTest, ProductOfIndependentMarkers) {
  MarkerJet p = (c(two, 1) + m(two, "y1")) * (c(two, 1) + m(two, "y2"));
  MarkerJet expect = c(two, 1) + m(two, "y1") + m(two, "y2") + m(two, "y1") * m(two, "y2");
  EXPECT_EQ(p, expect);
  EXPECT_EQ(p.extract({1, 1}), ONE);
}

TEST_F(JetTest, NilpotentTruncation) { EXPECT_TRUE((m(one, "y1") * m(one, "y1")).is_zero()); }

TEST_F(JetTest, CapTwoSquare) {
  MarkerJet y = m(gen, "yg");
  EXPECT_EQ((c(gen, 1) + y) * (c(gen, 1) + y), c(gen, 1) + 2 * y + y * y);
}

TEST_F(JetTest, Inverse) {
  EXPECT_EQ((c(one, 1) + m(one, "y1")).inverse(), c(one, 1) - m(one, "y1"));
  EXPECT_EQ(c(one, 1).inverse(), c(one, 1));
  MarkerJet y = m(gen, "yg");
  MarkerJet inv = (c(gen, 2) + y).inverse();
  EXPECT_EQ(inv, c(gen, BigRational(1, 2)) - AlgFun(BigRational(1, 4)) * y + AlgFun(BigRational(1, 8)) * y * y);
  EXPECT_EQ(inv * (c(gen, 2) + y), c(gen, 1));
}

TEST_F(JetTest, SqrtBaseCase) { EXPECT_EQ(c(one, AlgFun(AlgFun::radicand())).sqrt(), c(one, S)); }

TEST_F(JetTest, SqrtPerfectSquare) {
  MarkerJet u = c(one, 1) + m(one, "y1");
  EXPECT_EQ((c(one, AlgFun(AlgFun::radicand())) * u * u).sqrt(), c(one, S) * u);
}

TEST_F(JetTest, SqrtOfMotzkinRadicand) {
  MarkerJet Y = m(one, "y1");
  MarkerJet rad = c(one, 1) + (Y * Y - c(one, 2)) * c(one, Z * Z) - c(one, 2 * Z) * Y;
  MarkerJet root = rad.sqrt();
  EXPECT_EQ(root, c(one, S) - c(one, Z / S) * Y);
  EXPECT_EQ(root * root, rad);
}

TEST_F(JetTest, Extract) {
  EXPECT_EQ((c(one, 1) + AlgFun(3) * m(one, "y1")).extract({1}), AlgFun(3));
  MarkerJet y = m(gen, "yg");
  AlgFun a = AlgFun(5), b = AlgFun(7);
  MarkerJet x = c(gen, 2) + a * y + b * y * y;
  EXPECT_EQ(x.extract({2}), 2 * b);
  EXPECT_EQ(x.extract({0}), AlgFun(2));
}

TEST_F(JetTest, AlignRestrictsToCommonMarkers) {
  ShapePtr wide = make_shape({{"y1", 2}});
  MarkerJet w = m(wide, "y1");
  auto [a, b] = align(w * w + w, m(one, "y1"));
  EXPECT_EQ(a, b);
  EXPECT_EQ(*a.shape(), *one);
  EXPECT_THROW(align(m(two, "y1"), m(one, "y1")), std::invalid_argument);
}
