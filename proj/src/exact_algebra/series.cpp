#include "gennet/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace gennet {

BigRational SeriesZ::egf_count(int n) const {
  if (n < 0 || n > order) throw std::out_of_range("coefficient beyond truncation order");
  return c[n] * BigRational(factorial(n));
}

SeriesZ operator+(const SeriesZ& a, const SeriesZ& b) {
  SeriesZ r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) r[i] = a[i] + b[i];
  return r;
}

SeriesZ operator-(const SeriesZ& a, const SeriesZ& b) {
  SeriesZ r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) r[i] = a[i] - b[i];
  return r;
}

SeriesZ operator*(const SeriesZ& a, const SeriesZ& b) {
  SeriesZ r(std::min(a.order, b.order));
  for (int i = 0; i <= r.order; ++i) {
    if (sgn(a[i]) == 0) continue;
    for (int j = 0; i + j <= r.order; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

SeriesZ operator*(const BigRational& k, const SeriesZ& a) {
  SeriesZ r = a;
  for (auto& x : r.c) x *= k;
  return r;
}

SeriesZ series_inverse(const SeriesZ& a) {
  if (sgn(a[0]) == 0) throw std::domain_error("series inverse of non-unit");
  SeriesZ r(a.order);
  BigRational inv0 = 1 / a[0];
  r[0] = inv0;
  for (int i = 1; i <= a.order; ++i) {
    BigRational acc = 0;
    for (int j = 1; j <= i; ++j)
      if (sgn(a[j]) != 0) acc += a[j] * r[i - j];
    r[i] = -acc * inv0;
  }
  return r;
}

SeriesZ sqrt_series(int N) {
  SeriesZ r(N);
  // binom(1/2, j) * (-2)^j at z^(2j)
  BigRational b = 1;
  for (int j = 0; 2 * j <= N; ++j) {
    if (j > 0) b *= ratio(1 - 2 * (j - 1), 2 * j) * -2;
    r[2 * j] = b;
  }
  return r;
}

}  // namespace gennet
