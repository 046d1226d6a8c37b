#pragma once

#include <vector>

#include "gennet/rational.hpp"

namespace gennet {

// Truncated power series c[0] + c[1] z + ... + c[order] z^order.
struct SeriesZ {
  int order = 0;
  std::vector<BigRational> c;

  SeriesZ() : c(1) {}
  explicit SeriesZ(int n) : order(n), c(n + 1) {}

  const BigRational& operator[](int i) const { return c[i]; }
  BigRational& operator[](int i) { return c[i]; }
  bool operator==(const SeriesZ& o) const { return order == o.order && c == o.c; }

  // n! * [z^n]
  BigRational egf_count(int n) const;
};

SeriesZ operator+(const SeriesZ& a, const SeriesZ& b);
SeriesZ operator-(const SeriesZ& a, const SeriesZ& b);
SeriesZ operator*(const SeriesZ& a, const SeriesZ& b);
SeriesZ operator*(const BigRational& k, const SeriesZ& a);
SeriesZ series_inverse(const SeriesZ& a);

// Taylor series of sqrt(1 - 2 z^2) through z^N
SeriesZ sqrt_series(int N);

}  // namespace gennet
