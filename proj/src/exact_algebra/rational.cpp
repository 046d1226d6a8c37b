#include "gennet/rational.hpp"

#include <stdexcept>

namespace gennet {

BigRational parse_rational(const std::string& text) {
  BigRational r;
  if (text.empty() || r.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational: '" + text + "'");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

BigRational ratio(long num, long den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& x) { return x.get_str(); }

std::string to_string(const BigRational& x) { return x.get_str(); }

BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

bool is_integer(const BigRational& x) { return x.get_den() == 1; }

}  // namespace gennet
