#pragma once

#include <gmpxx.h>

#include <string>

namespace gennet {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigRational parse_rational(const std::string& text);
// num/den in lowest terms; den nonzero
BigRational ratio(long num, long den);
std::string to_string(const BigInt& x);
std::string to_string(const BigRational& x);

BigInt factorial(unsigned long n);
BigInt binomial(long n, long k);
bool is_integer(const BigRational& x);

}  // namespace gennet
