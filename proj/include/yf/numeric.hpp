#pragma once

#include <string>
#include <string_view>

#include <gmpxx.h>

namespace yf {

// Unbounded integers and exact rationals. Counts are always nonnegative
// BigInt values; polynomial coefficients may be negative.
using BigInt = mpz_class;
using BigRat = mpq_class;

// Parses "a/b" or "a" into a canonical rational. Throws std::invalid_argument
// on malformed text or a zero denominator.
BigRat parse_rational(std::string_view text);

// Always "num/den", also for integers ("1/1").
std::string format_rational(const BigRat& q);

// Decimal rendering with 12 significant digits.
std::string format_float(const BigRat& q);
std::string format_float(double x);

double to_double(const BigRat& q);

// binom(a, b) with binom(a, b) = 0 for b > a.
BigInt binom(const BigInt& a, unsigned long b);
BigInt binom(unsigned long a, unsigned long b);

// Smallest integer >= q.
BigInt ceil(const BigRat& q);

} // namespace yf
