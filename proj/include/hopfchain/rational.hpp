#pragma once

#include <gmpxx.h>

#include <string>

namespace hopfchain {

using Rational = mpq_class;
using BigRational = mpq_class;
using Integer = mpz_class;

Rational make_rational(long p, long q = 1);
Rational make_rational(const Integer& p, const Integer& q);

// "p/q", or "p" when q == 1.
std::string to_string(const Rational& r);
Rational parse_rational(const std::string& s);

Rational rational_pow(const Rational& base, long exponent);
Integer binomial(long n, long k);
Integer factorial(long n);
Integer integer_pow(long base, unsigned long exponent);

double to_double(const Rational& r);

}  // namespace hopfchain
