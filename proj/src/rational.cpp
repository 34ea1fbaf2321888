#include "hopfchain/rational.hpp"

#include "hopfchain/error.hpp"

namespace hopfchain {

Rational make_rational(long p, long q) {
  if (q == 0) fail(ErrorCode::invalid_input, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational make_rational(const Integer& p, const Integer& q) {
  if (q == 0) fail(ErrorCode::invalid_input, "zero denominator");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& s) {
  Rational r;
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      r = Rational(Integer(s));
    } else {
      Integer p(s.substr(0, slash));
      Integer q(s.substr(slash + 1));
      if (q == 0) fail(ErrorCode::invalid_input, "zero denominator in '" + s + "'");
      r = Rational(p, q);
      r.canonicalize();
    }
  } catch (const std::invalid_argument&) {
    fail(ErrorCode::invalid_input, "not a rational number: '" + s + "'");
  }
  return r;
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) fail(ErrorCode::invalid_input, "zero to a negative power");
    Rational inv = 1 / base;
    return rational_pow(inv, -exponent);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  if (n < 0) fail(ErrorCode::invalid_input, "negative factorial");
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Integer integer_pow(long base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), Integer(base).get_mpz_t(), exponent);
  return r;
}

double to_double(const Rational& r) { return r.get_d(); }

}  // namespace hopfchain
