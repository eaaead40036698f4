#pragma once

#include <gmpxx.h>

#include <string>

namespace flatcheck {

// GMP keeps mpq_class canonical after every arithmetic operation:
// gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_one(const Rational& r) { return r == 1; }

/// Canonical text: "a" for integers, "a/b" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

/// True iff numerator and denominator are coprime and the denominator is positive.
inline bool is_normalized(const Rational& r) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return g == 1 && sgn(r.get_den()) > 0;
}

}  // namespace flatcheck
