// Arbitrary-precision scalars shared by every module.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace loghilb {

using Integer = mpz_class;
using Rational = mpq_class;

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

/// Returns g = gcd(a, b) >= 0 and Bezout cofactors with s*a + t*b == g.
inline Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer g;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer gcd_of(const std::vector<Integer>& values) {
  Integer g = 0;
  for (const auto& v : values) g = gcd(g, v);
  return g;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

inline Integer power(const Integer& base, unsigned long exp) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

// Floor division with remainder in [0, |b|).
inline void floor_divmod(const Integer& a, const Integer& b, Integer& q, Integer& r) {
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (r < 0) {  // only when b < 0
    r -= b;
    q += 1;
  }
}

inline std::string to_string(const Integer& v) { return v.get_str(); }
inline std::string to_string(const Rational& v) { return v.get_str(); }

}  // namespace loghilb
