#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace compser {

// Exact arithmetic is carried on GMP rationals. mpq_class keeps values
// canonical (reduced, positive denominator) after every arithmetic
// operation, which the exact oracles rely on: equality is plain ==, and an
// exact zero is a zero numerator.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

inline Integer pow_int(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rat(const Rational& base, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    return r;  // already canonical: powers of coprime values stay coprime
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace compser
