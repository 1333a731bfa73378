#pragma once

#include <vector>

#include "compser/rational.hpp"

namespace compser::specfun {

// log |Gamma(x)| with the sign of Gamma(x). Only x > 0 is supported, so
// sign is always +1; the field is kept so downstream code never has to
// assume positivity silently.
struct LogGammaValue {
    double log_abs = 0.0;
    int sign = +1;
};

// Natural log of Gamma(x), x > 0. Evaluated internally in extended
// precision (Stirling series plus argument shift), rounded once to double.
// Relative accuracy of exp(log_abs) vs Gamma(x) is ~1 ulp on [0.5, 200].
LogGammaValue log_gamma(double x);

// log(Gamma(a)/Gamma(b)) for a, b > 0. Antisymmetric exactly as evaluated:
// gamma_ratio_log(a, b) == -gamma_ratio_log(b, a), and 0 for a == b.
// When |a - b| < 1 the difference is formed term-by-term in the Stirling
// expansion (log1p form), never by cancelling two large log-Gamma values.
double gamma_ratio_log(double a, double b);

// Extended-precision-argument entry: lets callers build arguments like
// m + offset without a double rounding, so ratios of neighbouring Gamma
// values telescope consistently (the spectrum recurrence relies on this).
double gamma_ratio_log(long double a, long double b);

// The power-law exponent in Gamma(m + a_offset)/Gamma(m + b_offset)
// ~ m^(a_offset - b_offset) as m -> infinity.
double stirling_ratio_exponent(double a_offset, double b_offset);

// Gamma at a positive half-integer argument, kept exact as
// coeff * sqrt(pi)^sqrt_pi_power. Integer arguments have power 0
// (Gamma(k) = (k-1)!), half-odd arguments have power 1
// (Gamma(k + 1/2) = (2k)!/(4^k k!) * sqrt(pi)).
struct HalfGamma {
    Rational coeff;
    int sqrt_pi_power = 0;

    HalfGamma operator*(const HalfGamma& o) const {
        return {coeff * o.coeff, sqrt_pi_power + o.sqrt_pi_power};
    }
    HalfGamma operator/(const HalfGamma& o) const {
        return {coeff / o.coeff, sqrt_pi_power - o.sqrt_pi_power};
    }
};

// Gamma(twice_x / 2) for twice_x >= 1.
HalfGamma gamma_half_integer(long twice_x);

// Gegenbauer (ultraspherical) polynomial C_k^lambda in the monomial basis,
// with exact rational coefficients from the three-term recurrence.
// coeffs[j] multiplies t^j; parity makes every other entry exactly zero.
struct GegenbauerPoly {
    int degree = 0;
    Rational lambda;
    std::vector<Rational> coeffs;

    Rational eval(const Rational& t) const;
};

GegenbauerPoly gegenbauer(int k, const Rational& lambda);

} // namespace compser::specfun
