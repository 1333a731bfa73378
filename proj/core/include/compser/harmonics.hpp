#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "compser/polynomial.hpp"
#include "compser/rational.hpp"

namespace compser::harmonics {

// Dimension of the space of degree-m spherical harmonics on S^(n-1):
// binom(n+m-1, m) - binom(n+m-3, m-2).
std::int64_t dim_harmonics(int n, int m);

// dim(n, m) == sum_{l<=m} dim(n-1, l) for every m <= mmax, exact integers.
bool branching_identity_check(int n, int mmax);

// Choice of the fixed sectoral harmonic Y_l in the two equatorial
// variables: Re((x_1 + i x_2)^l) or Im((x_1 + i x_2)^l). The imaginary
// witness requires l >= 1. Branching ratios are independent of the choice
// (multiplicity-freeness); the alternate witness exists to test exactly that.
enum class Sectoral { real, imag };

// Exact homogeneous harmonic polynomial in n ambient variables.
struct HarmonicPoly {
    int n = 0;
    int degree = 0;
    Polynomial poly;
};

// A generator of the degree-l isotypic slot inside degree-m harmonics:
//   f = sum_k c_k x_n^(m-l-2k) * rho^(2k) * Y_l(x'),   rho^2 = |x'|^2,
// with c_0 = 1 and the c_k solving the harmonicity recurrence
//   (m-l-2k)(m-l-2k-1) c_k + (2k+2)(2k+2l+n-1) c_{k+1} = 0.
// The result is exactly harmonic.
HarmonicPoly associated_harmonic(int n, int m, int l, Sectoral witness = Sectoral::real);

// The radial-profile coefficients c_k above, as exact rationals.
std::vector<Rational> radial_profile_coefficients(int n, int m, int l);

// Moment of a monomial over S^(n-1) under the *probability* measure:
// zero when any exponent is odd, otherwise an exact rational assembled
// from half-integer Gamma values. alpha may be shorter than n (implicit
// zero exponents).
Rational sphere_moment(int n, const std::vector<int>& alpha);

// Memoized sphere moments for one ambient dimension; moments depend only
// on the multiset of exponents, so keys are sorted exponent vectors.
class SphereMomentCache {
public:
    explicit SphereMomentCache(int n) : n_(n) {}
    const Rational& moment(const Monomial& m);

private:
    int n_;
    std::unordered_map<Monomial, Rational, MonomialHash> memo_;
};

// Integral of f^2 over S^(nvars-1), probability measure, computed by exact
// sparse squaring of the monomial map and moment integration over the
// even-exponent monomials.
Rational norm_sq_sphere(const Polynomial& f, SphereMomentCache* cache = nullptr);

// ||restriction of f to x_n = 0||^2 on the equator S^(n-2) divided by
// ||f||^2 on S^(n-1), both probability measures, through the literal
// squared-monomial-map route above. This is the witness-level oracle: the
// choice of Y_l genuinely enters the computation.
Rational restriction_norm_ratio(const HarmonicPoly& f);

// The branching coefficient C(m, l, 0) as an exact rational. Evaluated by
// the equatorial reduction of the slot witness: with K = (m-l)/2, D_j the
// convolution of the radial coefficients, and R(c, d; n) the exact moment
// ratio of x_n^(2c) |x'|^(2d) on S^(n-1),
//   C(m, l, 0) = c_K^2 / sum_j D_j R(m-l-j, j+l; n).
// Identical to restriction_norm_ratio(associated_harmonic(n, m, l)) --
// asserted exactly in the test suite -- but stays feasible at degrees where
// the expanded monomial map of f^2 would not fit in memory.
// Exactly zero iff m - l is odd.
Rational branch_coeff_exact(int n, int m, int l);

// Floating C(m, l, 0) through log-Gamma evaluation of the closed form;
// exact zeros on odd-parity slots. Contract: relative error <= 1e-10
// against branch_coeff_exact for n <= 8, m <= 40.
double branch_coeff_fast(int n, int m, int l);

} // namespace compser::harmonics
