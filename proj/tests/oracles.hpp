#pragma once

// Test-only oracles, deliberately independent of the library's computation
// paths: sphere moments via the reduction recursion instead of Gamma
// products, log-Gamma ratios via telescoped products, spectra via the
// eigenvalue ratio recurrence, Gegenbauer values at 1 via the closed form.

#include <cmath>
#include <vector>

#include "compser/harmonics.hpp"
#include "compser/numerics.hpp"
#include "compser/polynomial.hpp"
#include "compser/rational.hpp"

namespace compser::testing {

// E[x^alpha] on S^(n-1) by the reduction
//   M(alpha) = (alpha_1 - 1)/(n + |alpha| - 2) * M(alpha - 2 e_1),  M(0) = 1.
inline Rational moment_recursion(int n, std::vector<int> alpha) {
    long total = 0;
    for (int a : alpha) {
        if (a % 2 != 0) return Rational(0);
        total += a;
    }
    if (total == 0) return Rational(1);
    for (std::size_t j = 0; j < alpha.size(); ++j) {
        if (alpha[j] >= 2) {
            auto reduced = alpha;
            reduced[j] -= 2;
            Rational r(alpha[j] - 1, n + total - 2);
            r.canonicalize();
            return r * moment_recursion(n, std::move(reduced));
        }
    }
    return Rational(1);
}

inline Rational poly_norm_sq_recursion(const Polynomial& f, int ambient_n) {
    const Polynomial fsq = f.square();
    Rational acc(0);
    for (const auto& [mono, coeff] : fsq.terms()) {
        std::vector<int> alpha;
        for (int v = 0; v < ambient_n; ++v) alpha.push_back(mono.e[v]);
        acc += coeff * moment_recursion(ambient_n, alpha);
    }
    return acc;
}

// Restriction-norm ratio with every moment supplied by the recursion oracle.
inline Rational norm_ratio_via_recursion(const harmonics::HarmonicPoly& f) {
    const Rational denom = poly_norm_sq_recursion(f.poly, f.n);
    const Polynomial restricted = f.poly.substitute_zero(f.n - 1);
    if (restricted.is_zero()) return Rational(0);
    Polynomial eq(f.n - 1);
    for (const auto& [mono, coeff] : restricted.terms()) eq.add_term(mono, coeff);
    return poly_norm_sq_recursion(eq, f.n - 1) / denom;
}

// ln(Gamma(a)/Gamma(b)) for half-integer a and integer b via telescoped
// products down to Gamma(1/2) = sqrt(pi) and Gamma(1) = 1.
inline double lgamma_ratio_product(double a, double b) {
    long double acc = 0.0L;
    long double x = a;
    while (x > 1.0L) {
        x -= 1.0L;
        acc += std::log(x);
    }
    if (std::fabs(static_cast<double>(x) - 0.5) < 1e-15) {
        acc += 0.5L * std::log(3.14159265358979323846264338327950288L);
    }
    long double y = b;
    while (y > 1.0L) {
        y -= 1.0L;
        acc -= std::log(y);
    }
    return static_cast<double>(acc);
}

// lambda_m(u) chained through the exact eigenvalue ratio recurrence
//   lambda_{m+1} = lambda_m * (m + rho(1-u)) / (m + rho(1+u)),  lambda_0 = 1.
inline std::vector<double> lambda_recurrence_oracle(int n, double u, int mmax) {
    const long double rho = (n - 1) / 2.0L;
    const long double a = rho * (1.0L - static_cast<long double>(u));
    const long double b = rho * (1.0L + static_cast<long double>(u));
    std::vector<double> lam(static_cast<std::size_t>(mmax) + 1);
    long double cur = 1.0L;
    lam[0] = 1.0;
    for (int m = 0; m < mmax; ++m) {
        cur *= (m + a) / (m + b);
        lam[static_cast<std::size_t>(m) + 1] = static_cast<double>(cur);
    }
    return lam;
}

// C_k^lambda(1) = (2 lambda)(2 lambda + 1)...(2 lambda + k - 1) / k!
inline Rational gegenbauer_at_one(int k, const Rational& lambda) {
    Rational acc(1);
    for (int j = 0; j < k; ++j) acc *= (2 * lambda + j);
    acc /= Rational(factorial(static_cast<unsigned long>(k)));
    acc.canonicalize();
    return acc;
}

} // namespace compser::testing
