#include "compser/harmonics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "compser/errors.hpp"
#include "compser/specfun.hpp"

namespace compser::harmonics {

namespace {

Integer binom_or_zero(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

// Moment ratio R(c, d; n) = E[x_n^(2c) |x'|^(2d)] on S^(n-1):
//   Gamma(c+1/2) Gamma(d+(n-1)/2) Gamma(n/2)
//   -----------------------------------------
//   Gamma(c+d+n/2) Gamma(1/2) Gamma((n-1)/2)
Rational zonal_moment_ratio(int c, int d, int n) {
    using specfun::gamma_half_integer;
    auto num = gamma_half_integer(2L * c + 1) * gamma_half_integer(2L * d + n - 1) *
               gamma_half_integer(n);
    auto den = gamma_half_integer(2L * (c + d) + n) * gamma_half_integer(1) *
               gamma_half_integer(n - 1);
    auto r = num / den;
    if (r.sqrt_pi_power != 0) {
        throw std::logic_error("zonal_moment_ratio: sqrt(pi) powers failed to cancel");
    }
    return r.coeff;
}

void check_slot(int n, int m, int l, const char* who) {
    if (n < 3) throw DomainError(std::string(who) + ": n must be >= 3");
    if (l < 0 || m < 0) throw DomainError(std::string(who) + ": m, l must be >= 0");
    if (l > m) throw DomainError(std::string(who) + ": l > m (empty slot)");
}

// Sectoral harmonic in the first two variables: Re or Im of (x_1 + i x_2)^l,
// integer coefficients, exactly harmonic.
Polynomial sectoral_harmonic(int nvars, int l, Sectoral w) {
    Polynomial y(nvars);
    if (l == 0) {
        if (w == Sectoral::imag) {
            throw DomainError("associated_harmonic: imaginary witness needs l >= 1");
        }
        return Polynomial::constant(nvars, Rational(1));
    }
    const int t0 = (w == Sectoral::real) ? 0 : 1;
    for (int t = t0; t <= l; t += 2) {
        // i^t alternates +1, -1 within each parity class.
        const int s = (t / 2) % 2 == 0 ? 1 : -1;
        Monomial mono;
        mono.e[0] = static_cast<std::uint8_t>(l - t);
        mono.e[1] = static_cast<std::uint8_t>(t);
        y.add_term(mono, Rational(s * binom_or_zero(l, t)));
    }
    return y;
}

} // namespace

std::int64_t dim_harmonics(int n, int m) {
    if (n < 2) throw DomainError("dim_harmonics: n must be >= 2");
    if (m < 0) throw DomainError("dim_harmonics: m must be >= 0");
    Integer d = binom_or_zero(n + m - 1, m) - binom_or_zero(n + m - 3, m - 2);
    if (!d.fits_slong_p()) throw ResourceError("dim_harmonics: result exceeds int64");
    return static_cast<std::int64_t>(d.get_si());
}

bool branching_identity_check(int n, int mmax) {
    if (n < 3) throw DomainError("branching_identity_check: n must be >= 3");
    Integer partial(0);
    for (int m = 0; m <= mmax; ++m) {
        partial += binom_or_zero(n - 1 + m - 1, m) - binom_or_zero(n - 1 + m - 3, m - 2);
        Integer dm = binom_or_zero(n + m - 1, m) - binom_or_zero(n + m - 3, m - 2);
        if (partial != dm) return false;
    }
    return true;
}

std::vector<Rational> radial_profile_coefficients(int n, int m, int l) {
    check_slot(n, m, l, "radial_profile_coefficients");
    const int kmax = (m - l) / 2;
    std::vector<Rational> c(kmax + 1);
    c[0] = 1;
    for (int k = 0; k < kmax; ++k) {
        const long a = m - l - 2L * k;
        c[k + 1] = c[k] * Rational(-a * (a - 1), (2L * k + 2) * (2L * k + 2 * l + n - 1));
        c[k + 1].canonicalize();
    }
    return c;
}

HarmonicPoly associated_harmonic(int n, int m, int l, Sectoral witness) {
    check_slot(n, m, l, "associated_harmonic");
    if (n > Monomial::kMaxVars) throw ResourceError("associated_harmonic: n > 16 unsupported");
    if (m > Monomial::kMaxExp) throw ResourceError("associated_harmonic: degree > 255 unsupported");

    const Polynomial y = sectoral_harmonic(n, l, witness);
    const auto c = radial_profile_coefficients(n, m, l);

    // rho^2 = x_1^2 + ... + x_{n-1}^2
    Polynomial rho2(n);
    for (int v = 0; v < n - 1; ++v) {
        Monomial mono;
        mono.e[v] = 2;
        rho2.add_term(mono, Rational(1));
    }

    Polynomial f(n);
    Polynomial rho_pow = Polynomial::constant(n, Rational(1));
    for (int k = 0; k < static_cast<int>(c.size()); ++k) {
        if (k > 0) rho_pow = rho_pow * rho2;
        Polynomial term = rho_pow * y;
        term *= c[k];
        f += term * Polynomial::monomial(n, n - 1, m - l - 2 * k, Rational(1));
    }
    return {n, m, f};
}

Rational sphere_moment(int n, const std::vector<int>& alpha) {
    if (n < 1) throw DomainError("sphere_moment: n must be >= 1");
    if (static_cast<int>(alpha.size()) > n) {
        throw DomainError("sphere_moment: more exponents than variables");
    }
    long total = 0;
    for (int a : alpha) {
        if (a < 0) throw DomainError("sphere_moment: negative exponent");
        if (a % 2 != 0) return Rational(0);
        total += a;
    }
    // prod_j Gamma((alpha_j+1)/2) * Gamma(n/2) / (Gamma((n+|alpha|)/2) * Gamma(1/2)^n)
    specfun::HalfGamma acc{Rational(1), -n};
    for (int a : alpha) acc = acc * specfun::gamma_half_integer(a + 1);
    acc.sqrt_pi_power += static_cast<int>(n - alpha.size());  // Gamma(1/2) factors
    acc = acc * specfun::gamma_half_integer(n) / specfun::gamma_half_integer(n + total);
    if (acc.sqrt_pi_power != 0) {
        throw std::logic_error("sphere_moment: sqrt(pi) powers failed to cancel");
    }
    return acc.coeff;
}

const Rational& SphereMomentCache::moment(const Monomial& m) {
    Monomial key = m;
    std::sort(key.e.begin(), key.e.end());
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    std::vector<int> alpha;
    alpha.reserve(Monomial::kMaxVars);
    for (auto e : key.e) {
        if (e != 0) alpha.push_back(e);
    }
    auto [ins, _] = memo_.emplace(key, sphere_moment(n_, alpha));
    return ins->second;
}

Rational norm_sq_sphere(const Polynomial& f, SphereMomentCache* cache) {
    SphereMomentCache local(f.nvars());
    SphereMomentCache& mc = cache ? *cache : local;
    const Polynomial fsq = f.square();
    Rational acc(0);
    for (const auto& [mono, coeff] : fsq.terms()) {
        if (!mono.all_even()) continue;
        acc += coeff * mc.moment(mono);
    }
    return acc;
}

Rational restriction_norm_ratio(const HarmonicPoly& f) {
    if (f.n < 3) throw DomainError("restriction_norm_ratio: ambient n must be >= 3");
    const Rational denom = norm_sq_sphere(f.poly);
    if (denom == 0) throw DomainError("restriction_norm_ratio: zero polynomial");
    Polynomial restricted = f.poly.substitute_zero(f.n - 1);
    if (restricted.is_zero()) return Rational(0);
    // The restriction lives on the equator sphere in one fewer ambient variable.
    Polynomial eq(f.n - 1);
    for (const auto& [mono, coeff] : restricted.terms()) eq.add_term(mono, coeff);
    const Rational num = norm_sq_sphere(eq);
    Rational r = num / denom;
    r.canonicalize();
    return r;
}

Rational branch_coeff_exact(int n, int m, int l) {
    check_slot(n, m, l, "branch_coeff_exact");
    if ((m - l) % 2 != 0) return Rational(0);  // parity vanishing
    const int kmax = (m - l) / 2;
    const auto c = radial_profile_coefficients(n, m, l);

    // D_j = sum_{k + k' = j} c_k c_k'
    std::vector<Rational> conv(2 * kmax + 1, Rational(0));
    for (int k = 0; k <= kmax; ++k) {
        for (int k2 = 0; k2 <= kmax; ++k2) conv[k + k2] += c[k] * c[k2];
    }

    Rational denom(0);
    for (int j = 0; j <= 2 * kmax; ++j) {
        if (conv[j] == 0) continue;
        denom += conv[j] * zonal_moment_ratio(m - l - j, j + l, n);
    }
    Rational r = c[kmax] * c[kmax] / denom;
    r.canonicalize();
    return r;
}

double branch_coeff_fast(int n, int m, int l) {
    check_slot(n, m, l, "branch_coeff_fast");
    const int k = m - l;
    if (k % 2 != 0) return 0.0;  // exact zero, no rounding involved
    const int j = k / 2;
    const double lambda = l + (n - 2) / 2.0;

    using specfun::gamma_ratio_log;
    const double log_c = 2.0 * gamma_ratio_log(j + lambda, j + 1.0) -
                         gamma_ratio_log(k + 2.0 * lambda, k + 1.0) + std::log(k + lambda) -
                         gamma_ratio_log(n / 2.0, (n - 1) / 2.0) +
                         (2.0 * lambda - 1.0) * std::log(2.0) - 0.5 * std::log(M_PI);
    return std::exp(log_c);
}

} // namespace compser::harmonics
