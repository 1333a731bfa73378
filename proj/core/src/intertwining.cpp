#include "compser/intertwining.hpp"

#include <string>

#include "compser/errors.hpp"
#include "compser/numerics.hpp"
#include "compser/specfun.hpp"

namespace compser::intertwining {

Spectrum lambda_spectrum(int n, double u, int mmax) {
    if (n < 3) throw DomainError("lambda_spectrum: n must be >= 3");
    if (!(u > 0.0 && u < 1.0)) {
        throw DomainError("lambda_spectrum: u must lie in (0, 1), got " + std::to_string(u));
    }
    if (mmax < 0) throw DomainError("lambda_spectrum: mmax must be >= 0");

    const double rho = (n - 1) / 2.0;
    const double a = rho * (1.0 - u);
    const double b = rho * (1.0 + u);
    const double base = specfun::gamma_ratio_log(b, a);

    Spectrum s;
    s.n = n;
    s.u = u;
    s.log_values.resize(static_cast<std::size_t>(mmax) + 1);
    for (int m = 0; m <= mmax; ++m) {
        // Long double argument construction keeps m + offset on a consistent
        // grid across m, so consecutive eigenvalue ratios telescope; exact
        // antisymmetry of gamma_ratio_log makes log lambda_0 == 0.
        s.log_values[static_cast<std::size_t>(m)] = base + specfun::gamma_ratio_log(
            static_cast<long double>(m) + static_cast<long double>(a),
            static_cast<long double>(m) + static_cast<long double>(b));
    }
    return s;
}

double asymptotic_exponent(const Spectrum& spec, int m_lo, int m_hi) {
    if (m_lo < 10) throw DomainError("asymptotic_exponent: m_lo must be >= 10");
    if (m_hi < 2 * m_lo) throw DomainError("asymptotic_exponent: m_hi must be >= 2*m_lo");
    if (m_hi > spec.mmax()) throw DomainError("asymptotic_exponent: m_hi beyond spectrum");
    if (m_hi - m_lo + 1 < 10) throw DomainError("asymptotic_exponent: fewer than 10 samples");

    std::vector<double> xs, ys;
    xs.reserve(static_cast<std::size_t>(m_hi - m_lo) + 1);
    ys.reserve(static_cast<std::size_t>(m_hi - m_lo) + 1);
    for (int m = m_lo; m <= m_hi; ++m) {
        xs.push_back(std::log(static_cast<double>(m)));
        ys.push_back(spec.log_values[static_cast<std::size_t>(m)]);
    }
    return linear_fit(xs, ys).slope;
}

} // namespace compser::intertwining
