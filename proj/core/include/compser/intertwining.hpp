#pragma once

#include <cmath>
#include <vector>

namespace compser::intertwining {

// Eigenvalues lambda_m(u) of the standard intertwining operator on the
// K-types of the spherical principal series of SO(n,1), normalized to
// lambda_0 = 1 and stored in log space:
//   lambda_m(u) = [Gamma(rho(1+u))/Gamma(rho(1-u))]
//               * [Gamma(m + rho(1-u))/Gamma(m + rho(1+u))],  rho = (n-1)/2.
// Positive throughout 0 < u < 1, strictly decreasing in m, and decaying
// like m^(-(n-1)u); that decay exponent is exactly the weight the series
// criterion uses.
struct Spectrum {
    int n = 0;
    double u = 0.0;
    std::vector<double> log_values;  // index m = 0..mmax

    int mmax() const { return static_cast<int>(log_values.size()) - 1; }
    double lambda(int m) const { return std::exp(log_values[static_cast<std::size_t>(m)]); }
};

Spectrum lambda_spectrum(int n, double u, int mmax);

// Least-squares slope of log lambda_m against log m over [m_lo, m_hi].
// Requires m_lo >= 10, m_hi >= 2 m_lo, and at least 10 sample points.
double asymptotic_exponent(const Spectrum& spec, int m_lo, int m_hi);

} // namespace compser::intertwining
