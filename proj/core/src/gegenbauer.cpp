#include <vector>

#include "compser/errors.hpp"
#include "compser/specfun.hpp"

namespace compser::specfun {

Rational GegenbauerPoly::eval(const Rational& t) const {
    // Horner over the dense coefficient vector.
    Rational acc = 0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = acc * t + *it;
    }
    return acc;
}

GegenbauerPoly gegenbauer(int k, const Rational& lambda) {
    if (k < 0) throw DomainError("gegenbauer: degree must be nonnegative");
    if (lambda <= 0) throw DomainError("gegenbauer: lambda must be positive");

    // k C_k(t) = 2(k + lambda - 1) t C_{k-1}(t) - (k + 2 lambda - 2) C_{k-2}(t)
    std::vector<Rational> prev{Rational(1)};           // C_0
    if (k == 0) return {0, lambda, prev};
    std::vector<Rational> cur{Rational(0), 2 * lambda};  // C_1
    if (k == 1) return {1, lambda, cur};

    for (int d = 2; d <= k; ++d) {
        std::vector<Rational> next(d + 1, Rational(0));
        const Rational a = Rational(2) * (d + lambda - 1) / d;
        const Rational b = (Rational(d) + 2 * lambda - 2) / d;
        for (int j = 0; j < static_cast<int>(cur.size()); ++j) {
            if (cur[j] != 0) next[j + 1] += a * cur[j];
        }
        for (int j = 0; j < static_cast<int>(prev.size()); ++j) {
            if (prev[j] != 0) next[j] -= b * prev[j];
        }
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {k, lambda, cur};
}

} // namespace compser::specfun
