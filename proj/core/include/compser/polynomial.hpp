#pragma once

#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <unordered_map>
#include <vector>

#include "compser/rational.hpp"

namespace compser {

// Exponent vector of a monomial, packed into 16 bytes: up to 16 variables,
// each exponent < 256. Packing keeps hashing and equality branch-free,
// which dominates the cost of exact polynomial squaring.
struct Monomial {
    static constexpr int kMaxVars = 16;
    static constexpr int kMaxExp = 255;

    std::array<std::uint8_t, kMaxVars> e{};

    bool operator==(const Monomial& o) const { return e == o.e; }

    int degree() const {
        int d = 0;
        for (auto x : e) d += x;
        return d;
    }

    Monomial plus(const Monomial& o) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) {
            r.e[i] = static_cast<std::uint8_t>(e[i] + o.e[i]);
        }
        return r;
    }

    bool all_even() const {
        std::uint64_t lo, hi;
        std::memcpy(&lo, e.data(), 8);
        std::memcpy(&hi, e.data() + 8, 8);
        return ((lo | hi) & 0x0101010101010101ULL) == 0;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::uint64_t lo, hi;
        std::memcpy(&lo, m.e.data(), 8);
        std::memcpy(&hi, m.e.data() + 8, 8);
        // splitmix64-style mix of the two lanes
        std::uint64_t x = lo ^ (hi * 0x9E3779B97F4A7C15ULL);
        x ^= x >> 30;
        x *= 0xBF58476D1CE4E5B9ULL;
        x ^= x >> 27;
        x *= 0x94D049BB133111EBULL;
        x ^= x >> 31;
        return static_cast<std::size_t>(x);
    }
};

// Sparse multivariate polynomial with exact rational coefficients.
// Zero coefficients are pruned on normalize(); an empty term map is the
// zero polynomial.
class Polynomial {
public:
    using TermMap = std::unordered_map<Monomial, Rational, MonomialHash>;

    Polynomial() = default;
    explicit Polynomial(int nvars);

    static Polynomial constant(int nvars, const Rational& c);
    // The monomial x_var (0-based) raised to power `exp`.
    static Polynomial monomial(int nvars, int var, int exp, const Rational& c);

    int nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    int total_degree() const;

    void add_term(const Monomial& m, const Rational& c);

    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial operator*(const Polynomial& o) const;
    Polynomial& operator*=(const Rational& c);

    // f*f with the symmetric pairs visited once.
    Polynomial square() const;

    // Sum of second partials, exact; the zero map iff harmonic.
    Polynomial laplacian() const;

    // Substitute x_var = 0 (drops every term with a positive exponent there).
    Polynomial substitute_zero(int var) const;

    // Exact evaluation at a rational point.
    Rational eval(const std::vector<Rational>& x) const;

    void normalize();  // drop exact zeros

private:
    int nvars_ = 0;
    TermMap terms_;
};

} // namespace compser
