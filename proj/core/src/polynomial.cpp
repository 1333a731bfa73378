#include "compser/polynomial.hpp"

#include "compser/errors.hpp"

namespace compser {

Polynomial::Polynomial(int nvars) : nvars_(nvars) {
    if (nvars < 1 || nvars > Monomial::kMaxVars) {
        throw ResourceError("Polynomial: variable count outside [1, 16]");
    }
}

Polynomial Polynomial::constant(int nvars, const Rational& c) {
    Polynomial p(nvars);
    if (c != 0) p.terms_.emplace(Monomial{}, c);
    return p;
}

Polynomial Polynomial::monomial(int nvars, int var, int exp, const Rational& c) {
    Polynomial p(nvars);
    if (var < 0 || var >= nvars) throw DomainError("Polynomial::monomial: bad variable index");
    if (exp < 0 || exp > Monomial::kMaxExp) throw ResourceError("Polynomial::monomial: exponent out of range");
    if (c != 0) {
        Monomial m;
        m.e[var] = static_cast<std::uint8_t>(exp);
        p.terms_.emplace(m, c);
    }
    return p;
}

int Polynomial::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
    return d;
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() * o.terms_.size() / 2 + 8);
    Rational prod;
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            prod = ca * cb;
            r.add_term(ma.plus(mb), prod);
        }
    }
    return r;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_) coeff *= c;
    return *this;
}

Polynomial Polynomial::square() const {
    Polynomial r(nvars_);
    r.terms_.reserve(terms_.size() * terms_.size() / 2 + 8);
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    Rational prod;
    for (std::size_t i = 0; i < ts.size(); ++i) {
        prod = ts[i]->second * ts[i]->second;
        r.add_term(ts[i]->first.plus(ts[i]->first), prod);
        for (std::size_t j = i + 1; j < ts.size(); ++j) {
            prod = 2 * ts[i]->second * ts[j]->second;
            r.add_term(ts[i]->first.plus(ts[j]->first), prod);
        }
    }
    return r;
}

Polynomial Polynomial::laplacian() const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        for (int v = 0; v < nvars_; ++v) {
            const int ev = m.e[v];
            if (ev >= 2) {
                Monomial d = m;
                d.e[v] = static_cast<std::uint8_t>(ev - 2);
                r.add_term(d, c * ev * (ev - 1));
            }
        }
    }
    return r;
}

Polynomial Polynomial::substitute_zero(int var) const {
    Polynomial r(nvars_);
    for (const auto& [m, c] : terms_) {
        if (m.e[var] == 0) r.add_term(m, c);
    }
    return r;
}

Rational Polynomial::eval(const std::vector<Rational>& x) const {
    Rational acc = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (int v = 0; v < nvars_; ++v) {
            for (int k = 0; k < m.e[v]; ++k) t *= x[v];
        }
        acc += t;
    }
    return acc;
}

void Polynomial::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->second == 0) {
            it = terms_.erase(it);
        } else {
            ++it;
        }
    }
}

} // namespace compser
