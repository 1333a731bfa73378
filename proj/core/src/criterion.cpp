#include "compser/criterion.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <json.hpp>

#include "compser/errors.hpp"
#include "compser/numerics.hpp"
#include "compser/parallel.hpp"
#include "compser/specfun.hpp"

namespace compser::criterion {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// The m- and l-weights of the series, derived through the Stirling ratio
// exponent so the link between the power weights and the intertwining
// asymptotics stays literal in code: the m-weight is m^-((n-1)u), the
// l-weight l^((n-2)u'), both from Gamma(x + a)/Gamma(x + b) ~ x^(a-b).
double m_weight_exponent(int n, double u) {
    const double rho = (n - 1) / 2.0;
    return -specfun::stirling_ratio_exponent(rho * (1.0 - u), rho * (1.0 + u));
}

double l_weight_exponent(int n, double u_prime) {
    const double rho_h = (n - 2) / 2.0;
    return specfun::stirling_ratio_exponent(rho_h * (1.0 + u_prime), rho_h * (1.0 - u_prime));
}

double term_value(double coeff, double l_exp, double m_exp, int m, int l) {
    if (coeff == 0.0) return 0.0;
    double log_term = std::log(coeff) - m_exp * std::log(static_cast<double>(m));
    if (l >= 1) log_term += l_exp * std::log(static_cast<double>(l));
    return std::exp(log_term);
}

PerTypeRow evaluate_row(const BranchTable& table, int l, int mmax, double l_exp,
                        double m_exp, const Thresholds& thr) {
    PerTypeRow row;
    row.l = l;
    row.fitted_tail_exponent = kNaN;

    const int m_start = (l == 0) ? 2 : l;  // m >= 1 and m parity-matched to l
    const int fit_lo = mmax / 10;          // last decade of m
    KahanSum sum;
    std::vector<double> fit_x, fit_y;
    bool any_nonzero = false;

    for (int m = m_start; m <= mmax; m += 2) {
        const double c = table.at(m, l);
        if (c == 0.0) continue;  // exact parity zeros contribute nothing
        any_nonzero = true;
        double log_term = std::log(c) - m_exp * std::log(static_cast<double>(m));
        if (l >= 1) log_term += l_exp * std::log(static_cast<double>(l));
        sum.add(std::exp(log_term));
        if (m >= fit_lo) {
            fit_x.push_back(std::log(static_cast<double>(m)));
            fit_y.push_back(log_term);
        }
    }

    row.partial_sum = sum.value();
    if (!any_nonzero) {
        // A literally zero row is trivially convergent.
        row.all_zero = true;
        row.tail_estimate = 0.0;
        row.bound = 0.0;
        return row;
    }

    if (static_cast<int>(fit_x.size()) < thr.min_fit_terms) {
        row.tail_estimate = kInf;
        row.bound = kInf;
        return row;
    }

    const LinearFit fit = linear_fit(fit_x, fit_y);
    row.fit_valid = true;
    row.fitted_tail_exponent = fit.slope;
    if (fit.slope < thr.integrable) {
        // Integrate the fitted power law beyond mmax; nonzero terms sit at
        // every other m, hence the spacing factor 1/2.
        const double at_mmax = fit.intercept + fit.slope * std::log(static_cast<double>(mmax));
        row.tail_estimate =
            0.5 * std::exp(at_mmax) * static_cast<double>(mmax) / (-(fit.slope + 1.0));
        row.bound = row.partial_sum + row.tail_estimate;
    } else {
        row.tail_estimate = kInf;
        row.bound = kInf;
    }
    return row;
}

} // namespace

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::bounded: return "bounded";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::diverging: return "diverging";
    }
    return "inconclusive";
}

double series_term(const BranchTable& table, int n, double u, double u_prime, int m, int l) {
    if (l < 0 || m < std::max(l, 1)) {
        throw DomainError("series_term: requires m >= max(l, 1)");
    }
    const double coeff = table.at(m, l);  // range-checked by the table
    return term_value(coeff, l_weight_exponent(n, u_prime), m_weight_exponent(n, u), m, l);
}

CriterionReport evaluate_criterion(const BranchTable& table, const params::ParamPoint& p,
                                   int lmax, int mmax, const Thresholds& thr, int threads) {
    if (!params::in_branching_window(p)) {
        throw DomainError("evaluate_criterion: parameter point outside its branching window");
    }
    if (table.n() != p.n || table.i() != p.i) {
        throw DomainError("evaluate_criterion: table (n, i) does not match the parameter point");
    }
    if (lmax < 0 || mmax < 4 * lmax || mmax < 1) {
        throw DomainError("evaluate_criterion: requires 0 <= 4*lmax <= mmax");
    }
    if (mmax > table.mmax() || lmax > table.lmax()) {
        throw DomainError("evaluate_criterion: truncation exceeds table range");
    }

    CriterionReport rep;
    rep.n = p.n;
    rep.i = p.i;
    rep.u = p.u;
    rep.u_prime = params::branch_param(p);
    rep.mmax = mmax;
    rep.lmax = lmax;
    rep.per_l.resize(static_cast<std::size_t>(lmax) + 1);

    const double m_exp = m_weight_exponent(p.n, p.u);
    const double l_exp = l_weight_exponent(p.n, rep.u_prime);

    parallel_for(0, lmax + 1, threads, [&](std::int64_t l) {
        rep.per_l[static_cast<std::size_t>(l)] =
            evaluate_row(table, static_cast<int>(l), mmax, l_exp, m_exp, thr);
    });

    // Deterministic fold in increasing l.
    rep.sup_bound = 0.0;
    rep.argmax_l = 0;
    bool any_invalid_fit = false;
    bool any_inconclusive_exponent = false;
    bool any_diverging = false;
    for (const auto& row : rep.per_l) {
        if (row.bound > rep.sup_bound) {
            rep.sup_bound = row.bound;
            rep.argmax_l = row.l;
        }
        if (row.all_zero) continue;
        if (!row.fit_valid) {
            any_invalid_fit = true;
        } else if (row.fitted_tail_exponent >= thr.divergence) {
            any_diverging = true;
        } else if (row.fitted_tail_exponent >= thr.integrable) {
            any_inconclusive_exponent = true;
        }
    }

    // Advisory trend over the last quartile of l: compare the minimum bound
    // of its two halves.
    rep.l_trend_growing = false;
    const int q_start = (3 * lmax) / 4;
    const int q_mid = q_start + (lmax - q_start + 1) / 2;
    if (q_mid > q_start && q_mid <= lmax) {
        double min1 = kInf, min2 = kInf;
        for (int l = q_start; l < q_mid; ++l) {
            min1 = std::min(min1, rep.per_l[static_cast<std::size_t>(l)].bound);
        }
        for (int l = q_mid; l <= lmax; ++l) {
            min2 = std::min(min2, rep.per_l[static_cast<std::size_t>(l)].bound);
        }
        if (std::isfinite(min1) && std::isfinite(min2) && min2 > min1 * thr.trend_margin) {
            rep.l_trend_growing = true;
        }
    }

    if (any_diverging) {
        rep.verdict = Verdict::diverging;
    } else if (any_invalid_fit || any_inconclusive_exponent || !std::isfinite(rep.sup_bound) ||
               rep.l_trend_growing) {
        rep.verdict = Verdict::inconclusive;
    } else {
        rep.verdict = Verdict::bounded;
    }
    return rep;
}

double ramified_bound(const CriterionReport& report, double gamma, int target_i) {
    if (gamma < 0.0) throw DomainError("ramified_bound: gamma must be >= 0");
    if (report.i != 0) {
        throw DomainError("ramified_bound: report must come from an i = 0 table");
    }
    params::ParamPoint probe{report.n, target_i, report.u};
    if (!params::in_branching_window(probe)) {
        throw DomainError("ramified_bound: u outside the branching window for target i");
    }
    return gamma * report.sup_bound;
}

TableComparison compare_tables(const BranchTable& ramified, const BranchTable& unramified) {
    if (ramified.n() != unramified.n() || ramified.mmax() != unramified.mmax() ||
        ramified.lmax() != unramified.lmax()) {
        throw DomainError("compare_tables: table shapes do not match");
    }
    if (ramified.i() < 1) throw DomainError("compare_tables: ramified table must have i >= 1");
    if (unramified.i() != 0) throw DomainError("compare_tables: unramified table must have i = 0");

    TableComparison cmp;
    for (int m = 0; m <= ramified.mmax(); ++m) {
        for (int l = 0; l <= ramified.lmax(); ++l) {
            const double r = ramified.at(m, l);
            const double s = unramified.at(m, l);
            if (s > 0.0) {
                cmp.gamma_hat = std::max(cmp.gamma_hat, r / s);
            } else if (r > 0.0) {
                cmp.violations.emplace_back(m, l);
            }
        }
    }
    return cmp;
}

std::vector<std::pair<double, CriterionReport>> endpoint_scan(
    const BranchTable& table, int n, int i, int steps, int lmax, int mmax,
    const Thresholds& thr, int threads) {
    if (steps < 2) throw DomainError("endpoint_scan: steps must be >= 2");
    auto [lo, hi] = params::window_exact(n, i);
    if (lo >= hi) throw DomainError("endpoint_scan: empty window");
    if (table.i() != 0 && table.i() != i) {
        throw DomainError("endpoint_scan: table M-type must be 0 or match i");
    }
    const int eval_i = table.i();

    const double lo_d = lo.get_d();
    const double hi_d = hi.get_d();
    const double gap0 = (hi_d - lo_d) / 2.0;
    const double gap_end = std::min(1e-4, gap0);  // last gap stays >= 1e-4 unless the window is thinner
    const double ratio = std::pow(gap_end / gap0, 1.0 / (steps - 1));

    std::vector<std::pair<double, CriterionReport>> out;
    out.reserve(static_cast<std::size_t>(steps));
    for (int s = 0; s < steps; ++s) {
        const double u = hi_d - gap0 * std::pow(ratio, static_cast<double>(s));
        params::ParamPoint p{n, eval_i, u};
        out.emplace_back(u, evaluate_criterion(table, p, lmax, mmax, thr, threads));
    }
    return out;
}

namespace {

nlohmann::ordered_json json_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

} // namespace

std::string report_to_json(const CriterionReport& r, int indent) {
    nlohmann::ordered_json j;
    j["schema"] = "criterion-report";
    j["n"] = r.n;
    j["i"] = r.i;
    j["u"] = json_double(r.u);
    j["u_prime"] = json_double(r.u_prime);
    j["mmax"] = r.mmax;
    j["lmax"] = r.lmax;
    j["sup_bound"] = json_double(r.sup_bound);
    j["argmax_l"] = r.argmax_l;
    j["uniform_verdict"] = verdict_name(r.verdict);
    j["l_trend_growing"] = r.l_trend_growing;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : r.per_l) {
        nlohmann::ordered_json jr;
        jr["l"] = row.l;
        jr["partial_sum"] = json_double(row.partial_sum);
        jr["tail_estimate"] = json_double(row.tail_estimate);
        jr["fitted_tail_exponent"] = json_double(row.fitted_tail_exponent);
        jr["fit_valid"] = row.fit_valid;
        jr["all_zero"] = row.all_zero;
        jr["bound"] = json_double(row.bound);
        rows.push_back(std::move(jr));
    }
    j["per_l"] = std::move(rows);
    return j.dump(indent);
}

} // namespace compser::criterion
