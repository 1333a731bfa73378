#pragma once

#include <string>
#include <utility>
#include <vector>

#include "compser/branch_table.hpp"
#include "compser/params.hpp"

namespace compser::criterion {

using harmonics::BranchTable;

// Verdict thresholds on the fitted tail exponent s of the summand:
//   s <  integrable   -> tail integrable (candidate bounded)
//   s in [integrable, divergence) -> inconclusive
//   s >= divergence   -> diverging
// A fit needs at least min_fit_terms nonzero terms in the fit window.
struct Thresholds {
    double integrable = -1.0;
    double divergence = -0.9;
    int min_fit_terms = 10;
    // Advisory trend check: the minimum per-l bound over the second half of
    // the last l-quartile must not exceed the first half's by this factor.
    double trend_margin = 1.05;
};

enum class Verdict { bounded, inconclusive, diverging };

std::string verdict_name(Verdict v);

struct PerTypeRow {
    int l = 0;
    double partial_sum = 0.0;
    double tail_estimate = 0.0;          // +inf when the tail is not certifiable
    double fitted_tail_exponent = 0.0;   // NaN when no fit was possible
    bool fit_valid = false;
    bool all_zero = false;               // no nonzero term anywhere in the row
    double bound = 0.0;                  // partial_sum + tail_estimate
};

struct CriterionReport {
    int n = 0;
    int i = 0;
    double u = 0.0;
    double u_prime = 0.0;
    int mmax = 0;
    int lmax = 0;
    std::vector<PerTypeRow> per_l;
    double sup_bound = 0.0;
    int argmax_l = 0;
    Verdict verdict = Verdict::inconclusive;
    bool l_trend_growing = false;
};

// One summand C(m,l,i) * l^((n-2)u') / m^((n-1)u), evaluated in log space.
// The l = 0 row uses weight 1. Requires m >= max(l, 1).
double series_term(const BranchTable& table, int n, double u, double u_prime,
                   int m, int l);

// Per-l partial sums of the series over parity-matching m in [max(l,1), mmax],
// power-law tail fit on the last decade of m, and the uniformity verdict.
// Requires p in its branching window, table.n == p.n, table.i == p.i, and
// mmax >= 4*lmax. Per-l work may run on `threads` workers; the assembled
// report is bit-identical for any thread count.
CriterionReport evaluate_criterion(const BranchTable& table, const params::ParamPoint& p,
                                   int lmax, int mmax, const Thresholds& thr = {},
                                   int threads = 1);

// gamma * sup_bound: an upper bound for the ramified series with M-type
// wedge^target_i under the comparison hypothesis C(m,l,i) <= gamma C(m,l,0).
// The report must come from an i = 0 table at a u inside the target_i
// branching window.
double ramified_bound(const CriterionReport& report, double gamma, int target_i);

struct TableComparison {
    double gamma_hat = 0.0;  // max ramified/unramified over positive unramified slots
    std::vector<std::pair<int, int>> violations;  // ramified > 0 where unramified == 0
};

TableComparison compare_tables(const BranchTable& ramified, const BranchTable& unramified);

// Criterion reports along u values approaching the window endpoint from
// inside, geometrically spaced gaps, final gap >= 1e-4 (or a quarter of the
// initial gap for very thin windows). For i >= 1 the table may be the
// internal i = 0 table; rows are then evaluated at M-type 0 and feed the
// gamma comparison.
std::vector<std::pair<double, CriterionReport>> endpoint_scan(
    const BranchTable& table, int n, int i, int steps, int lmax, int mmax,
    const Thresholds& thr = {}, int threads = 1);

// Deterministic JSON rendering (ordered keys, lossless doubles). Infinite
// and NaN values serialize as the strings "inf" / "nan".
std::string report_to_json(const CriterionReport& r, int indent = 2);

} // namespace compser::criterion
