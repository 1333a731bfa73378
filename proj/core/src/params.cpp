#include "compser/params.hpp"

#include <string>

#include "compser/errors.hpp"

namespace compser::params {

namespace {

// Window bounds without the public preconditions; n >= 2 so chain logic can
// probe one rank below the public domain.
std::pair<Rational, Rational> window_raw(int n, int i) {
    Rational lo(1, n - 1);
    Rational hi = Rational(1) - Rational(2 * i, n - 1);
    lo.canonicalize();
    hi.canonicalize();
    return {lo, hi};
}

void check_window_domain(int n, int i) {
    if (n < 3) throw DomainError("window: n must be >= 3");
    if (i < 0) throw DomainError("window: i must be >= 0");
    if (i > n / 2 - 1) {
        throw DomainError("window: i exceeds floor(n/2) - 1 (got i=" + std::to_string(i) +
                          ", n=" + std::to_string(n) + ")");
    }
}

bool tempered_wall(int n, int i) { return n == 2 * i || n == 2 * i + 1; }

} // namespace

std::pair<Rational, Rational> window_exact(int n, int i) {
    check_window_domain(n, i);
    return window_raw(n, i);
}

Window window(int n, int i) {
    auto [lo, hi] = window_exact(n, i);
    return {lo.get_d(), hi.get_d()};
}

bool admissible(const ParamPoint& p) {
    if (p.n < 3 || p.i < 0 || p.i > p.n / 2 - 1) return false;
    auto [lo, hi] = window_raw(p.n, p.i);
    return p.u > kBoundaryTol && hi.get_d() - p.u > kBoundaryTol;
}

bool in_branching_window(const ParamPoint& p) {
    if (p.n < 3 || p.i < 0 || p.i > p.n / 2 - 1) return false;
    auto [lo, hi] = window_raw(p.n, p.i);
    return p.u - lo.get_d() > kBoundaryTol && hi.get_d() - p.u > kBoundaryTol;
}

double branch_param(const ParamPoint& p) {
    if (!in_branching_window(p)) {
        throw DomainError("branch_param: point outside its branching window (n=" +
                          std::to_string(p.n) + ", i=" + std::to_string(p.i) +
                          ", u=" + std::to_string(p.u) + ")");
    }
    return ((p.n - 1) * p.u - 1.0) / (p.n - 2);
}

Rational branch_param_exact(int n, const Rational& u) {
    Rational r = (Rational(n - 1) * u - 1) / Rational(n - 2);
    r.canonicalize();
    return r;
}

Endpoints endpoint_map(int n, int i) {
    auto [lo, hi] = window_exact(n, i);
    if (lo >= hi) throw DomainError("endpoint_map: empty window");
    return {hi, branch_param_exact(n, hi)};
}

Rational second_endpoint(int n, int i) {
    check_window_domain(n, i);
    Rational r = Rational(1) - Rational(2 * i + 2, n - 1);
    r.canonicalize();
    return r;
}

ChainTrace iterate_chain(const ParamPoint& p, int max_steps) {
    ChainTrace trace;
    ParamPoint cur = p;

    if (tempered_wall(cur.n, cur.i)) {
        trace.terminated_tempered = true;
        trace.terminal_m = cur.n;
        trace.reason = ChainStop::tempered;
        return trace;
    }

    while (true) {
        if (!in_branching_window(cur)) {
            trace.reason = ChainStop::window_exit;
            break;
        }
        if (static_cast<int>(trace.steps.size()) >= max_steps) {
            trace.reason = ChainStop::max_steps;
            break;
        }
        ParamPoint next{cur.n - 1, cur.i, ((cur.n - 1) * cur.u - 1.0) / (cur.n - 2)};
        // Only points that can themselves keep descending are appended;
        // every traced point therefore lies inside its own branching window.
        // The tempered wall n = 2i or 2i+1 is reachable only as a start
        // state: the window at n = 2i+2 is already empty, so descent halts
        // one rank above the wall.
        if (next.n < 3 || !in_branching_window(next)) {
            trace.reason = ChainStop::window_exit;
            break;
        }
        trace.steps.push_back(next);
        cur = next;
    }
    return trace;
}

} // namespace compser::params
