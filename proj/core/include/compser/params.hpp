#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "compser/rational.hpp"

namespace compser::params {

// A complementary series point of SO(n,1): M-type wedge^i, continuous
// parameter u. Plain value type; admissibility and window membership are
// queried through the free functions below rather than enforced on
// construction, because restriction chains legitimately touch boundary and
// tempered-wall points.
struct ParamPoint {
    int n = 3;
    int i = 0;
    double u = 0.0;
};

struct Window {
    double lo = 0.0;
    double hi = 0.0;
    bool empty() const { return lo >= hi; }
};

// Membership against window bounds uses this absolute margin so boundary
// decisions on floating input are deterministic: points within kBoundaryTol
// of a bound (or beyond it) count as outside.
inline constexpr double kBoundaryTol = 1e-12;

// The interval (1/(n-1), 1 - 2i/(n-1)) in which restriction descends one
// rank. lo >= hi signals an empty window; callers test emptiness.
Window window(int n, int i);
std::pair<Rational, Rational> window_exact(int n, int i);

// 0 < u < 1 - 2i/(n-1), with the boundary margin.
bool admissible(const ParamPoint& p);
// 1/(n-1) < u < 1 - 2i/(n-1), with the boundary margin.
bool in_branching_window(const ParamPoint& p);

// u' = ((n-1)u - 1)/(n-2); requires p in its branching window.
double branch_param(const ParamPoint& p);
// Same map in exact arithmetic, no window check (callers validate).
Rational branch_param_exact(int n, const Rational& u);

// The window's upper endpoint u_end = 1 - 2i/(n-1) and its image under the
// branching map, which equals 1 - 2i/(n-2) identically.
struct Endpoints {
    Rational u_end;
    Rational u_end_next;
};
Endpoints endpoint_map(int n, int i);

// The second limit family 1 - (2i+2)/(n-1), exposed as data only; no chain
// semantics are attached to it.
Rational second_endpoint(int n, int i);

enum class ChainStop {
    window_exit,  // the next point would fall outside its own branching window
    tempered,     // group size reached 2i or 2i+1
    max_steps,
};

// Trace of repeated one-rank restrictions: steps holds the points produced
// after the start (so a terminal start yields an empty trace). Every point
// in steps lies inside its own branching window. terminal_m is set only
// when the chain stopped at the tempered wall.
struct ChainTrace {
    std::vector<ParamPoint> steps;
    bool terminated_tempered = false;
    std::optional<int> terminal_m;
    ChainStop reason = ChainStop::window_exit;

    // The two-rank image (n-2 pairing), when the chain got that far.
    std::optional<ParamPoint> two_step() const {
        if (steps.size() < 2) return std::nullopt;
        return steps[1];
    }
};

ChainTrace iterate_chain(const ParamPoint& p, int max_steps);

} // namespace compser::params
