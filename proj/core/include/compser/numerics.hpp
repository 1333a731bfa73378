#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace compser {

// Kahan compensated accumulator; summation order is the caller's contract.
class KahanSum {
public:
    void add(double x) {
        const double y = x - comp_;
        const double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    std::size_t count = 0;
};

// Ordinary least squares y ~ slope * x + intercept. A zero-variance x
// (or fewer than two points) yields slope 0 through the degenerate branch.
inline LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    LinearFit f;
    f.count = x.size();
    if (x.size() != y.size() || x.size() < 2) {
        if (!y.empty()) f.intercept = y[0];
        return f;
    }
    const auto n = static_cast<double>(x.size());
    KahanSum sx, sy;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sx.add(x[k]);
        sy.add(y[k]);
    }
    const double mx = sx.value() / n;
    const double my = sy.value() / n;
    KahanSum sxx, sxy;
    for (std::size_t k = 0; k < x.size(); ++k) {
        sxx.add((x[k] - mx) * (x[k] - mx));
        sxy.add((x[k] - mx) * (y[k] - my));
    }
    if (sxx.value() == 0.0) {
        f.intercept = my;
        return f;
    }
    f.slope = sxy.value() / sxx.value();
    f.intercept = my - f.slope * mx;
    return f;
}

} // namespace compser
