#include "zeno/decay_fit.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "zeno/errors.hpp"

namespace zeno {

namespace {

constexpr double kTailFraction = 0.1;
constexpr double kResidualFloor = 1e-6;
constexpr double kMinimumDecayTimes = 3.0;

double least_squares_slope(const std::vector<double>& x, const std::vector<double>& y, std::size_t count) {
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t k = 0; k < count; ++k) {
        sx += x[k];
        sy += y[k];
        sxx += x[k] * x[k];
        sxy += x[k] * y[k];
    }
    const double m = static_cast<double>(count);
    return (m * sxy - sx * sy) / (m * sxx - sx * sx);
}

}  // namespace

DecayFit fit_decay_rate(std::span<const double> times, std::span<const double> values) {
    if (times.size() != values.size()) throw InvalidArgument("times and values differ in length");
    if (times.size() < 10) throw InvalidArgument("decay fit needs at least 10 samples");
    for (std::size_t k = 0; k < times.size(); ++k) {
        if (!std::isfinite(times[k]) || !std::isfinite(values[k])) throw InvalidArgument("non-finite sample");
        if (k > 0 && !(times[k] > times[k - 1])) throw InvalidArgument("times must be strictly increasing");
    }

    const std::size_t n = times.size();
    const std::size_t tail = std::max<std::size_t>(1, static_cast<std::size_t>(kTailFraction * static_cast<double>(n)));
    double asymptote = 0.0;
    for (std::size_t k = n - tail; k < n; ++k) asymptote += values[k];
    asymptote /= static_cast<double>(tail);

    // Leading window above the residual floor.
    std::vector<double> xs;
    std::vector<double> ys;
    bool non_monotone = false;
    for (std::size_t k = 0; k < n; ++k) {
        const double residual = std::abs(values[k] - asymptote);
        if (!(residual > kResidualFloor)) break;
        if (!ys.empty() && std::log(residual) > ys.back()) non_monotone = true;
        xs.push_back(times[k] - times[0]);
        ys.push_back(std::log(residual));
    }
    if (xs.size() < 6) throw NoDecay("series shows no decay above the residual floor");

    const double slope = least_squares_slope(xs, ys, xs.size());
    if (!(slope < 0.0)) throw NoDecay("residual does not decay (slope " + std::to_string(slope) + ")");

    // A series cut off before relaxing biases the tail-mean asymptote, which
    // bends log|residual| downward at late times. The leading half of the
    // window is least affected, so the span is judged against its rate.
    const double early_rate = -least_squares_slope(xs, ys, xs.size() / 2);
    const double span = times[n - 1] - times[0];
    if (early_rate * span < kMinimumDecayTimes) {
        throw InsufficientSpan("series spans " + std::to_string(early_rate * span) + " decay times, need >= 3");
    }
    const double rate = -slope;
    return {rate, asymptote, xs.size(), non_monotone};
}

}  // namespace zeno
