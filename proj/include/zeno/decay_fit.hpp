#pragma once

#include <cstddef>
#include <span>

namespace zeno {

struct DecayFit {
    double rate = 0.0;       ///< fitted exponential rate
    double asymptote = 0.0;  ///< estimated long-time value
    std::size_t points_used = 0;
    /// |value - asymptote| grew somewhere inside the fit window.
    bool non_monotone_residual = false;
};

/// Rate of exponential relaxation of a sampled signal toward its asymptote.
///
/// The asymptote is the mean of the final 10% of the samples; the rate is the
/// negated least-squares slope of log|value - asymptote| over the leading
/// samples whose residual exceeds 1e-6. Throws NoDecay when fewer than three
/// such samples exist or the slope is not negative, and InsufficientSpan when
/// the series covers less than three fitted decay times.
DecayFit fit_decay_rate(std::span<const double> times, std::span<const double> values);

}  // namespace zeno
