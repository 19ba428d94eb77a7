#include "zeno/bath_oracle.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "zeno/errors.hpp"

namespace zeno {

double BathDiscretization::calibrated_coupling(double gamma, double delta_e) {
    if (!std::isfinite(gamma) || gamma < 0.0) throw InvalidArgument("gamma must be finite and >= 0");
    if (!std::isfinite(delta_e) || !(delta_e > 0.0)) throw InvalidArgument("delta_E must be finite and > 0");
    return std::sqrt(gamma * delta_e / std::numbers::pi);
}

BathDiscretization BathDiscretization::calibrated(double gamma, double delta_e, double bandwidth) {
    if (!std::isfinite(bandwidth) || !(bandwidth > 0.0)) {
        throw InvalidArgument("bandwidth must be finite and > 0");
    }
    BathDiscretization b;
    b.delta_e = delta_e;
    b.coupling = calibrated_coupling(gamma, delta_e);
    // Small tolerance so that bandwidth / delta_e = 1000 does not become 1001.
    b.n_side = static_cast<long long>(std::ceil(bandwidth / delta_e - 1e-9));
    if (b.n_side < 1) b.n_side = 1;
    b.validate();
    return b;
}

void BathDiscretization::validate() const {
    if (n_side < 1) throw InvalidArgument("n_side must be >= 1");
    if (!std::isfinite(delta_e) || !(delta_e > 0.0)) throw InvalidArgument("delta_E must be finite and > 0");
    if (!std::isfinite(coupling) || coupling < 0.0) throw InvalidArgument("coupling must be finite and >= 0");
    if (!std::isfinite(static_cast<double>(n_side) * delta_e)) throw InvalidArgument("bandwidth must be finite");
}

double BathDiscretization::recurrence_time() const { return 2.0 * std::numbers::pi / delta_e; }

double BathDiscretization::golden_rule_rate() const {
    return std::numbers::pi * coupling * coupling / delta_e;
}

namespace {

struct SecularEquation {
    long long n_side;
    double delta_e;
    double coupling_sq;

    // Value and derivative of f(lambda) = lambda - kappa^2 sum 1/(lambda - e_n),
    // with lambda = anchor * delta_e + mu. Distances to the poles are formed
    // from integer offsets so that they stay exact near the anchor pole.
    void evaluate(long long anchor, double mu, double& f, double& df) const {
        double sum = 0.0;
        double sum_sq = 0.0;
        for (long long n = -n_side; n <= n_side; ++n) {
            const double d = static_cast<double>(anchor - n) * delta_e + mu;
            const double inv = 1.0 / d;
            sum += inv;
            sum_sq += inv * inv;
        }
        f = static_cast<double>(anchor) * delta_e + mu - coupling_sq * sum;
        df = 1.0 + coupling_sq * sum_sq;
    }

    // Root of f in the open interval (lo, hi) of mu around the anchor pole.
    // f is strictly increasing there and runs from -inf (or negative) to +inf.
    double solve(long long anchor, double lo, double hi) const {
        double mu = 0.5 * (lo + hi);
        for (int iter = 0; iter < 300; ++iter) {
            double f = 0.0;
            double df = 0.0;
            evaluate(anchor, mu, f, df);
            if (f == 0.0) return mu;
            if (f < 0.0) lo = mu; else hi = mu;

            double next = mu - f / df;
            if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
            const double scale = std::max(std::abs(next), std::numeric_limits<double>::min());
            const bool converged = std::abs(next - mu) <= 4.0 * std::numeric_limits<double>::epsilon() * scale;
            mu = next;
            if (converged || hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
                return mu;
            }
        }
        throw ConvergenceError("secular equation root did not converge");
    }
};

}  // namespace

BathSpectrum::BathSpectrum(const BathDiscretization& b) : bath_(b) {
    b.validate();
    if (b.coupling == 0.0) {
        // Decoupled: the reference level is itself an eigenvector.
        eigenvalues_ = {0.0};
        weights_ = {1.0};
        return;
    }

    const SecularEquation eq{b.n_side, b.delta_e, b.coupling * b.coupling};
    const long long n = b.n_side;
    // The coupling part of H has spectral norm kappa sqrt(2N+1), which bounds
    // how far the outer roots can sit beyond the band edges.
    const double reach = b.coupling * std::sqrt(static_cast<double>(2 * n + 1)) + b.delta_e;

    eigenvalues_.reserve(static_cast<std::size_t>(2 * n + 2));
    weights_.reserve(static_cast<std::size_t>(2 * n + 2));
    auto record = [&](long long anchor, double mu) {
        double f = 0.0;
        double df = 0.0;
        eq.evaluate(anchor, mu, f, df);
        eigenvalues_.push_back(static_cast<double>(anchor) * b.delta_e + mu);
        weights_.push_back(1.0 / df);
    };

    record(-n, eq.solve(-n, -reach, 0.0));
    for (long long k = -n; k < n; ++k) record(k, eq.solve(k, 0.0, b.delta_e));
    record(n, eq.solve(n, 0.0, reach));

    double total = 0.0;
    for (double w : weights_) total += w;
    if (std::abs(total - 1.0) > 1e-9) {
        throw ConvergenceError("bath spectral weights sum to " + std::to_string(total) + ", expected 1");
    }
}

Complex BathSpectrum::amplitude(double t) const {
    if (!std::isfinite(t) || t < 0.0) throw InvalidArgument("t must be finite and >= 0");
    if (t > bath_.recurrence_time()) {
        throw ConvergenceError("t = " + std::to_string(t) + " exceeds the recurrence horizon 2 pi / delta_E = " +
                               std::to_string(bath_.recurrence_time()));
    }
    double re = 0.0;
    double im = 0.0;
    for (std::size_t k = 0; k < eigenvalues_.size(); ++k) {
        const double phase = eigenvalues_[k] * t;
        re += weights_[k] * std::cos(phase);
        im -= weights_[k] * std::sin(phase);
    }
    return {re, im};
}

Complex bath_amplitude_oracle(const BathDiscretization& b, double t) { return BathSpectrum(b).amplitude(t); }

}  // namespace zeno
