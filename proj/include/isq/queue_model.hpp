#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "isq/power_law.hpp"

namespace isq {

/// Degenerate batch of a fixed size; used for oracle configurations
/// (size 1 makes super-customers and customers coincide).
struct FixedBatch {
    uint64_t size = 1;
};

using BatchModel = std::variant<FracPowerLaw, FixedBatch>;

double batch_pmf(const BatchModel& b, uint64_t k);
double batch_survival(const BatchModel& b, uint64_t k);
double batch_pgf(const BatchModel& b, double z);

/// 1 - phi(1 - eps), cancellation-free.
double batch_pgf_complement(const BatchModel& b, double eps);
double batch_pgf_derivative(const BatchModel& b, double u);

/// Exponential sojourn with the given rate (mean 1/rate).
struct ExpSojourn {
    double rate = 1.0;
};

/// Discrete power-law sojourn of the given tail order.
struct PowerLawSojourn {
    explicit PowerLawSojourn(double order) : law(order) {}
    FracPowerLaw law;
};

/// Deterministic sojourn; test plumbing (M^X/D/infinity has simple
/// closed forms to check everything else against).
struct DetSojourn {
    double duration = 1.0;
};

using SojournModel = std::variant<ExpSojourn, PowerLawSojourn, DetSojourn>;

/// P(S > t) for real t >= 0. Discrete sojourns use the convention
/// P(S > t) = P(S >= floor(t)+1), which makes the stationary integral an
/// exact sum over integer ages and reproduces the alpha_k formulas.
double sojourn_survival(const SojournModel& s, double t);

/// E[S^r]; +infinity is reported as such, not an error.
double sojourn_moment(const SojournModel& s, double r);
bool sojourn_moment_finite(const SojournModel& s, double r);

/// Poisson batch arrivals at rate lambda; each batch draws one size X
/// and that many sojourns. lambda = 0 is allowed as the degenerate
/// empty-system limit.
struct ArrivalSpec {
    double lambda = 1.0;
    BatchModel batch = FracPowerLaw(1.0);
    SojournModel sojourn = ExpSojourn{1.0};

    void validate() const {
        if (!(lambda >= 0.0)) throw std::domain_error("ArrivalSpec: lambda >= 0 required");
    }
};

/// A queue-length distribution extracted from a pgf expansion or an
/// empirical histogram: P(L = n) for n = 0..N plus the mass beyond N.
struct QueueDistribution {
    std::vector<double> probs;
    std::vector<double> stderrs;  // empty for analytic distributions
    double deficit = 0.0;         // P(L > N)
    std::optional<double> time;   // absent => stationary

    std::size_t max_n() const { return probs.empty() ? 0 : probs.size() - 1; }
};

/// Total variation distance over the common support 0..n_max of two
/// distributions (deficits excluded; both vectors padded with zeros).
double tv_distance(const QueueDistribution& a, const QueueDistribution& b, std::size_t n_max);

}  // namespace isq
