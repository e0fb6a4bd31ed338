#pragma once

#include <cstdint>
#include <limits>

#include "isq/queue_model.hpp"
#include "isq/sim.hpp"

namespace isq {
namespace stability {

enum class Verdict { Stable, Unstable, Indeterminate };

enum class Criterion {
    None,
    HolderBound,     // finite {E[S^r]}^{1/r} E[X^{1/r}]
    LogCriterion,    // exponential sojourns: E[log X] finite
    EsxDivergence,   // partial sums of E[S_(X)] grow like b log t
    EsxConvergence,  // E[S_(X)] series converges
};

struct Evidence {
    double holder_bound = std::numeric_limits<double>::quiet_NaN();
    double holder_exponent = std::numeric_limits<double>::quiet_NaN();
    double esx_value = std::numeric_limits<double>::quiet_NaN();
    double growth_rate = std::numeric_limits<double>::quiet_NaN();
    double fit_residual = std::numeric_limits<double>::quiet_NaN();
    uint64_t terms_used = 0;
    // The divergence => instability direction holds only for Poisson
    // batch arrivals; general arrival processes get a labeled verdict.
    bool poisson_batch_only = false;
};

struct StabilityVerdict {
    Verdict verdict = Verdict::Indeterminate;
    Criterion criterion = Criterion::None;
    Evidence evidence;
};

struct MaxSojournEstimate {
    enum class Method { ClosedFormSeries, PartialSumDivergence, MonteCarlo };

    double value = std::numeric_limits<double>::quiet_NaN();  // +inf when diverged
    bool diverged = false;
    Method method = Method::ClosedFormSeries;
    uint64_t terms_used = 0;
    double growth_rate = std::numeric_limits<double>::quiet_NaN();
    double fit_residual = std::numeric_limits<double>::quiet_NaN();

    bool converged() const { return !diverged && std::isfinite(value); }
};

/// Hoelder balance bound E[S_(X)] <= {E[S^r]}^{1/r} E[X^{1/r}].
/// Returns +infinity when either factor is infinite; a finite value
/// certifies stability. Requires r >= 1.
double holder_bound(double r, const BatchModel& batch, const SojournModel& sojourn);

struct HolderSearchResult {
    double exponent = std::numeric_limits<double>::quiet_NaN();
    double bound = std::numeric_limits<double>::infinity();
};

/// Scan r over a grid (plus the analytic midpoint of the feasible window)
/// and report the smallest finite bound.
HolderSearchResult holder_search(const BatchModel& batch, const SojournModel& sojourn);

/// E[S_(X)] = sum_{k>=0} (1 - phi(P(S <= k))) for independent sojourns,
/// with divergence detected by a growth-rate fit of the partial sums
/// against a + b log t (never by a timeout).
MaxSojournEstimate esx_estimate(const BatchModel& batch, const SojournModel& sojourn,
                                double tol = 1e-10);

/// Finite-age partial integral int_0^t P(S_(X) > s) ds; the exact
/// transient mean super-customer count is lambda times this.
double esx_partial(const BatchModel& batch, const SojournModel& sojourn, double t);

/// Classify the (batch order, sojourn order) pair: Stable when pq > 1 and
/// q > 1 (Hoelder criterion realizable), Unstable when the E[S_(X)]
/// series provably diverges, Indeterminate when neither fires.
StabilityVerdict classify_pq(double batch_order, double sojourn_order);

/// Classify a full arrival spec.
StabilityVerdict classify(const ArrivalSpec& spec);

/// Little's-law cross check: time-averaged super-customer count from the
/// simulation against lambda E[S_(X)]. Pass iff within 3 standard errors.
/// Also reports the exact finite-horizon target (the window average of
/// lambda int_0^t P(S_(X)>s) ds), whose gap to the stationary target is
/// the heavy-tail warm-up bias. Throws UnstableSpecError-equivalent
/// std::invalid_argument for unstable specs.
struct LittleReport {
    double k_bar = 0.0;
    double k_se = 0.0;
    double target_stationary = 0.0;
    double target_window = 0.0;
    bool pass_stationary = false;
    bool pass_window = false;
};
LittleReport verify_little(const sim::SimOutput& output, const sim::SimConfig& config);

/// Monte Carlo E[S_(X)] with the batch draw capped; cap hits are
/// reported so the truncation effect stays visible.
struct McEstimate {
    double mean = 0.0;
    double se = 0.0;
    uint64_t cap_hits = 0;
};
McEstimate mc_esx(const BatchModel& batch, const SojournModel& sojourn, uint64_t samples,
                  uint64_t seed, uint64_t batch_cap = 1000000);

/// Monte Carlo E[max of n iid sojourns].
McEstimate mc_max_iid(const SojournModel& sojourn, uint64_t n, uint64_t samples, uint64_t seed);

}  // namespace stability
}  // namespace isq
