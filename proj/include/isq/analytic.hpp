#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "isq/queue_model.hpp"
#include "isq/series.hpp"
#include "isq/stability.hpp"

namespace isq {

/// Raised when a pgf expansion is requested for a spec whose stationary
/// distribution does not exist; carries the divergence evidence.
class UnstableSpecError : public std::runtime_error {
  public:
    UnstableSpecError(const std::string& what, StabilityVerdict verdict)
        : std::runtime_error(what), verdict_(std::move(verdict)) {}
    const StabilityVerdict& verdict() const { return verdict_; }

  private:
    StabilityVerdict verdict_;
};

/// Raised when coefficient extraction meets numbers a pgf cannot produce
/// (truncation order too low, or the spec was not actually stable).
class NumericalError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace analytic {

/// Series of E[z^L] for the stationary queue length, to the given order.
/// Exponential sojourns use the exact coefficient formula
/// exp[-rho sum_n (1-z^n)/n P(X>=n)]; discrete power-law sojourns sum the
/// thinned-batch series over integer ages with an Euler-Maclaurin tail;
/// deterministic sojourns are the compound-Poisson closed form.
/// Throws UnstableSpecError when the stationary law does not exist.
TruncatedSeries stationary_pgf(const ArrivalSpec& spec, std::size_t order);

/// Scalar E[z^L] at z in [0, 1]; z = 1 returns exactly 1 for stable specs.
double stationary_pgf_value(const ArrivalSpec& spec, double z);

/// Series of E[z^{L(t)}] starting from an empty system. Works for
/// unstable specs too; only the stationary form refuses.
TruncatedSeries transient_pgf(const ArrivalSpec& spec, double t, std::size_t order);

double transient_pgf_value(const ArrivalSpec& spec, double t, double z);

/// Reinterpret a pgf expansion as P(L = n), n = 0..order, clamping
/// round-off negatives within tolerance and reporting the tail mass
/// beyond the truncation as deficit.
QueueDistribution extract_distribution(const TruncatedSeries& pgf,
                                       std::optional<double> time = std::nullopt);

/// Scalar oracle for the heavy-tailed arrival (1, 2):
/// exp[-lambda sum_k (1 - 1/a_k) log(1 - a_k)], a_k = 1 - 2(1-z)/(k(k+1)).
/// Written directly from the closed form, independent of the series engine.
double battle2_pgf_scalar(double z, double lambda);

/// Scalar oracle for the heavy-tailed arrival (1/2, 3):
/// exp[-lambda sum_k sqrt((1-a_k)/a_k) asin(sqrt(a_k))],
/// a_k = 1 - 6(1-z)/(k(k+1)(k+2)).
double battle4_pgf_scalar(double z, double lambda);

}  // namespace analytic
}  // namespace isq
