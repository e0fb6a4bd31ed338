#pragma once

#include <cstdint>
#include <utility>

namespace isq {

/// Discrete fractional power-law distribution on {1, 2, ...} with tail
/// order p: P(X = k) = (1 - k/(p+k)) * prod_{i<k} i/(p+i), so that
/// P(X >= k) = Gamma(p+1) Gamma(k) / Gamma(p+k) ~ Gamma(p+1) k^{-p}.
/// Moments E[X^r] are finite exactly for r < p.
///
/// Survival is the primitive; the pmf is derived from it in log space
/// (the telescoping product underflows long before log-gamma does).
class FracPowerLaw {
  public:
    explicit FracPowerLaw(double order);

    double order() const { return order_; }

    /// log P(X >= x). Defined for real x >= 1 so tail sums can be
    /// completed by smooth quadrature.
    double log_survival(double x) const;

    /// P(X >= k), k >= 1.
    double survival(uint64_t k) const;

    /// P(X = k), k >= 1.
    double pmf(uint64_t k) const;
    double log_pmf(uint64_t k) const;

    /// True iff E[X^r] < infinity, i.e. r < order.
    bool moment_finite(double r) const;

    /// E[X^r] for 0 < r < order (throws std::domain_error otherwise,
    /// since the moment is infinite).
    double moment(double r) const;

    /// E[sum_{i=1}^{X} 1/i] = sum_{n>=1} P(X >= n)/n. Finite for every
    /// order > 0; this is the mean max-sojourn in units of 1/mu when
    /// sojourns are exponential.
    double expected_harmonic() const;

    /// E[z^X] for z in [0, 1). Closed forms for order 1/2, 1, 2;
    /// otherwise direct summation with an Euler-Maclaurin tail.
    double pgf(double z) const;

    /// 1 - E[(1-eps)^X] for eps in [0, 1], computed without cancellation.
    /// This is P(at least one of X survival-eps thinning trials succeeds)
    /// and the workhorse of every stationary-queue tail sum.
    double pgf_complement(double eps) const;

    /// d/du E[u^X] at u in [0, 1).
    double pgf_derivative(double u) const;

    struct Sample {
        uint64_t value = 0;
        bool overflowed = false;
    };

    /// Inverse-CDF sample: the smallest k with P(X >= k+1) <= u, found by
    /// exponential-then-binary search on the log-gamma survival form.
    /// Draws above cap are clamped and flagged rather than failing; small
    /// orders legitimately produce astronomically large values.
    Sample sample(double u, uint64_t cap = (uint64_t{1} << 62)) const;

  private:
    double order_;
    double log_gamma_order_plus_1_;
};

/// Geometric reference pmf on {1, 2, ...}: P(X = k) = theta (1-theta)^{k-1}.
double geometric_pmf(double theta, uint64_t k);

}  // namespace isq
