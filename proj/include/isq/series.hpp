#pragma once

#include <cstddef>
#include <vector>

#include "isq/queue_model.hpp"

namespace isq {

/// Truncated power series in the pgf variable z: coefficient of z^n at
/// index n, n = 0..order. Immutable value semantics; every operation
/// returns a new series truncated at the same order.
class TruncatedSeries {
  public:
    TruncatedSeries() : coeffs_(1, 0.0) {}
    explicit TruncatedSeries(std::size_t order) : coeffs_(order + 1, 0.0) {}
    explicit TruncatedSeries(std::vector<double> coeffs);

    static TruncatedSeries constant(double c, std::size_t order);

    std::size_t order() const { return coeffs_.size() - 1; }
    double operator[](std::size_t n) const { return coeffs_[n]; }
    double& at(std::size_t n) { return coeffs_[n]; }
    const std::vector<double>& coeffs() const { return coeffs_; }

    /// Horner evaluation at a scalar z.
    double eval(double z) const;

    double coefficient_sum() const;

    TruncatedSeries& operator+=(const TruncatedSeries& rhs);
    TruncatedSeries& operator-=(const TruncatedSeries& rhs);
    TruncatedSeries& operator*=(double s);

  private:
    std::vector<double> coeffs_;
};

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b);

/// Cauchy product truncated at the common order.
TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b);

/// exp of a series by the standard coefficient recurrence
/// b0 = e^{a0}, n b_n = sum_{k=1}^{n} k a_k b_{n-k}.
TruncatedSeries exp_series(const TruncatedSeries& a);

/// log of a series with a0 > 0; inverse of exp_series.
TruncatedSeries log_series(const TruncatedSeries& a);

/// Series in z of phi(a z + b) to the given order, where phi is the pgf
/// of the batch law and 0 <= a, 0 <= b, a + b <= 1. With a + b = 1 this
/// is the pgf of the survival-thinned batch, E[z^{M}] with
/// M ~ thin(X, a): the number of batch members still in the system when
/// each survives independently with probability a.
TruncatedSeries affine_compose(const BatchModel& batch, double a, double b, std::size_t order);

}  // namespace isq
