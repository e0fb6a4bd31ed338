#include "isq/series.hpp"

#include <cmath>
#include <stdexcept>

namespace isq {

namespace {

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw std::invalid_argument("TruncatedSeries: mismatched truncation orders");
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("TruncatedSeries: empty coefficient array");
}

TruncatedSeries TruncatedSeries::constant(double c, std::size_t order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
}

double TruncatedSeries::eval(double z) const {
    double acc = 0.0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * z + coeffs_[i];
    return acc;
}

double TruncatedSeries::coefficient_sum() const {
    double s = 0.0, comp = 0.0;
    for (double c : coeffs_) {
        double y = c - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
    }
    return s;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator-=(const TruncatedSeries& rhs) {
    require_same_order(*this, rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

TruncatedSeries& TruncatedSeries::operator*=(double s) {
    for (double& c : coeffs_) c *= s;
    return *this;
}

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a;
    r += b;
    return r;
}

TruncatedSeries sub(const TruncatedSeries& a, const TruncatedSeries& b) {
    TruncatedSeries r = a;
    r -= b;
    return r;
}

TruncatedSeries mul(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::size_t n = a.order();
    TruncatedSeries r(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j <= n; ++j) r.at(i + j) += a[i] * b[j];
    }
    return r;
}

TruncatedSeries exp_series(const TruncatedSeries& a) {
    std::size_t n = a.order();
    TruncatedSeries b(n);
    b.at(0) = std::exp(a[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        double acc = 0.0;
        for (std::size_t k = 1; k <= m; ++k) acc += static_cast<double>(k) * a[k] * b[m - k];
        b.at(m) = acc / static_cast<double>(m);
    }
    return b;
}

TruncatedSeries log_series(const TruncatedSeries& a) {
    if (!(a[0] > 0.0)) throw std::domain_error("log_series: constant term must be positive");
    std::size_t n = a.order();
    TruncatedSeries b(n);
    b.at(0) = std::log(a[0]);
    for (std::size_t m = 1; m <= n; ++m) {
        double acc = static_cast<double>(m) * a[m];
        for (std::size_t k = 1; k < m; ++k) acc -= static_cast<double>(k) * b[k] * a[m - k];
        b.at(m) = acc / (static_cast<double>(m) * a[0]);
    }
    return b;
}

namespace {

// Route 1: a + b = 1 with a = 1 -- the composition is phi itself.
TruncatedSeries compose_pmf(const BatchModel& batch, std::size_t order) {
    TruncatedSeries r(order);
    for (std::size_t k = 1; k <= order; ++k) r.at(k) = batch_pmf(batch, k);
    return r;
}

// Route 2: direct binomial summation sum_m pmf(m) (b + a z)^m with the
// power polynomial updated in place. Stops once the remaining batch tail
// cannot move any retained coefficient: the truncated mass of (b+az)^m
// is nonincreasing in m, so survival(m) * mass_m bounds the remainder.
TruncatedSeries compose_binomial(const BatchModel& batch, double a, double b, std::size_t order) {
    TruncatedSeries acc(order);
    std::vector<double> pw(order + 1, 0.0);
    pw[0] = 1.0;
    const uint64_t hard_cap = 1u << 22;
    for (uint64_t m = 1; m <= hard_cap; ++m) {
        // pw <- pw * (b + a z)
        for (std::size_t n = order; n > 0; --n) pw[n] = pw[n] * b + pw[n - 1] * a;
        pw[0] *= b;
        double w = batch_pmf(batch, m);
        double mass = 0.0;
        for (std::size_t n = 0; n <= order; ++n) {
            acc.at(n) += w * pw[n];
            mass += pw[n];
        }
        if (batch_survival(batch, m + 1) * mass < 1e-16) break;
    }
    return acc;
}

// Route 3 (power-law batch, a + b = 1, a < 1/2): the auxiliary series
// y(z) = T(1 - a(1-z)) with T(u) = sum_i P(X >= i+1) u^i satisfies a
// hypergeometric ODE, giving an O(order) forward recurrence
//   y_{m+2} = { [(1-2c)m - p + 2 - 3c] y_{m+1} + c(m+1) y_m } / [(1-c)(m+2)]
// seeded by scalar pgf values. The contaminating solution decays like
// (c/(1-c))^n, so the forward direction is stable precisely when c < 1/2.
TruncatedSeries compose_ode(const FracPowerLaw& batch, double c, std::size_t order) {
    double p = batch.order();
    double y0 = batch.pgf_complement(c) / c;
    double y1 = y0 - batch.pgf_derivative(1.0 - c);
    std::vector<double> y(order + 2, 0.0);
    y[0] = y0;
    y[1] = y1;
    for (std::size_t m = 0; m + 2 < y.size(); ++m) {
        double md = static_cast<double>(m);
        y[m + 2] = (((1.0 - 2.0 * c) * md - p + 2.0 - 3.0 * c) * y[m + 1] + c * (md + 1.0) * y[m]) /
                   ((1.0 - c) * (md + 2.0));
    }
    // phi(1 - c(1-z)) = 1 - c(1-z) y(z)
    TruncatedSeries r(order);
    r.at(0) = 1.0 - c * y[0];
    for (std::size_t n = 1; n <= order; ++n) r.at(n) = c * (y[n - 1] - y[n]);
    return r;
}

}  // namespace

TruncatedSeries affine_compose(const BatchModel& batch, double a, double b, std::size_t order) {
    if (!(a >= 0.0) || !(b >= 0.0) || !(a + b <= 1.0 + 1e-12)) {
        throw std::domain_error("affine_compose: need a, b >= 0 and a + b <= 1");
    }
    if (a == 0.0) return TruncatedSeries::constant(batch_pgf(batch, b), order);
    bool thinning = std::fabs(a + b - 1.0) < 1e-12;
    if (thinning) {
        if (a >= 1.0 - 1e-15) return compose_pmf(batch, order);
        if (a <= 0.45) {
            if (const auto* pl = std::get_if<FracPowerLaw>(&batch)) return compose_ode(*pl, a, order);
        }
    }
    return compose_binomial(batch, a, b, order);
}

}  // namespace isq
