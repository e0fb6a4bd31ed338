#include "isq/power_law.hpp"

#include <cmath>
#include <stdexcept>

#include "isq/math_util.hpp"

namespace isq {

namespace {

constexpr uint64_t kDirectSumTerms = 4096;

}  // namespace

FracPowerLaw::FracPowerLaw(double order) : order_(order) {
    if (!(order > 0.0) || !std::isfinite(order)) {
        throw std::domain_error("FracPowerLaw: order must be positive and finite");
    }
    log_gamma_order_plus_1_ = std::lgamma(order + 1.0);
}

double FracPowerLaw::log_survival(double x) const {
    if (!(x >= 1.0)) throw std::domain_error("FracPowerLaw::log_survival: x >= 1 required");
    return log_gamma_order_plus_1_ - lgamma_ratio(x, order_);
}

double FracPowerLaw::survival(uint64_t k) const {
    if (k < 1) throw std::domain_error("FracPowerLaw::survival: k >= 1 required");
    if (k == 1) return 1.0;
    return std::exp(log_survival(static_cast<double>(k)));
}

double FracPowerLaw::log_pmf(uint64_t k) const {
    if (k < 1) throw std::domain_error("FracPowerLaw::pmf: k >= 1 required");
    double kd = static_cast<double>(k);
    return log_survival(kd) + std::log(order_ / (order_ + kd));
}

double FracPowerLaw::pmf(uint64_t k) const { return std::exp(log_pmf(k)); }

bool FracPowerLaw::moment_finite(double r) const {
    if (!(r > 0.0)) throw std::domain_error("FracPowerLaw::moment_finite: r > 0 required");
    return r < order_;
}

double FracPowerLaw::moment(double r) const {
    if (!moment_finite(r)) throw std::domain_error("FracPowerLaw::moment: E[X^r] is infinite for r >= order");
    KahanSum sum;
    for (uint64_t k = 1; k <= kDirectSumTerms; ++k) {
        sum.add(std::exp(r * std::log(static_cast<double>(k)) + log_pmf(k)));
    }
    double tail = euler_maclaurin_tail(
        [this, r](double x) {
            return std::exp(r * std::log(x) + log_survival(x) + std::log(order_ / (order_ + x)));
        },
        static_cast<double>(kDirectSumTerms));
    return sum.value() + tail;
}

double FracPowerLaw::expected_harmonic() const {
    KahanSum sum;
    for (uint64_t n = 1; n <= kDirectSumTerms; ++n) {
        sum.add(std::exp(log_survival(static_cast<double>(n))) / static_cast<double>(n));
    }
    double tail = euler_maclaurin_tail(
        [this](double x) { return std::exp(log_survival(x)) / x; },
        static_cast<double>(kDirectSumTerms));
    return sum.value() + tail;
}

double FracPowerLaw::pgf(double z) const {
    if (!(z >= 0.0) || !(z < 1.0)) {
        throw std::domain_error("FracPowerLaw::pgf: z in [0, 1) required");
    }
    if (z == 0.0) return 0.0;  // support starts at 1
    if (order_ == 1.0) return 1.0 + (1.0 - 1.0 / z) * (-std::log1p(-z));
    if (order_ == 2.0) {
        double omz = 1.0 - z;
        return 1.0 - 2.0 * omz * (z + omz * std::log(omz)) / (z * z);
    }
    if (order_ == 0.5) return 1.0 - std::sqrt((1.0 - z) / z) * std::asin(std::sqrt(z));
    return 1.0 - pgf_complement(1.0 - z);
}

double FracPowerLaw::pgf_complement(double eps) const {
    if (!(eps >= 0.0) || !(eps <= 1.0)) {
        throw std::domain_error("FracPowerLaw::pgf_complement: eps in [0, 1] required");
    }
    if (eps == 0.0) return 0.0;
    if (eps == 1.0) return 1.0;
    // Closed forms, written in eps = 1-u so they stay exact as eps -> 0.
    if (order_ == 1.0) return eps / (1.0 - eps) * (-std::log(eps));
    if (order_ == 2.0) {
        double u = 1.0 - eps;
        return 2.0 * eps * (u + eps * std::log(eps)) / (u * u);
    }
    if (order_ == 0.5) {
        double r = std::sqrt(eps / (1.0 - eps));
        return r * (M_PI / 2.0 - std::asin(std::sqrt(eps)));
    }
    // General order: sum pmf(k) (1 - u^k) term-wise; each term is computed
    // via expm1 so nothing cancels even at eps ~ 1e-300.
    double log_u = std::log1p(-eps);
    KahanSum sum;
    for (uint64_t k = 1; k <= kDirectSumTerms; ++k) {
        sum.add(-std::expm1(static_cast<double>(k) * log_u) * pmf(k));
    }
    double tail = euler_maclaurin_tail(
        [this, log_u](double x) {
            double p = std::exp(log_survival(x) + std::log(order_ / (order_ + x)));
            return -std::expm1(x * log_u) * p;
        },
        static_cast<double>(kDirectSumTerms));
    return sum.value() + tail;
}

double FracPowerLaw::pgf_derivative(double u) const {
    if (!(u >= 0.0) || !(u < 1.0)) {
        throw std::domain_error("FracPowerLaw::pgf_derivative: u in [0, 1) required");
    }
    if (u == 0.0) return pmf(1);
    if (order_ == 1.0) {
        double l = -std::log1p(-u);
        return l / (u * u) - 1.0 / u;
    }
    if (order_ == 2.0) {
        double omu = 1.0 - u;
        double l = std::log(omu);
        // d/du [ 1 - 2(1-u) g(u) / u^2 ] with g(u) = u + (1-u)log(1-u), g'(u) = -log(1-u)
        double inner = u + omu * l;
        return 2.0 * inner / (u * u) + 2.0 * omu * l / (u * u) + 4.0 * omu * inner / (u * u * u);
    }
    if (order_ == 0.5) {
        double b = std::sqrt((1.0 - u) / u);
        double a = std::asin(std::sqrt(u));
        return b * a / (2.0 * u * (1.0 - u)) - 1.0 / (2.0 * u);
    }
    double log_u = std::log(u);
    KahanSum sum;
    for (uint64_t k = 1; k <= kDirectSumTerms; ++k) {
        sum.add(std::exp(log_pmf(k) + std::log(static_cast<double>(k)) + (static_cast<double>(k) - 1.0) * log_u));
    }
    double tail = euler_maclaurin_tail(
        [this, log_u](double x) {
            return std::exp(log_survival(x) + std::log(order_ / (order_ + x)) + std::log(x) + (x - 1.0) * log_u);
        },
        static_cast<double>(kDirectSumTerms));
    return sum.value() + tail;
}

FracPowerLaw::Sample FracPowerLaw::sample(double u, uint64_t cap) const {
    if (!(u > 0.0) || !(u < 1.0)) throw std::domain_error("FracPowerLaw::sample: u in (0, 1) required");
    if (cap < 1) throw std::domain_error("FracPowerLaw::sample: cap >= 1 required");
    double log_u = std::log(u);
    auto above = [&](uint64_t k) {  // survival(k+1) > u ?
        return log_survival(static_cast<double>(k) + 1.0) > log_u;
    };
    if (!above(1)) return {1, false};
    // Exponential search for a bracket [lo, hi] with above(lo) && !above(hi).
    uint64_t lo = 1, hi = 2;
    while (above(hi)) {
        if (hi >= cap) return {cap, true};
        lo = hi;
        hi = (hi > cap / 2) ? cap : hi * 2;
    }
    while (hi - lo > 1) {
        uint64_t mid = lo + (hi - lo) / 2;
        (above(mid) ? lo : hi) = mid;
    }
    return {hi, false};
}

double geometric_pmf(double theta, uint64_t k) {
    if (!(theta > 0.0) || !(theta < 1.0)) throw std::domain_error("geometric_pmf: theta in (0,1) required");
    if (k < 1) throw std::domain_error("geometric_pmf: k >= 1 required");
    return theta * std::exp((static_cast<double>(k) - 1.0) * std::log1p(-theta));
}

}  // namespace isq
