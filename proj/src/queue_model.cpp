#include "isq/queue_model.hpp"

#include <cmath>
#include <limits>

#include "isq/math_util.hpp"

namespace isq {

double batch_pmf(const BatchModel& b, uint64_t k) {
    return std::visit(
        [k](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FracPowerLaw>) {
                return d.pmf(k);
            } else {
                return k == d.size ? 1.0 : 0.0;
            }
        },
        b);
}

double batch_survival(const BatchModel& b, uint64_t k) {
    return std::visit(
        [k](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FracPowerLaw>) {
                return d.survival(k);
            } else {
                return k <= d.size ? 1.0 : 0.0;
            }
        },
        b);
}

double batch_pgf(const BatchModel& b, double z) {
    return std::visit(
        [z](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FracPowerLaw>) {
                return d.pgf(z);
            } else {
                return std::pow(z, static_cast<double>(d.size));
            }
        },
        b);
}

double batch_pgf_complement(const BatchModel& b, double eps) {
    return std::visit(
        [eps](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FracPowerLaw>) {
                return d.pgf_complement(eps);
            } else {
                return -std::expm1(static_cast<double>(d.size) * std::log1p(-eps));
            }
        },
        b);
}

double batch_pgf_derivative(const BatchModel& b, double u) {
    return std::visit(
        [u](const auto& d) -> double {
            using T = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<T, FracPowerLaw>) {
                return d.pgf_derivative(u);
            } else {
                double m = static_cast<double>(d.size);
                return m * std::pow(u, m - 1.0);
            }
        },
        b);
}

double sojourn_survival(const SojournModel& s, double t) {
    if (t < 0.0) return 1.0;
    return std::visit(
        [t](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ExpSojourn>) {
                return std::exp(-m.rate * t);
            } else if constexpr (std::is_same_v<T, PowerLawSojourn>) {
                return m.law.survival(static_cast<uint64_t>(std::floor(t)) + 1);
            } else {
                return t < m.duration ? 1.0 : 0.0;
            }
        },
        s);
}

bool sojourn_moment_finite(const SojournModel& s, double r) {
    return std::visit(
        [r](const auto& m) -> bool {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PowerLawSojourn>) {
                return m.law.moment_finite(r);
            } else {
                (void)m;
                return true;
            }
        },
        s);
}

double sojourn_moment(const SojournModel& s, double r) {
    if (!(r > 0.0)) throw std::domain_error("sojourn_moment: r > 0 required");
    return std::visit(
        [r](const auto& m) -> double {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, ExpSojourn>) {
                return std::exp(std::lgamma(r + 1.0) - r * std::log(m.rate));
            } else if constexpr (std::is_same_v<T, PowerLawSojourn>) {
                if (!m.law.moment_finite(r)) return std::numeric_limits<double>::infinity();
                return m.law.moment(r);
            } else {
                return std::pow(m.duration, r);
            }
        },
        s);
}

double tv_distance(const QueueDistribution& a, const QueueDistribution& b, std::size_t n_max) {
    double s = 0.0;
    for (std::size_t n = 0; n <= n_max; ++n) {
        double pa = n < a.probs.size() ? a.probs[n] : 0.0;
        double pb = n < b.probs.size() ? b.probs[n] : 0.0;
        s += std::fabs(pa - pb);
    }
    return 0.5 * s;
}

}  // namespace isq
