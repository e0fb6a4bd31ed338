#include "isq/math_util.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

namespace isq {

namespace {

// B_{2m} / (2m (2m-1)) for the Stirling series, m = 1..7.
constexpr double kStirlingCoef[] = {
    1.0 / 12.0,                    // B2  = 1/6
    -1.0 / 360.0,                  // B4  = -1/30
    1.0 / 1260.0,                  // B6  = 1/42
    -1.0 / 1680.0,                 // B8  = -1/30
    1.0 / 1188.0,                  // B10 = 5/66
    -691.0 / 360360.0,             // B12 = -691/2730
    1.0 / 156.0,                   // B14 = 7/6
};

// Sum of the Stirling correction terms at x.
double stirling_series(double x) {
    double inv = 1.0 / x;
    double inv2 = inv * inv;
    double term = inv;
    double s = 0.0;
    for (double c : kStirlingCoef) {
        s += c * term;
        term *= inv2;
    }
    return s;
}

}  // namespace

double lgamma_ratio(double x, double a) {
    if (!(x > 0.0) || a < 0.0) throw std::domain_error("lgamma_ratio: x > 0, a >= 0 required");
    if (a == 0.0) return 0.0;

    // Lift x into the asymptotic regime; each step uses
    // lgamma(x+a) - lgamma(x) = [lgamma(x+1+a) - lgamma(x+1)] + log((x+a)/x).
    double shift = 0.0;
    constexpr double kAsymptotic = 16.0;
    while (x < kAsymptotic) {
        shift += std::log1p(a / x);
        x += 1.0;
    }

    // Stirling difference, written so every piece stays O(a log x):
    // (x+a-1/2) ln(x+a) - (x-1/2) ln x - a  + sum of B-term differences
    //   = (x-1/2) log1p(a/x) + a ln(x+a) - a + [S(x+a) - S(x)]
    double main = (x - 0.5) * std::log1p(a / x) + a * std::log(x + a) - a;
    double corr = stirling_series(x + a) - stirling_series(x);
    return shift + main + corr;
}

namespace {

// Lower incomplete gamma by series, valid for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::fabs(del) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Upper incomplete gamma by Lentz continued fraction, valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 500; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

double gamma_p(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_p: a > 0, x >= 0 required");
    if (x == 0.0) return 0.0;
    return (x < a + 1.0) ? gamma_p_series(a, x) : 1.0 - gamma_q_cf(a, x);
}

double gamma_q(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("gamma_q: a > 0, x >= 0 required");
    if (x == 0.0) return 1.0;
    return (x < a + 1.0) ? 1.0 - gamma_p_series(a, x) : gamma_q_cf(a, x);
}

double chi_square_pvalue(double x2, int dof) {
    if (dof <= 0) throw std::domain_error("chi_square_pvalue: dof must be positive");
    if (x2 <= 0.0) return 1.0;
    return gamma_q(0.5 * dof, 0.5 * x2);
}

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
    static std::mutex mtx;
    static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<double> x(n), w(n);
    int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        // Newton iteration from the Chebyshev estimate.
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            pp = n * (z * p0 - p1) / (z * z - 1.0);
            double z1 = z;
            z = z1 - p0 / pp;
            if (std::fabs(z - z1) < 1e-15) break;
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        w[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        w[n - 1 - i] = w[i];
    }
    return cache.emplace(n, std::make_pair(std::move(x), std::move(w))).first->second;
}

double integrate_gl(const std::function<double(double)>& f, double a, double b, int order) {
    const auto& [x, w] = gauss_legendre(order);
    double mid = 0.5 * (a + b);
    double half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < order; ++i) s += w[i] * f(mid + half * x[i]);
    return s * half;
}

double euler_maclaurin_tail(const std::function<double(double)>& f, double j_start,
                            double rel_tol, double x_cap) {
    double a = j_start + 0.5;
    // Dyadic panels [a, 2a], [2a, 4a], ... until a panel is negligible.
    double integral = 0.0;
    double lo = a;
    while (lo < x_cap) {
        double hi = std::min(lo * 2.0, x_cap);
        double panel = integrate_gl(f, lo, hi, 16);
        integral += panel;
        if (std::fabs(panel) < rel_tol * std::fabs(integral) + 1e-300) break;
        lo = hi;
    }
    // First midpoint Euler-Maclaurin correction: + f'(a)/24.
    double h = std::max(1e-4 * a, 1e-6);
    double deriv = (f(a + h) - f(a - h)) / (2.0 * h);
    return integral + deriv / 24.0;
}

LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size() || x.size() < 2) throw std::invalid_argument("linear_fit: need >= 2 points");
    size_t n = x.size();
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    double denom = n * sxx - sx * sx;
    LinearFit fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;
    double ss = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double r = y[i] - (fit.intercept + fit.slope * x[i]);
        ss += r * r;
    }
    fit.rms_residual = std::sqrt(ss / n);
    return fit;
}

}  // namespace isq
