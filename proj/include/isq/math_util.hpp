#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace isq {

/// lgamma(x + a) - lgamma(x) for x > 0, a >= 0, computed without the
/// catastrophic cancellation of subtracting two large lgamma values.
/// Accurate to ~1e-15 absolute for x up to 1e18.
double lgamma_ratio(double x, double a);

/// Regularized lower incomplete gamma P(a, x).
double gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

/// Survival function of the chi-square distribution with `dof` degrees
/// of freedom, i.e. the goodness-of-fit p-value for statistic x2.
double chi_square_pvalue(double x2, int dof);

/// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1].
/// Computed once per order and cached.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

/// Integrate f over [a, b] with a fixed-order Gauss-Legendre rule.
double integrate_gl(const std::function<double(double)>& f, double a, double b, int order = 16);

/// Compensated (Kahan) accumulator for long probability sums.
class KahanSum {
  public:
    void add(double x) {
        double y = x - comp_;
        double t = sum_ + y;
        comp_ = (t - sum_) - y;
        sum_ = t;
    }
    double value() const { return sum_; }

  private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

/// Sum_{j > J} f(j) for a smooth integrand f defined on real x >= J that
/// decays like a power law. Uses the midpoint Euler-Maclaurin formula:
/// integral from J+1/2 plus the first derivative correction, with the
/// integral evaluated over dyadic panels until the remainder is below
/// rel_tol of the accumulated value.
double euler_maclaurin_tail(const std::function<double(double)>& f, double j_start,
                            double rel_tol = 1e-12, double x_cap = 1e18);

/// Ordinary least squares fit y = a + b x. Returns {a, b, rms_residual}.
struct LinearFit {
    double intercept = 0.0;
    double slope = 0.0;
    double rms_residual = 0.0;
};
LinearFit linear_fit(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace isq
