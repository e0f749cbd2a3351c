#pragma once

#include <functional>

namespace wmml {

inline constexpr double euler_mascheroni = 0.57721566490153286;

struct QuadratureSpec {
    double abs_tol = 1e-12;
    int max_depth = 60;
};

struct QuadResult {
    double value = 0.0;
    bool converged = false;
};

// Adaptive Gauss-Kronrod quadrature on (a, b). Endpoint singularities must be
// integrable; non-finite endpoint evaluations are nudged inward.
QuadResult adaptive_quad(const std::function<double(double)>& f, double a, double b,
                         const QuadratureSpec& spec = {});

// Standard normal CDF and the log of its complement, log(1 - Phi(x)).
double std_normal_cdf(double x);
double std_normal_log_sf(double x);

// Inverse standard normal CDF; throws std::domain_error for p outside (0,1).
double std_normal_quantile(double p);

// (gamma(1,x), d/dz gamma(z,x)|_{z=1}, d^2/dz^2 gamma(z,x)|_{z=1}), i.e.
// integrals of (log t)^j exp(-t) over (0, x) for j = 0, 1, 2.
struct GammaOrderDerivs {
    double g0 = 0.0;
    double g1 = 0.0;
    double g2 = 0.0;
};
GammaOrderDerivs lower_incomplete_gamma_order_derivs(double x);

// Regularized incomplete gamma functions P(s,x) = gamma(s,x)/Gamma(s) and
// Q(s,x) = 1 - P(s,x).
double gamma_p(double s, double x);
double gamma_q(double s, double x);

// Exponential integral Ei(z); throws std::domain_error at z = 0.
double exp_integral_ei(double z);

}  // namespace wmml
