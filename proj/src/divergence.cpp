#include "wmml/divergence.hpp"

#include <cmath>
#include <stdexcept>

#include "wmml/specfun.hpp"

namespace wmml {

namespace {

void check_weibull(const WeibullParams& p) {
    if (!(p.shape > 0.0) || !(p.scale > 0.0))
        throw std::domain_error("kl divergence: Weibull parameters must be positive");
}

}  // namespace

KLResult kl_weibull_type1(const WeibullParams& p0, const WeibullParams& p1, double c) {
    check_weibull(p0);
    check_weibull(p1);
    if (!(c > 0.0)) throw std::domain_error("kl_weibull_type1: c must be > 0");
    const double k0 = p0.shape, l0 = p0.scale;
    const double k1 = p1.shape, l1 = p1.scale;
    const double z0 = std::exp(k0 * std::log(c / l0));
    const double log_ratio = std::log(k0 / k1) + k1 * std::log(l1 / l0);
    const double s = k1 / k0 + 1.0;

    double value = log_ratio - 1.0;
    if (z0 < 700.0) {
        const double a1 = std::log(k1 / k0) + (k1 - k0) * std::log(c) +
                          k0 * std::log(l0) - k1 * std::log(l1) +
                          std::exp(k1 * std::log(c / l1)) + 1.0;
        value += std::exp(-z0) * a1;
    }
    // A2 = Gamma(s) - Gamma(s, z0) = Gamma(s) P(s, z0)
    value += std::exp(k1 * std::log(l0 / l1)) * std::tgamma(s) * gamma_p(s, z0);
    value += (1.0 - k1 / k0) * (exp_integral_ei(-z0) - euler_mascheroni);
    return {value, KLRegime::WeibullTypeI};
}

KLResult kl_weibull_complete(const WeibullParams& p0, const WeibullParams& p1) {
    check_weibull(p0);
    check_weibull(p1);
    const double k0 = p0.shape, l0 = p0.scale;
    const double k1 = p1.shape, l1 = p1.scale;
    const double value = std::exp(k1 * std::log(l0 / l1)) * std::tgamma(k1 / k0 + 1.0) +
                         euler_mascheroni * (k1 / k0 - 1.0) +
                         std::log(k0 / k1) + k1 * std::log(l1 / l0) - 1.0;
    return {value, KLRegime::WeibullComplete};
}

KLResult kl_exponential_type1(double lambda0, double lambda1, double c) {
    if (!(lambda0 > 0.0) || !(lambda1 > 0.0) || !(c > 0.0))
        throw std::domain_error("kl_exponential_type1: all arguments must be positive");
    const double value = -std::expm1(-c / lambda0) *
                         (lambda0 / lambda1 + std::log(lambda1 / lambda0) - 1.0);
    return {value, KLRegime::ExponentialTypeI};
}

}  // namespace wmml
