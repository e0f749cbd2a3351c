#include "wmml/survival.hpp"

#include <cmath>
#include <stdexcept>

#include "wmml/specfun.hpp"

namespace wmml {

namespace {

void check_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        throw std::domain_error(std::string(what) + " must be a positive finite real");
    }
}

}  // namespace

ReducedCensorParams reduce_params(const RandomCensorParams& p) {
    check_positive(p.theta, "theta");
    check_positive(p.alpha, "alpha");
    check_positive(p.beta, "beta");
    ReducedCensorParams r;
    // phi = alpha^theta / (alpha^theta + beta^theta), in ratio form.
    r.phi = 1.0 / (1.0 + std::exp(p.theta * std::log(p.beta / p.alpha)));
    r.shape = p.theta;
    r.scale = p.beta * std::pow(r.phi, 1.0 / p.theta);
    return r;
}

RandomCensorParams lift_params(const ReducedCensorParams& r) {
    if (!(r.phi > 0.0 && r.phi < 1.0))
        throw std::domain_error("lift_params: phi must lie in (0,1)");
    check_positive(r.shape, "shape");
    check_positive(r.scale, "scale");
    RandomCensorParams p;
    p.theta = r.shape;
    p.alpha = r.scale * std::pow(1.0 - r.phi, -1.0 / r.shape);
    p.beta = r.scale * std::pow(r.phi, -1.0 / r.shape);
    return p;
}

std::pair<double, double> weibull_pdf_cdf(double t, const WeibullParams& p) {
    check_positive(p.shape, "shape");
    check_positive(p.scale, "scale");
    if (!(t > 0.0)) throw std::domain_error("weibull_pdf_cdf: t must be > 0");
    const double z = std::pow(t / p.scale, p.shape);
    const double pdf = p.shape / t * z * std::exp(-z);
    return {pdf, -std::expm1(-z)};
}

std::vector<double> sample_weibull(const WeibullParams& p, std::size_t n, RngStream& rng) {
    check_positive(p.shape, "shape");
    check_positive(p.scale, "scale");
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(p.scale * std::pow(-std::log(rng.uniform()), 1.0 / p.shape));
    return out;
}

std::vector<double> sample_weibull(const WeibullParams& p, std::size_t n,
                                   std::uint64_t seed) {
    RngStream rng(seed);
    return sample_weibull(p, n, rng);
}

double nll_weibull(const WeibullSuffStats& st, const WeibullParams& p) {
    check_positive(p.shape, "shape");
    check_positive(p.scale, "scale");
    const double k = p.shape;
    const double log_lam = std::log(p.scale);
    const double d = static_cast<double>(st.d);
    return d * (k * log_lam - std::log(k)) - (k - 1.0) * st.sum_delta_log_y +
           std::exp(st.log_sum_pow(k) - k * log_lam);
}

double nll_weibull(const Sample& s, const WeibullParams& p) {
    return nll_weibull(WeibullSuffStats(s), p);
}

double nll_lognormal(const Sample& s, const LognormalParams& p) {
    if (!(p.sigma > 0.0)) throw std::domain_error("nll_lognormal: sigma must be > 0");
    if (s.scheme.kind != CensorKind::Complete && s.scheme.kind != CensorKind::TypeI)
        throw std::invalid_argument("nll_lognormal: scheme must be Complete or TypeI");
    double d = 0.0, slog = 0.0, ssq = 0.0;
    for (std::size_t i = 0; i < s.n(); ++i) {
        if (s.delta[i] != 1) continue;
        const double ly = std::log(s.y[i]);
        d += 1.0;
        slog += ly;
        const double r = (ly - p.mu);
        ssq += r * r;
    }
    double nll = d * std::log(p.sigma) + 0.5 * d * std::log(2.0 * M_PI) + slog +
                 ssq / (2.0 * p.sigma * p.sigma);
    const double ncens = static_cast<double>(s.n()) - d;
    if (ncens > 0.0) {
        const double z = (std::log(s.scheme.censor_time) - p.mu) / p.sigma;
        nll -= ncens * std_normal_log_sf(z);
    }
    return nll;
}

double nll_random_censoring(const Sample& s, const RandomCensorParams& p) {
    if (s.scheme.kind != CensorKind::RandomWeibull)
        throw std::invalid_argument("nll_random_censoring: scheme must be RandomWeibull");
    check_positive(p.theta, "theta");
    check_positive(p.alpha, "alpha");
    check_positive(p.beta, "beta");
    const double th = p.theta;
    const double la = std::log(p.alpha), lb = std::log(p.beta);
    const double rate = std::exp(-th * la) + std::exp(-th * lb);
    double nll = 0.0;
    for (std::size_t i = 0; i < s.n(); ++i) {
        const double ly = std::log(s.y[i]);
        double lp = std::log(th) - th * la + (th - 1.0) * ly -
                    rate * std::exp(th * ly);
        if (s.delta[i] == 1) lp += th * (la - lb);
        nll -= lp;
    }
    return nll;
}

double fisher_det_weibull_complete(std::size_t n, const WeibullParams& p) {
    check_positive(p.scale, "scale");
    const double nn = static_cast<double>(n);
    return nn * nn * M_PI * M_PI / (6.0 * p.scale * p.scale);
}

double fisher_det_weibull_type1(std::size_t n, double c, const WeibullParams& p) {
    check_positive(p.shape, "shape");
    check_positive(p.scale, "scale");
    if (!(c > 0.0)) throw std::domain_error("fisher_det_weibull_type1: c must be > 0");
    const double z = std::exp(p.shape * std::log(c / p.scale));
    if (z == 0.0) return 0.0;  // no observable information
    const GammaOrderDerivs g = lower_incomplete_gamma_order_derivs(z);
    const double nl = static_cast<double>(n) / p.scale;
    return nl * nl * (g.g2 * g.g0 - g.g1 * g.g1);
}

double fisher_det_weibull_type2(std::size_t n, std::size_t m, const WeibullParams& p) {
    check_positive(p.scale, "scale");
    if (m < 1 || m > n) throw std::domain_error("fisher_det_weibull_type2: 1 <= m <= n");
    // phi_j = (1/m) sum_i (-1)^{m-i} C(n,i-1) C(n-i-1,m-i) log(n+1-i)^j,
    // evaluated in log space with sign tracking and Kahan summation.
    const auto log_binom = [](double a, double b) {
        return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
    };
    double phi[2] = {0.0, 0.0};
    double comp[2] = {0.0, 0.0};
    double max_term = 0.0;
    for (std::size_t i = 1; i <= m; ++i) {
        const double a = static_cast<double>(n) - i - 1.0;  // may be -1 when m = n, i = n
        const double b = static_cast<double>(m) - i;
        if (b > 0.0 && a < b) continue;  // binomial coefficient is zero
        const double lt = log_binom(static_cast<double>(n), i - 1.0) +
                          (b > 0.0 ? log_binom(a, b) : 0.0);
        const double lg = std::log(static_cast<double>(n + 1 - i));
        const double sign = ((m - i) % 2 == 0) ? 1.0 : -1.0;
        const double base = sign * std::exp(lt);
        double term = base * lg;
        for (int j = 0; j < 2; ++j) {
            max_term = std::max(max_term, std::abs(term));
            const double yk = term - comp[j];
            const double t = phi[j] + yk;
            comp[j] = (t - phi[j]) - yk;
            phi[j] = t;
            term *= lg;
        }
    }
    if (max_term > 0.0 && std::max(std::abs(phi[0]), std::abs(phi[1])) <
                              max_term * 1e-15 && m < n) {
        throw std::overflow_error(
            "fisher_det_weibull_type2: alternating sum lost all significant digits");
    }
    const double p1 = phi[0] / static_cast<double>(m);
    const double p2 = phi[1] / static_cast<double>(m);
    const double mm = static_cast<double>(m);
    return mm * mm * (M_PI * M_PI - 6.0 * p1 * p1 + 6.0 * p2) /
           (6.0 * p.scale * p.scale);
}

double fisher_det_lognormal(std::size_t n, const LognormalParams& p,
                            std::optional<double> censor_time) {
    if (!(p.sigma > 0.0)) throw std::domain_error("fisher_det_lognormal: sigma > 0");
    const double nn = static_cast<double>(n);
    const double s2 = p.sigma * p.sigma;
    const double base = 2.0 * nn * nn / (s2 * s2);
    if (!censor_time) return base;
    if (!(*censor_time > 0.0))
        throw std::domain_error("fisher_det_lognormal: c must be > 0");
    const double z = (std::log(*censor_time) - p.mu) / p.sigma;
    const double prob = std_normal_cdf(z);
    const double m = z;  // the matrix is stated in terms of M = Phi^{-1}(Phi(z)) = z
    if (prob >= 1.0 - 1e-12) return base;  // complete-data regime; the bracket -> 1
    // 1/(1-p) factors evaluated through log(1 - Phi(z)) to avoid cancellation.
    const double log_sf = std_normal_log_sf(z);
    const double m2 = m * m;
    const double t1 = -std::exp(-m2 - log_sf) * (m2 * (1.0 - 2.0 * prob) -
                                                 3.0 * prob + 1.0) / (4.0 * M_PI);
    const double t2 = std::exp(-1.5 * m2 - log_sf) * m /
                      (4.0 * std::sqrt(2.0) * std::pow(M_PI, 1.5));
    const double t3 = -std::exp(-0.5 * m2) * m * (m2 + 3.0) * prob /
                      (2.0 * std::sqrt(2.0 * M_PI));
    const double bracket = t1 + t2 + t3 + prob * prob;
    const double det = base * bracket;
    if (!(det > 0.0))
        throw std::runtime_error("fisher_det_lognormal: nonpositive determinant");
    return det;
}

}  // namespace wmml
