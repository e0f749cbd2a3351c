#include "wmml/codelength.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace wmml {

double quantization_constant(int p) {
    if (p < 1) throw std::domain_error("quantization_constant: p >= 1");
    switch (p) {
        case 1: return 1.0 / 12.0;
        case 2: return 5.0 / (36.0 * std::sqrt(3.0));
        case 3: return 19.0 / (192.0 * std::cbrt(2.0));
        default: break;
    }
    // (p/2)(log kappa_p + 1) ~ -(p/2) log 2pi + (1/2) log(p pi) - gamma
    const double pd = p;
    const double log_kappa = (-pd / 2.0 * std::log(2.0 * M_PI) +
                              0.5 * std::log(pd * M_PI) - 0.57721566490153286) *
                                 2.0 / pd - 1.0;
    return std::exp(log_kappa);
}

namespace {

double neg_log_prior_weibull(const WeibullParams& p, PriorKind prior) {
    switch (prior) {
        case PriorKind::HalfCauchyPair:
            return 2.0 * std::log(M_PI) - 2.0 * std::log(2.0) +
                   std::log1p(p.shape * p.shape) + std::log1p(p.scale * p.scale);
        case PriorKind::YangXieImproper:
            // Improper: known only up to a constant.
            return 2.0 * std::log(p.shape) + std::log(p.scale);
        default:
            throw std::invalid_argument("unsupported prior for the Weibull model");
    }
}

Codelength assemble(double neg_log_prior, double fisher_det, double nll) {
    if (!(fisher_det > 0.0))
        throw std::runtime_error("mml87 codelength: nonpositive Fisher determinant");
    Codelength cl;
    cl.assertion = neg_log_prior + 0.5 * std::log(fisher_det) +
                   std::log(quantization_constant(2));
    cl.detail = 1.0 + nll;
    cl.total = cl.assertion + cl.detail;
    return cl;
}

}  // namespace

Codelength mml87_weibull_codelength(const Sample& s, const WeibullParams& p,
                                    PriorKind prior) {
    double det;
    switch (s.scheme.kind) {
        case CensorKind::Complete:
            det = fisher_det_weibull_complete(s.n(), p);
            break;
        case CensorKind::TypeI:
            det = fisher_det_weibull_type1(s.n(), s.scheme.censor_time, p);
            break;
        case CensorKind::TypeII:
            det = fisher_det_weibull_type2(s.n(), s.scheme.num_failures, p);
            break;
        default:
            throw std::invalid_argument(
                "mml87_weibull_codelength: use random_censoring_codelength for the "
                "random censoring scheme");
    }
    return assemble(neg_log_prior_weibull(p, prior), det, nll_weibull(s, p));
}

Codelength mml87_lognormal_codelength(const Sample& s, const LognormalParams& p) {
    double det;
    switch (s.scheme.kind) {
        case CensorKind::Complete:
            det = fisher_det_lognormal(s.n(), p);
            break;
        case CensorKind::TypeI:
            det = fisher_det_lognormal(s.n(), p, s.scheme.censor_time);
            break;
        default:
            throw std::invalid_argument(
                "mml87_lognormal_codelength: only Complete and TypeI are supported");
    }
    const double nlp = 2.0 * std::log(M_PI) - std::log(2.0) +
                       std::log1p(p.mu * p.mu) + std::log1p(p.sigma * p.sigma);
    return assemble(nlp, det, nll_lognormal(s, p));
}

Codelength binomial_codelength(std::size_t n, std::size_t d, double phi) {
    if (n < 1) throw std::domain_error("binomial_codelength: n >= 1");
    if (!(phi > 0.0 && phi < 1.0))
        throw std::domain_error("binomial_codelength: phi must lie in (0,1)");
    const double nd = static_cast<double>(n), dd = static_cast<double>(d);
    Codelength cl;
    // Uniform prior; Fisher information n / (phi (1 - phi)); p = 1.
    cl.assertion = 0.5 * std::log(nd / (phi * (1.0 - phi))) +
                   0.5 * std::log(quantization_constant(1));
    cl.detail = 0.5 - dd * std::log(phi) - (nd - dd) * std::log1p(-phi);
    cl.total = cl.assertion + cl.detail;
    return cl;
}

Codelength binomial_codelength(const std::vector<int>& delta, double phi) {
    const std::size_t d =
        static_cast<std::size_t>(std::accumulate(delta.begin(), delta.end(), 0));
    return binomial_codelength(delta.size(), d, phi);
}

Codelength random_censoring_codelength(const Sample& s, const ReducedCensorParams& r) {
    if (s.scheme.kind != CensorKind::RandomWeibull)
        throw std::invalid_argument(
            "random_censoring_codelength: scheme must be RandomWeibull");
    const Codelength binom = binomial_codelength(s.n(), s.d(), r.phi);
    Sample lifetimes;
    lifetimes.y = s.y;
    lifetimes.delta.assign(s.n(), 1);
    lifetimes.scheme = CensorScheme::complete();
    const Codelength weib = mml87_weibull_codelength(
        lifetimes, WeibullParams{r.shape, r.scale});
    Codelength cl;
    cl.assertion = binom.assertion + weib.assertion;
    cl.detail = binom.detail + weib.detail;
    cl.total = binom.total + weib.total;
    return cl;
}

double bic_score(const Sample& s, Model model, const WeibullParams& mle) {
    if (model != Model::Weibull) throw std::invalid_argument("bic_score: model mismatch");
    return nll_weibull(s, mle) + std::log(static_cast<double>(s.n()));
}

double bic_score(const Sample& s, Model model, const LognormalParams& mle) {
    if (model != Model::Lognormal)
        throw std::invalid_argument("bic_score: model mismatch");
    return nll_lognormal(s, mle) + std::log(static_cast<double>(s.n()));
}

}  // namespace wmml
