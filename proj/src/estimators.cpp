#include "wmml/estimators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "wmml/solvers.hpp"
#include "wmml/specfun.hpp"

namespace wmml {

namespace {

bool is_censored_scheme(const Sample& s) {
    return s.scheme.kind != CensorKind::Complete;
}

// Profile score in the shape parameter. The leading numerator distinguishes
// the estimators: n (MLE, complete), d (MLE, censored), n-2 / d-1 (Yang-Xie).
double shape_score(const WeibullSuffStats& st, double lead, double k) {
    const double dd = static_cast<double>(st.d);
    return lead / k + st.sum_delta_log_y - dd * st.weighted_mean_log(k);
}

EstimateReport solve_shape_score(const Sample& s, Method method, double lead,
                                 const SolverConfig& cfg) {
    const WeibullSuffStats st(s);
    const double u_lo = std::log(cfg.shape_lo), u_hi = std::log(cfg.shape_hi);
    auto f = [&](double u) { return shape_score(st, lead, std::exp(u)); };
    const double f_lo = f(u_lo), f_hi = f(u_hi);
    if (f_lo * f_hi > 0.0) {
        throw EstimationError(EstimationError::Code::NoRoot,
                              "shape score has no root inside the bracket");
    }
    const RootResult root = brent_root(f, u_lo, u_hi, cfg.rel_tol, cfg.max_iter);
    EstimateReport rep;
    rep.method = method;
    rep.params.shape = std::exp(root.root);
    rep.params.scale = std::exp(
        (st.log_sum_pow(rep.params.shape) - std::log(static_cast<double>(st.d))) /
        rep.params.shape);
    rep.converged = root.converged;
    rep.iterations = root.iterations;
    rep.final_grad_norm = std::abs(shape_score(st, lead, rep.params.shape));
    if (!root.converged)
        throw EstimationError(EstimationError::Code::NonConvergence,
                              "shape score solver did not converge");
    return rep;
}

struct GradCheck {
    double grad_norm = 0.0;
    bool hessian_pd = false;
};

GradCheck check_local_minimum(const std::function<double(const std::array<double, 2>&)>& f,
                              const std::array<double, 2>& x) {
    const double h = 1e-5;
    const double f0 = f(x);
    double g[2], hdiag[2];
    for (int i = 0; i < 2; ++i) {
        std::array<double, 2> xp = x, xm = x;
        xp[i] += h;
        xm[i] -= h;
        const double fp = f(xp), fm = f(xm);
        g[i] = (fp - fm) / (2.0 * h);
        hdiag[i] = (fp - 2.0 * f0 + fm) / (h * h);
    }
    std::array<double, 2> xpp = {x[0] + h, x[1] + h}, xmm = {x[0] - h, x[1] - h};
    const double hoff = (f(xpp) - 2.0 * f0 + f(xmm) - hdiag[0] * h * h -
                         hdiag[1] * h * h) / (2.0 * h * h);
    GradCheck c;
    c.grad_norm = std::hypot(g[0], g[1]);
    c.hessian_pd = hdiag[0] > 0.0 && hdiag[0] * hdiag[1] - hoff * hoff > 0.0;
    return c;
}

// Newton refinement on central differences. The simplex and coordinate
// polish locate the minimum only to ~sqrt(eps) in position because they
// compare objective values; the gradient is resolvable much further down,
// and a few damped Newton steps bring the position error to ~1e-10.
void newton_polish_2d(const std::function<double(const std::array<double, 2>&)>& f,
                      std::array<double, 2>& x) {
    const double h = 1e-5;
    for (int iter = 0; iter < 8; ++iter) {
        const double f0 = f(x);
        double g[2], hd[2];
        for (int i = 0; i < 2; ++i) {
            std::array<double, 2> xp = x, xm = x;
            xp[i] += h;
            xm[i] -= h;
            const double fp = f(xp), fm = f(xm);
            g[i] = (fp - fm) / (2.0 * h);
            hd[i] = (fp - 2.0 * f0 + fm) / (h * h);
        }
        std::array<double, 2> xpp = {x[0] + h, x[1] + h};
        std::array<double, 2> xmm = {x[0] - h, x[1] - h};
        const double hoff =
            (f(xpp) - 2.0 * f0 + f(xmm) - hd[0] * h * h - hd[1] * h * h) /
            (2.0 * h * h);
        const double det = hd[0] * hd[1] - hoff * hoff;
        if (!(det > 0.0) || !(hd[0] > 0.0)) return;
        double step0 = -(hd[1] * g[0] - hoff * g[1]) / det;
        double step1 = -(hd[0] * g[1] - hoff * g[0]) / det;
        const double norm = std::hypot(step0, step1);
        if (norm > 0.25) {  // trust region: stay where the quadratic is valid
            step0 *= 0.25 / norm;
            step1 *= 0.25 / norm;
        }
        const std::array<double, 2> trial = {x[0] + step0, x[1] + step1};
        if (!std::isfinite(f(trial))) return;
        x = trial;
        if (norm < 1e-11) return;
    }
}

}  // namespace

EstimateReport mle_weibull(const Sample& s, const SolverConfig& cfg) {
    s.validate();
    const std::size_t d = s.d();
    if (d == 0)
        throw EstimationError(EstimationError::Code::InsufficientData,
                              "maximum likelihood needs at least one uncensored "
                              "observation");
    return solve_shape_score(s, Method::MLE, static_cast<double>(
        is_censored_scheme(s) ? d : s.n()), cfg);
}

WeibullParams ross_correction(const EstimateReport& mle_report, std::size_t n) {
    if (mle_report.method != Method::MLE)
        throw std::invalid_argument("ross_correction: requires an MLE report");
    if (n <= 2)
        throw EstimationError(EstimationError::Code::InsufficientData,
                              "ross_correction: requires n > 2");
    WeibullParams p = mle_report.params;
    p.shape *= (static_cast<double>(n) - 2.0) / (static_cast<double>(n) - 0.68);
    return p;
}

EstimateReport yang_xie_weibull(const Sample& s, const SolverConfig& cfg) {
    s.validate();
    if (is_censored_scheme(s)) {
        const std::size_t d = s.d();
        if (d < 2)
            throw EstimationError(EstimationError::Code::InsufficientData,
                                  "Yang-Xie needs d >= 2 with censored data");
        return solve_shape_score(s, Method::YangXie, static_cast<double>(d) - 1.0, cfg);
    }
    if (s.n() < 3)
        throw EstimationError(EstimationError::Code::InsufficientData,
                              "Yang-Xie needs n >= 3 with complete data");
    return solve_shape_score(s, Method::YangXie,
                             static_cast<double>(s.n()) - 2.0, cfg);
}

EstimateReport sirvanci_yang(const Sample& s) {
    s.validate();
    if (s.scheme.kind != CensorKind::TypeI)
        throw EstimationError(EstimationError::Code::IncompatibleScheme,
                              "Sirvanci-Yang applies to type I censored data");
    const std::size_t n = s.n(), d = s.d();
    if (d == 0 || d == n)
        throw EstimationError(EstimationError::Code::OutOfRange,
                              "Sirvanci-Yang requires 0 < d < n");
    const double p = static_cast<double>(d) / static_cast<double>(n);
    // g(p) = log log(1-p)^{-1} - (1/p) * int_0^p log log(1-t)^{-1} dt; the
    // integral maps to int_0^z log(u) e^{-u} du under u = -log(1-t).
    const double z = -std::log1p(-p);
    const double g = std::log(z) - lower_incomplete_gamma_order_derivs(z).g1 / p;
    const double log_c = std::log(s.scheme.censor_time);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (s.delta[i] == 1) acc += log_c - std::log(s.y[i]);
    EstimateReport rep;
    rep.method = Method::SirvanciYang;
    rep.params.shape = d * g / acc;
    rep.scale_defined = false;
    rep.converged = true;
    return rep;
}

EstimateReport mml87_weibull(const Sample& s, const SolverConfig& cfg, PriorKind prior) {
    s.validate();
    if (s.scheme.kind == CensorKind::TypeI && s.d() == 0)
        throw EstimationError(EstimationError::Code::InsufficientData,
                              "MML87 Weibull fit needs at least one uncensored "
                              "observation");
    auto objective = [&](const std::array<double, 2>& x) {
        const WeibullParams p{std::exp(x[0]), std::exp(x[1])};
        try {
            return mml87_weibull_codelength(s, p, prior).total;
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    std::array<double, 2> start;
    try {
        const EstimateReport mle = mle_weibull(s, cfg);
        start = {std::log(mle.params.shape), std::log(mle.params.scale)};
    } catch (const EstimationError&) {
        // Degenerate data: the prior still regularizes the codelength.
        std::vector<double> ly;
        for (double v : s.y) ly.push_back(std::log(v));
        std::nth_element(ly.begin(), ly.begin() + ly.size() / 2, ly.end());
        start = {0.0, ly[ly.size() / 2]};
    }
    MinimizeResult m = nelder_mead_2d(objective, start, 0.2, 1e-12, cfg.max_iter * 4);
    newton_polish_2d(objective, m.x);
    m.value = objective(m.x);
    const GradCheck chk = check_local_minimum(objective, m.x);
    EstimateReport rep;
    rep.method = Method::MML87;
    rep.params = {std::exp(m.x[0]), std::exp(m.x[1])};
    rep.converged = chk.grad_norm < 1e-6 && chk.hessian_pd;
    rep.iterations = m.iterations;
    rep.final_grad_norm = chk.grad_norm;
    rep.codelength = m.value;
    if (!std::isfinite(m.value))
        throw EstimationError(EstimationError::Code::NonConvergence,
                              "MML87 codelength minimization failed");
    return rep;
}

double mml87_phi(std::size_t n, std::size_t d) {
    if (n < 1) throw std::domain_error("mml87_phi: n >= 1");
    return (static_cast<double>(d) + 0.5) / (static_cast<double>(n) + 1.0);
}

double mml87_phi(const std::vector<int>& delta) {
    const std::size_t d =
        static_cast<std::size_t>(std::accumulate(delta.begin(), delta.end(), 0));
    return mml87_phi(delta.size(), d);
}

RandomCensorReport estimate_random_censoring(const Sample& s, Method method,
                                             const SolverConfig& cfg) {
    s.validate();
    if (s.scheme.kind != CensorKind::RandomWeibull)
        throw EstimationError(EstimationError::Code::IncompatibleScheme,
                              "estimate_random_censoring: scheme must be RandomWeibull");
    const std::size_t n = s.n(), d = s.d();

    Sample lifetimes;
    lifetimes.y = s.y;
    lifetimes.delta.assign(n, 1);
    lifetimes.scheme = CensorScheme::complete();

    RandomCensorReport out;
    out.method = method;
    if (method == Method::MLE) {
        if (d == 0 || d == n)
            throw EstimationError(EstimationError::Code::PhiOutOfRange,
                                  "ML phi estimate requires 0 < d < n");
        const EstimateReport w = mle_weibull(lifetimes, cfg);
        out.reduced = {static_cast<double>(d) / static_cast<double>(n),
                       w.params.shape, w.params.scale};
        out.converged = w.converged;
        out.iterations = w.iterations;
    } else if (method == Method::MML87) {
        const EstimateReport w = mml87_weibull(lifetimes, cfg);
        out.reduced = {mml87_phi(n, d), w.params.shape, w.params.scale};
        out.converged = w.converged;
        out.iterations = w.iterations;
        out.codelength = random_censoring_codelength(s, out.reduced).total;
    } else {
        throw std::invalid_argument(
            "estimate_random_censoring: method must be MLE or MML87");
    }
    out.params = lift_params(out.reduced);
    return out;
}

LognormalReport mle_lognormal(const Sample& s, const SolverConfig& cfg) {
    s.validate();
    const std::size_t n = s.n(), d = s.d();
    if (d == 0)
        throw EstimationError(EstimationError::Code::InsufficientData,
                              "lognormal fit needs at least one uncensored observation");
    double mu = 0.0, ssq = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        if (s.delta[i] == 1) mu += std::log(s.y[i]);
    mu /= static_cast<double>(d);
    for (std::size_t i = 0; i < n; ++i)
        if (s.delta[i] == 1) {
            const double r = std::log(s.y[i]) - mu;
            ssq += r * r;
        }
    double sigma = std::sqrt(ssq / static_cast<double>(d));
    LognormalReport rep;
    rep.method = Method::MLE;
    if (s.scheme.kind == CensorKind::Complete) {
        if (!(sigma > 0.0))
            throw EstimationError(EstimationError::Code::NoRoot,
                                  "lognormal MLE degenerate: zero variance");
        rep.params = {mu, sigma};
        rep.converged = true;
        return rep;
    }
    if (sigma <= 0.0) sigma = 0.5;
    auto objective = [&](const std::array<double, 2>& x) {
        return nll_lognormal(s, LognormalParams{x[0], std::exp(x[1])});
    };
    const MinimizeResult m =
        nelder_mead_2d(objective, {mu, std::log(sigma)}, 0.2, 1e-12, cfg.max_iter * 4);
    rep.params = {m.x[0], std::exp(m.x[1])};
    rep.converged = true;
    rep.iterations = m.iterations;
    return rep;
}

LognormalReport mml87_lognormal(const Sample& s, const SolverConfig& cfg) {
    s.validate();
    auto objective = [&](const std::array<double, 2>& x) {
        try {
            return mml87_lognormal_codelength(s, LognormalParams{x[0], std::exp(x[1])})
                .total;
        } catch (const std::exception&) {
            return std::numeric_limits<double>::infinity();
        }
    };
    std::array<double, 2> start{0.0, 0.0};
    try {
        const LognormalReport mle = mle_lognormal(s, cfg);
        start = {mle.params.mu, std::log(mle.params.sigma)};
    } catch (const EstimationError&) {
        std::vector<double> ly;
        for (double v : s.y) ly.push_back(std::log(v));
        std::nth_element(ly.begin(), ly.begin() + ly.size() / 2, ly.end());
        start = {ly[ly.size() / 2], 0.0};
    }
    MinimizeResult m = nelder_mead_2d(objective, start, 0.2, 1e-12, cfg.max_iter * 4);
    newton_polish_2d(objective, m.x);
    m.value = objective(m.x);
    LognormalReport rep;
    rep.method = Method::MML87;
    rep.params = {m.x[0], std::exp(m.x[1])};
    rep.converged = true;
    rep.iterations = m.iterations;
    rep.codelength = m.value;
    if (!std::isfinite(m.value))
        throw EstimationError(EstimationError::Code::NonConvergence,
                              "MML87 lognormal codelength minimization failed");
    return rep;
}

const char* method_name(Method m) {
    switch (m) {
        case Method::MLE: return "mle";
        case Method::Ross: return "ross";
        case Method::YangXie: return "yang_xie";
        case Method::SirvanciYang: return "sirvanci_yang";
        case Method::MML87: return "mml87";
    }
    return "?";
}

}  // namespace wmml
