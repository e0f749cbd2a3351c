#include "wmml/simbench.hpp"

#include <cmath>
#include <stdexcept>

#include "wmml/divergence.hpp"
#include "wmml/rng.hpp"
#include "wmml/specfun.hpp"

namespace wmml {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

struct Accum {
    double sum = 0.0, sumsq = 0.0;
    long count = 0;
    void add(double v) {
        sum += v;
        sumsq += v * v;
        ++count;
    }
    double mean() const { return count > 0 ? sum / count : kNaN; }
    double stderr_of_mean() const {
        if (count < 2) return 0.0;
        const double m = mean();
        const double var = std::max(0.0, (sumsq - count * m * m) / (count - 1));
        return std::sqrt(var / count);
    }
};

Sample truncate_type1(std::vector<double> y, double c) {
    Sample s;
    s.delta.reserve(y.size());
    for (double& v : y) {
        if (v <= c) {
            s.delta.push_back(1);
        } else {
            v = c;
            s.delta.push_back(0);
        }
    }
    s.y = std::move(y);
    s.scheme = CensorScheme::type1(c);
    return s;
}

template <typename Fn>
void for_each_replicate(long replicates, ExecPolicy exec, Fn&& body) {
#ifdef _OPENMP
    if (exec == ExecPolicy::OpenMP) {
#pragma omp parallel for schedule(dynamic, 16)
        for (long r = 0; r < replicates; ++r) body(r);
        return;
    }
#else
    (void)exec;
#endif
    for (long r = 0; r < replicates; ++r) body(r);
}

}  // namespace

void SimPlan::validate() const {
    if (replicates < 1) throw std::invalid_argument("SimPlan: replicates >= 1");
    if (n_grid.empty()) throw std::invalid_argument("SimPlan: n_grid must be nonempty");
    for (int n : n_grid)
        if (n < 1) throw std::invalid_argument("SimPlan: n >= 1");
    const bool estim =
        table == TableKind::EstComplete || table == TableKind::EstTypeI;
    if (estim) {
        if (k_grid.empty())
            throw std::invalid_argument("SimPlan: k_grid must be nonempty");
        for (double k : k_grid)
            if (!(k > 0.0)) throw std::invalid_argument("SimPlan: k > 0");
        if (methods.empty())
            throw std::invalid_argument("SimPlan: methods must be nonempty");
    } else if (criteria.empty()) {
        throw std::invalid_argument("SimPlan: criteria must be nonempty");
    }
    const bool type1 = table == TableKind::EstTypeI || table == TableKind::SelectTypeI;
    if (type1) {
        if (p_grid.empty())
            throw std::invalid_argument("SimPlan: p_grid must be nonempty");
        for (double p : p_grid)
            if (!(p > 0.0 && p < 1.0))
                throw std::invalid_argument("SimPlan: p must lie in (0,1)");
    }
}

const char* metric_name(Metric m) {
    switch (m) {
        case Metric::Bias: return "bias";
        case Metric::MSE: return "mse";
        case Metric::KL: return "kl";
        case Metric::Accuracy: return "accuracy";
    }
    return "?";
}

std::vector<SimRow> run_estimator_bench(const SimPlan& plan) {
    plan.validate();
    if (plan.table != TableKind::EstComplete && plan.table != TableKind::EstTypeI)
        throw std::invalid_argument("run_estimator_bench: wrong table kind");
    const bool type1 = plan.table == TableKind::EstTypeI;
    const std::vector<double> p_grid = type1 ? plan.p_grid : std::vector<double>{kNaN};

    struct RepResult {
        bool excluded = false;
        std::vector<double> shape;  // per method, NaN on failure
        std::vector<double> kl;
    };

    std::vector<SimRow> rows;
    std::uint64_t cell_index = 0;
    for (int n : plan.n_grid) {
        for (double p : p_grid) {
            for (double k : plan.k_grid) {
                const WeibullParams truth{k, 1.0};
                // c such that P(uncensored) = p under the generator.
                const double c =
                    type1 ? std::pow(-std::log1p(-p), 1.0 / k) : 0.0;
                std::vector<RepResult> reps(plan.replicates);
                for_each_replicate(plan.replicates, plan.exec, [&](long r) {
                    RepResult& out = reps[r];
                    out.shape.assign(plan.methods.size(), kNaN);
                    out.kl.assign(plan.methods.size(), kNaN);
                    RngStream rng(derive_stream(plan.seed, cell_index, r));
                    std::vector<double> y = sample_weibull(truth, n, rng);
                    Sample s;
                    if (type1) {
                        s = truncate_type1(std::move(y), c);
                        if (s.d() < 2) {  // MLE/MMLE undefined for small d
                            out.excluded = true;
                            return;
                        }
                    } else {
                        s.y = std::move(y);
                        s.delta.assign(n, 1);
                        s.scheme = CensorScheme::complete();
                    }
                    for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
                        try {
                            WeibullParams fitted;
                            bool have_scale = true;
                            switch (plan.methods[mi]) {
                                case Method::MLE:
                                    fitted = mle_weibull(s).params;
                                    break;
                                case Method::YangXie:
                                    fitted = yang_xie_weibull(s).params;
                                    break;
                                case Method::MML87:
                                    fitted = mml87_weibull(s).params;
                                    break;
                                case Method::Ross:
                                    fitted = ross_correction(mle_weibull(s), n);
                                    break;
                                case Method::SirvanciYang:
                                    fitted = sirvanci_yang(s).params;
                                    have_scale = false;
                                    break;
                            }
                            out.shape[mi] = fitted.shape;
                            if (have_scale) {
                                out.kl[mi] =
                                    type1 ? kl_weibull_type1(truth, fitted, c).value
                                          : kl_weibull_complete(truth, fitted).value;
                            }
                        } catch (const std::exception&) {
                            // failure recorded as NaN and counted below
                        }
                    }
                });

                // Deterministic fold in replicate order.
                long cell_excluded = 0;
                std::vector<Accum> err, sqerr, klacc;
                err.resize(plan.methods.size());
                sqerr.resize(plan.methods.size());
                klacc.resize(plan.methods.size());
                std::vector<long> failures(plan.methods.size(), 0);
                for (const RepResult& rep : reps) {
                    if (rep.excluded) {
                        ++cell_excluded;
                        continue;
                    }
                    for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
                        if (std::isnan(rep.shape[mi])) {
                            ++failures[mi];
                            continue;
                        }
                        const double e = rep.shape[mi] - k;
                        err[mi].add(e);
                        sqerr[mi].add(e * e);
                        if (!std::isnan(rep.kl[mi])) klacc[mi].add(rep.kl[mi]);
                    }
                }
                for (std::size_t mi = 0; mi < plan.methods.size(); ++mi) {
                    SimRow base;
                    base.n = n;
                    base.p = p;
                    base.k = k;
                    base.method = method_name(plan.methods[mi]);
                    base.replicates_used = err[mi].count;
                    base.excluded = cell_excluded + failures[mi];

                    SimRow bias = base;
                    bias.metric = Metric::Bias;
                    bias.value = err[mi].mean();
                    bias.mc_stderr = err[mi].stderr_of_mean();
                    rows.push_back(bias);

                    SimRow mse = base;
                    mse.metric = Metric::MSE;
                    mse.value = sqerr[mi].mean();
                    mse.mc_stderr = sqerr[mi].stderr_of_mean();
                    rows.push_back(mse);

                    if (klacc[mi].count > 0) {
                        SimRow kl = base;
                        kl.metric = Metric::KL;
                        kl.value = klacc[mi].mean();
                        kl.mc_stderr = klacc[mi].stderr_of_mean();
                        kl.replicates_used = klacc[mi].count;
                        rows.push_back(kl);
                    }
                }
                ++cell_index;
            }
        }
    }
    return rows;
}

std::vector<SimRow> run_selection_bench(const SimPlan& plan) {
    plan.validate();
    if (plan.table != TableKind::SelectComplete && plan.table != TableKind::SelectTypeI)
        throw std::invalid_argument("run_selection_bench: wrong table kind");
    const bool type1 = plan.table == TableKind::SelectTypeI;
    const std::vector<double> p_grid = type1 ? plan.p_grid : std::vector<double>{kNaN};

    const WeibullParams weib_gen{1.0, 1.0};
    const LognormalParams logn_gen{1.0, 1.0};

    struct RepResult {
        std::vector<int> correct;  // per criterion: 1/0, -1 on failure
    };

    std::vector<SimRow> rows;
    std::uint64_t cell_index = 0;
    for (int n : plan.n_grid) {
        for (double p_cens : p_grid) {
            // accuracy[generator][criterion]
            Accum acc[2][2];
            long excluded[2][2] = {{0, 0}, {0, 0}};
            for (int gen = 0; gen < 2; ++gen) {
                const bool from_weibull = gen == 0;
                // Censoring time with the target censoring probability under
                // the generating model.
                double c = 0.0;
                if (type1) {
                    c = from_weibull
                            ? -std::log(p_cens)
                            : std::exp(logn_gen.mu +
                                       logn_gen.sigma * std_normal_quantile(1.0 - p_cens));
                }
                std::vector<RepResult> reps(plan.replicates);
                for_each_replicate(plan.replicates, plan.exec, [&](long r) {
                    RepResult& out = reps[r];
                    out.correct.assign(plan.criteria.size(), -1);
                    RngStream rng(derive_stream(plan.seed, cell_index * 2 + gen, r));
                    std::vector<double> y;
                    y.reserve(n);
                    if (from_weibull) {
                        y = sample_weibull(weib_gen, n, rng);
                    } else {
                        for (int i = 0; i < n; ++i)
                            y.push_back(std::exp(
                                logn_gen.mu +
                                logn_gen.sigma * std_normal_quantile(rng.uniform())));
                    }
                    Sample s;
                    if (type1) {
                        s = truncate_type1(std::move(y), c);
                    } else {
                        s.y = std::move(y);
                        s.delta.assign(n, 1);
                        s.scheme = CensorScheme::complete();
                    }
                    for (std::size_t ci = 0; ci < plan.criteria.size(); ++ci) {
                        try {
                            const SelectionVerdict v = select_model(s, plan.criteria[ci]);
                            const bool correct =
                                (v.winner == Model::Weibull) == from_weibull;
                            out.correct[ci] = correct ? 1 : 0;
                        } catch (const std::exception&) {}
                    }
                });
                for (const RepResult& rep : reps) {
                    for (std::size_t ci = 0; ci < plan.criteria.size(); ++ci) {
                        if (rep.correct[ci] < 0)
                            ++excluded[gen][ci];
                        else
                            acc[gen][ci].add(rep.correct[ci]);
                    }
                }
            }
            for (std::size_t ci = 0; ci < plan.criteria.size(); ++ci) {
                const char* crit_name =
                    plan.criteria[ci] == Criterion::MML87 ? "mml87" : "bic";
                for (int gen = 0; gen < 3; ++gen) {
                    SimRow row;
                    row.n = n;
                    row.p = p_cens;
                    row.method = crit_name;
                    row.metric = Metric::Accuracy;
                    if (gen < 2) {
                        row.generator = gen == 0 ? "weibull" : "lognormal";
                        const double a = acc[gen][ci].mean();
                        const long used = acc[gen][ci].count;
                        row.value = a;
                        row.mc_stderr =
                            used > 0 ? std::sqrt(std::max(0.0, a * (1.0 - a)) / used)
                                     : 0.0;
                        row.replicates_used = used;
                        row.excluded = excluded[gen][ci];
                    } else {
                        row.generator = "average";
                        row.value = 0.5 * (acc[0][ci].mean() + acc[1][ci].mean());
                        const long used = acc[0][ci].count + acc[1][ci].count;
                        row.mc_stderr =
                            used > 0 ? std::sqrt(std::max(0.0, row.value *
                                                                   (1.0 - row.value)) /
                                                 used)
                                     : 0.0;
                        row.replicates_used = used;
                        row.excluded = excluded[0][ci] + excluded[1][ci];
                    }
                    rows.push_back(row);
                }
            }
            ++cell_index;
        }
    }
    return rows;
}

}  // namespace wmml
