#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "wmml/codelength.hpp"
#include "wmml/estimators.hpp"

namespace wmml {

enum class TableKind { EstComplete, EstTypeI, SelectComplete, SelectTypeI };

// Parallel kernels have a serial reference path; both produce bit-identical
// rows (per-replicate RNG streams plus an ordered fold).
enum class ExecPolicy { Serial, OpenMP };

enum class Metric { Bias, MSE, KL, Accuracy };

struct SimPlan {
    TableKind table = TableKind::EstComplete;
    std::vector<int> n_grid;
    std::vector<double> k_grid;  // estimator tables; lambda fixed at 1
    // EstTypeI: proportion of uncensored observations.
    // SelectTypeI: probability of censoring.
    std::vector<double> p_grid;
    long replicates = 1000;
    std::uint64_t seed = 0;
    std::vector<Method> methods = {Method::MLE, Method::YangXie, Method::MML87};
    std::vector<Criterion> criteria = {Criterion::MML87, Criterion::BIC};
    ExecPolicy exec = ExecPolicy::OpenMP;

    void validate() const;
};

struct SimRow {
    int n = 0;
    double p = std::numeric_limits<double>::quiet_NaN();
    double k = std::numeric_limits<double>::quiet_NaN();
    std::string generator;  // selection tables: weibull | lognormal | average
    std::string method;     // estimator name or criterion name
    Metric metric = Metric::Bias;
    double value = 0.0;
    double mc_stderr = 0.0;
    long replicates_used = 0;
    long excluded = 0;
};

const char* metric_name(Metric m);

std::vector<SimRow> run_estimator_bench(const SimPlan& plan);
std::vector<SimRow> run_selection_bench(const SimPlan& plan);

}  // namespace wmml
