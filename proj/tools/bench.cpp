// Compares the serial reference path against the OpenMP path on a small
// estimator benchmark and checks that both produce identical rows.

#include <chrono>
#include <cstdio>

#include "wmml/simbench.hpp"

namespace {

double time_run(const wmml::SimPlan& plan, std::vector<wmml::SimRow>& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = wmml::run_estimator_bench(plan);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    wmml::SimPlan plan;
    plan.table = wmml::TableKind::EstComplete;
    plan.n_grid = {20};
    plan.k_grid = {1.0, 5.0};
    plan.replicates = argc > 1 ? std::atol(argv[1]) : 2000;
    plan.seed = 42;

    std::vector<wmml::SimRow> serial_rows, parallel_rows;
    plan.exec = wmml::ExecPolicy::Serial;
    const double t_serial = time_run(plan, serial_rows);
    plan.exec = wmml::ExecPolicy::OpenMP;
    const double t_parallel = time_run(plan, parallel_rows);

    bool identical = serial_rows.size() == parallel_rows.size();
    for (std::size_t i = 0; identical && i < serial_rows.size(); ++i) {
        identical = serial_rows[i].value == parallel_rows[i].value &&
                    serial_rows[i].mc_stderr == parallel_rows[i].mc_stderr;
    }

    std::printf("replicates            : %ld per cell, %zu cells\n", plan.replicates,
                plan.n_grid.size() * plan.k_grid.size());
    std::printf("serial reference path : %8.3f s\n", t_serial);
    std::printf("openmp parallel path  : %8.3f s\n", t_parallel);
    std::printf("speedup               : %8.2fx\n", t_serial / t_parallel);
    std::printf("rows identical        : %s\n", identical ? "yes" : "NO");
    return identical ? 0 : 1;
}
