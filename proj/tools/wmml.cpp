// Command-line front end: estimation, model selection, KL divergence, and
// Monte Carlo benchmark tables.

#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "wmml/csv.hpp"
#include "wmml/divergence.hpp"
#include "wmml/estimators.hpp"
#include "wmml/simbench.hpp"

using json = nlohmann::json;

namespace {

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> config;  // reproducibility echo
};

std::string fmt(double v) {
    if (std::isnan(v)) return "";
    std::ostringstream os;
    os.precision(12);
    os << v;
    return os.str();
}

void emit(const Table& t, const std::string& format) {
    if (format == "json") {
        json out;
        for (const auto& [k, v] : t.config) out["config"][k] = v;
        out["rows"] = json::array();
        for (const auto& row : t.rows) {
            json r;
            for (std::size_t i = 0; i < t.headers.size(); ++i) r[t.headers[i]] = row[i];
            out["rows"].push_back(std::move(r));
        }
        std::cout << out.dump(2) << "\n";
        return;
    }
    for (const auto& [k, v] : t.config) std::cout << "# " << k << "=" << v << "\n";
    if (format == "markdown") {
        auto line = [](const std::vector<std::string>& cells) {
            std::cout << "|";
            for (const auto& c : cells) std::cout << " " << c << " |";
            std::cout << "\n";
        };
        line(t.headers);
        std::vector<std::string> sep(t.headers.size(), "---");
        line(sep);
        for (const auto& row : t.rows) line(row);
        return;
    }
    // csv
    auto line = [](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i)
            std::cout << cells[i] << (i + 1 < cells.size() ? "," : "");
        std::cout << "\n";
    };
    line(t.headers);
    for (const auto& row : t.rows) line(row);
}

[[noreturn]] void fail(const std::string& code, const std::string& message) {
    json err;
    err["error"] = code;
    err["message"] = message;
    std::cerr << err.dump() << std::endl;
    std::exit(1);
}

wmml::Sample load_sample(const std::string& path, const std::string& scheme,
                         double censor_time, int num_failures) {
    const wmml::DatasetFile file = wmml::read_dataset_file(path);
    std::optional<wmml::CensorScheme> sc;
    if (scheme == "complete") {
        sc = wmml::CensorScheme::complete();
    } else if (scheme == "type1") {
        sc = wmml::CensorScheme::type1(
            censor_time > 0.0 ? censor_time : file.censor_time.value_or(0.0));
    } else if (scheme == "type2") {
        sc = wmml::CensorScheme::type2(num_failures);
    } else if (scheme == "random") {
        sc = wmml::CensorScheme::random_weibull();
    } else if (scheme != "auto") {
        fail("BadScheme", "unknown scheme '" + scheme + "'");
    }
    return wmml::to_sample(file, sc);
}

std::vector<wmml::Method> parse_methods(const std::string& spec,
                                        const wmml::Sample& s) {
    using wmml::Method;
    if (spec == "all") {
        switch (s.scheme.kind) {
            case wmml::CensorKind::Complete:
                return {Method::MLE, Method::Ross, Method::YangXie, Method::MML87};
            case wmml::CensorKind::TypeI:
                return {Method::MLE, Method::YangXie, Method::SirvanciYang,
                        Method::MML87};
            default:
                return {Method::MLE, Method::YangXie, Method::MML87};
        }
    }
    std::vector<Method> out;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "mle") out.push_back(Method::MLE);
        else if (tok == "ross") out.push_back(Method::Ross);
        else if (tok == "yang-xie" || tok == "yang_xie") out.push_back(Method::YangXie);
        else if (tok == "sirvanci-yang" || tok == "sirvanci_yang")
            out.push_back(Method::SirvanciYang);
        else if (tok == "mml87") out.push_back(Method::MML87);
        else fail("BadMethod", "unknown method '" + tok + "'");
    }
    return out;
}

void check_compatibility(wmml::Method m, const wmml::Sample& s) {
    const auto kind = s.scheme.kind;
    if (m == wmml::Method::Ross && kind != wmml::CensorKind::Complete)
        fail("IncompatibleScheme", "ross applies to complete data only");
    if (m == wmml::Method::SirvanciYang && kind != wmml::CensorKind::TypeI)
        fail("IncompatibleScheme", "sirvanci-yang applies to type I censored data");
}

int cmd_estimate(const std::string& path, const std::string& scheme,
                 double censor_time, int num_failures, const std::string& methods,
                 const std::string& format) {
    wmml::Sample s;
    try {
        s = load_sample(path, scheme, censor_time, num_failures);
    } catch (const wmml::ParseError& e) {
        fail("ParseError", e.what());
    } catch (const std::exception& e) {
        fail("InvalidData", e.what());
    }
    const std::vector<wmml::Method> requested = parse_methods(methods, s);
    for (wmml::Method m : requested) check_compatibility(m, s);

    Table t;
    t.headers = {"method", "shape", "scale", "converged", "iterations",
                 "grad_norm", "codelength"};
    t.config = {{"subcommand", "estimate"}, {"input", path}, {"scheme", scheme}};
    bool any_error = false;
    std::string first_error_code, first_error_msg;
    for (wmml::Method m : requested) {
        try {
            if (s.scheme.kind == wmml::CensorKind::RandomWeibull) {
                const auto rep = wmml::estimate_random_censoring(s, m);
                t.headers = {"method", "theta", "alpha", "beta", "phi", "shape",
                             "scale", "codelength"};
                t.rows.push_back({wmml::method_name(m), fmt(rep.params.theta),
                                  fmt(rep.params.alpha), fmt(rep.params.beta),
                                  fmt(rep.reduced.phi), fmt(rep.reduced.shape),
                                  fmt(rep.reduced.scale),
                                  rep.codelength ? fmt(*rep.codelength) : ""});
                continue;
            }
            wmml::EstimateReport rep;
            if (m == wmml::Method::Ross) {
                const auto mle = wmml::mle_weibull(s);
                rep = mle;
                rep.method = wmml::Method::Ross;
                rep.params = wmml::ross_correction(mle, s.n());
            } else if (m == wmml::Method::MLE) {
                rep = wmml::mle_weibull(s);
            } else if (m == wmml::Method::YangXie) {
                rep = wmml::yang_xie_weibull(s);
            } else if (m == wmml::Method::SirvanciYang) {
                rep = wmml::sirvanci_yang(s);
            } else {
                rep = wmml::mml87_weibull(s);
            }
            t.rows.push_back({wmml::method_name(m), fmt(rep.params.shape),
                              rep.scale_defined ? fmt(rep.params.scale) : "",
                              rep.converged ? "1" : "0",
                              std::to_string(rep.iterations), fmt(rep.final_grad_norm),
                              rep.codelength ? fmt(*rep.codelength) : ""});
        } catch (const wmml::EstimationError& e) {
            any_error = true;
            if (first_error_code.empty()) {
                first_error_code = "EstimationError";
                first_error_msg = std::string(wmml::method_name(m)) + ": " + e.what();
            }
        }
    }
    emit(t, format);
    if (any_error) fail(first_error_code, first_error_msg);
    return 0;
}

int cmd_select(const std::string& path, const std::string& scheme, double censor_time,
               const std::string& criterion, const std::string& format) {
    wmml::Sample s;
    try {
        s = load_sample(path, scheme, censor_time, 0);
    } catch (const wmml::ParseError& e) {
        fail("ParseError", e.what());
    } catch (const std::exception& e) {
        fail("InvalidData", e.what());
    }
    std::vector<wmml::Criterion> crits;
    if (criterion == "mml87") crits = {wmml::Criterion::MML87};
    else if (criterion == "bic") crits = {wmml::Criterion::BIC};
    else if (criterion == "both")
        crits = {wmml::Criterion::MML87, wmml::Criterion::BIC};
    else fail("BadCriterion", "unknown criterion '" + criterion + "'");

    Table t;
    t.headers = {"criterion", "winner", "score_weibull", "score_lognormal", "flags"};
    t.config = {{"subcommand", "select"}, {"input", path}, {"scheme", scheme}};
    for (wmml::Criterion c : crits) {
        try {
            const wmml::SelectionVerdict v = wmml::select_model(s, c);
            std::string flags;
            if (v.tie) flags += "tie;";
            if (v.degenerate) flags += "degenerate;";
            t.rows.push_back({c == wmml::Criterion::MML87 ? "mml87" : "bic",
                              v.winner == wmml::Model::Weibull ? "weibull" : "lognormal",
                              fmt(v.codelength_weibull), fmt(v.codelength_lognormal),
                              flags});
        } catch (const std::exception& e) {
            emit(t, format);
            fail("SelectionError", e.what());
        }
    }
    emit(t, format);
    return 0;
}

int cmd_simulate(const wmml::SimPlan& plan, const std::string& table_name,
                 const std::string& format) {
    std::vector<wmml::SimRow> rows;
    try {
        rows = (plan.table == wmml::TableKind::EstComplete ||
                plan.table == wmml::TableKind::EstTypeI)
                   ? wmml::run_estimator_bench(plan)
                   : wmml::run_selection_bench(plan);
    } catch (const std::exception& e) {
        fail("PlanError", e.what());
    }
    Table t;
    t.headers = {"n", "p", "k", "generator", "method", "metric", "value",
                 "mc_stderr", "replicates_used", "excluded"};
    auto joined = [](const auto& v) {
        std::ostringstream os;
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        return os.str();
    };
    t.config = {{"subcommand", "simulate"},
                {"table", table_name},
                {"n", joined(plan.n_grid)},
                {"k", joined(plan.k_grid)},
                {"p", joined(plan.p_grid)},
                {"reps", std::to_string(plan.replicates)},
                {"seed", std::to_string(plan.seed)},
                {"exec", plan.exec == wmml::ExecPolicy::Serial ? "serial" : "openmp"}};
    for (const auto& r : rows) {
        t.rows.push_back({std::to_string(r.n), fmt(r.p), fmt(r.k), r.generator,
                          r.method, wmml::metric_name(r.metric), fmt(r.value),
                          fmt(r.mc_stderr), std::to_string(r.replicates_used),
                          std::to_string(r.excluded)});
    }
    emit(t, format);
    return 0;
}

int cmd_kl(double k0, double l0, double k1, double l1, std::optional<double> c,
           const std::string& format) {
    try {
        const wmml::KLResult res =
            c ? wmml::kl_weibull_type1({k0, l0}, {k1, l1}, *c)
              : wmml::kl_weibull_complete({k0, l0}, {k1, l1});
        Table t;
        t.headers = {"regime", "value"};
        t.config = {{"subcommand", "kl"}};
        t.rows.push_back({res.regime == wmml::KLRegime::WeibullTypeI ? "weibull_type1"
                                                                     : "weibull_complete",
                          fmt(res.value)});
        emit(t, format);
        return 0;
    } catch (const std::exception& e) {
        fail("DomainError", e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weibull/lognormal MML87 estimation and model selection"};
    app.require_subcommand(1);
    std::string format = "csv";
    app.add_option("--format", format, "Output format: csv|markdown|json")
        ->check(CLI::IsMember({"csv", "markdown", "json"}));

    std::string path, scheme = "auto", methods = "all", criterion = "both";
    double censor_time = 0.0;
    int num_failures = 0;

    auto* est = app.add_subcommand("estimate", "Fit Weibull estimators to a dataset");
    est->add_option("file", path, "Input CSV (y,delta)")->required();
    est->add_option("--scheme", scheme, "auto|complete|type1|type2|random");
    est->add_option("--censor-time", censor_time, "Type I censoring time");
    est->add_option("--num-failures", num_failures, "Type II failure count m");
    est->add_option("--method", methods, "Comma list or 'all'");

    auto* sel = app.add_subcommand("select", "Weibull vs lognormal model selection");
    sel->add_option("file", path, "Input CSV (y,delta)")->required();
    sel->add_option("--scheme", scheme, "auto|complete|type1");
    sel->add_option("--censor-time", censor_time, "Type I censoring time");
    sel->add_option("--criterion", criterion, "mml87|bic|both");

    auto* sim = app.add_subcommand("simulate", "Monte Carlo benchmark tables");
    std::string table_name = "est-complete";
    wmml::SimPlan plan;
    bool serial = false;
    sim->add_option("--table", table_name,
                    "est-complete|est-type1|select-complete|select-type1");
    sim->add_option("--n", plan.n_grid, "Sample sizes")->required();
    sim->add_option("--k", plan.k_grid, "True shape values (estimator tables)");
    sim->add_option("--p", plan.p_grid,
                    "Uncensored proportion (est-type1) or censoring prob (select-type1)");
    sim->add_option("--reps", plan.replicates, "Replicates per cell");
    sim->add_option("--seed", plan.seed, "RNG seed");
    std::string sim_methods = "mle,yang-xie,mml87";
    sim->add_option("--methods", sim_methods, "Comma list of estimators");
    sim->add_flag("--serial", serial, "Use the serial reference path");

    auto* kl = app.add_subcommand("kl", "Kullback-Leibler divergence between Weibull models");
    double k0 = 1, l0 = 1, k1 = 1, l1 = 1;
    kl->add_option("--k0", k0)->required();
    kl->add_option("--l0", l0)->required();
    kl->add_option("--k1", k1)->required();
    kl->add_option("--l1", l1)->required();
    double c_val = 0.0;
    auto* copt = kl->add_option("--c", c_val, "Censoring time (omit for complete data)");

    CLI11_PARSE(app, argc, argv);

    if (est->parsed())
        return cmd_estimate(path, scheme, censor_time, num_failures, methods, format);
    if (sel->parsed()) return cmd_select(path, scheme, censor_time, criterion, format);
    if (sim->parsed()) {
        if (table_name == "est-complete") plan.table = wmml::TableKind::EstComplete;
        else if (table_name == "est-type1") plan.table = wmml::TableKind::EstTypeI;
        else if (table_name == "select-complete")
            plan.table = wmml::TableKind::SelectComplete;
        else if (table_name == "select-type1") plan.table = wmml::TableKind::SelectTypeI;
        else fail("BadTable", "unknown table '" + table_name + "'");
        plan.exec = serial ? wmml::ExecPolicy::Serial : wmml::ExecPolicy::OpenMP;
        wmml::Sample dummy;  // method parsing needs no sample for explicit lists
        dummy.scheme = wmml::CensorScheme::complete();
        plan.methods = parse_methods(sim_methods, dummy);
        return cmd_simulate(plan, table_name, format);
    }
    if (kl->parsed())
        return cmd_kl(k0, l0, k1, l1,
                      copt->count() ? std::optional<double>(c_val) : std::nullopt,
                      format);
    return 1;
}
