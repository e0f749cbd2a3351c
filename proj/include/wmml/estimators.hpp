#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "wmml/codelength.hpp"
#include "wmml/sample.hpp"
#include "wmml/survival.hpp"

namespace wmml {

enum class Method { MLE, Ross, YangXie, SirvanciYang, MML87 };

struct SolverConfig {
    double rel_tol = 1e-10;
    int max_iter = 200;
    double shape_lo = 1e-4;  // root bracket on the shape parameter
    double shape_hi = 1e4;
};

class EstimationError : public std::runtime_error {
public:
    enum class Code {
        NoRoot,
        InsufficientData,
        OutOfRange,
        PhiOutOfRange,
        NonConvergence,
        IncompatibleScheme,
    };
    EstimationError(Code code, const std::string& msg)
        : std::runtime_error(msg), code_(code) {}
    Code code() const { return code_; }

private:
    Code code_;
};

struct EstimateReport {
    Method method = Method::MLE;
    WeibullParams params;
    bool scale_defined = true;  // Sirvanci-Yang estimates the shape only
    bool converged = false;
    int iterations = 0;
    double final_grad_norm = 0.0;
    std::optional<double> codelength;
};

struct LognormalReport {
    Method method = Method::MLE;
    LognormalParams params;
    bool converged = false;
    int iterations = 0;
    std::optional<double> codelength;
};

struct RandomCensorReport {
    Method method = Method::MLE;
    RandomCensorParams params;
    ReducedCensorParams reduced;
    bool converged = false;
    int iterations = 0;
    std::optional<double> codelength;
};

// Maximum likelihood: profile score in k solved by Brent on log k,
// lambda from the closed-form scale equation.
EstimateReport mle_weibull(const Sample& s, const SolverConfig& cfg = {});

// Ross shape adjustment (complete data only): k * (n-2)/(n-0.68).
WeibullParams ross_correction(const EstimateReport& mle_report, std::size_t n);

// Yang-Xie modified profile likelihood estimate.
EstimateReport yang_xie_weibull(const Sample& s, const SolverConfig& cfg = {});

// Sirvanci-Yang closed-form shape estimate for type I censored data.
EstimateReport sirvanci_yang(const Sample& s);

// MML87 codelength minimizer in (log k, log lambda).
EstimateReport mml87_weibull(const Sample& s, const SolverConfig& cfg = {},
                             PriorKind prior = PriorKind::HalfCauchyPair);

double mml87_phi(std::size_t n, std::size_t d);
double mml87_phi(const std::vector<int>& delta);

RandomCensorReport estimate_random_censoring(const Sample& s, Method method,
                                             const SolverConfig& cfg = {});

LognormalReport mle_lognormal(const Sample& s, const SolverConfig& cfg = {});
LognormalReport mml87_lognormal(const Sample& s, const SolverConfig& cfg = {});

const char* method_name(Method m);

}  // namespace wmml
