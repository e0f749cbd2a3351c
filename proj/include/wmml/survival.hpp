#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wmml/rng.hpp"
#include "wmml/sample.hpp"

namespace wmml {

struct WeibullParams {
    double shape = 1.0;  // k > 0
    double scale = 1.0;  // lambda > 0
};

struct LognormalParams {
    double mu = 0.0;
    double sigma = 1.0;  // > 0
};

// Random censoring model: lifetimes Weibull(theta, beta), censoring times
// Weibull(theta, alpha), common shape theta.
struct RandomCensorParams {
    double theta = 1.0;
    double alpha = 1.0;
    double beta = 1.0;
};

// Factorized form of the random censoring model: delta ~ binom(phi),
// y ~ Weibull(shape, scale).
struct ReducedCensorParams {
    double phi = 0.5;
    double shape = 1.0;
    double scale = 1.0;
};

ReducedCensorParams reduce_params(const RandomCensorParams& p);
RandomCensorParams lift_params(const ReducedCensorParams& r);

std::pair<double, double> weibull_pdf_cdf(double t, const WeibullParams& p);

std::vector<double> sample_weibull(const WeibullParams& p, std::size_t n, RngStream& rng);
std::vector<double> sample_weibull(const WeibullParams& p, std::size_t n,
                                   std::uint64_t seed);

double nll_weibull(const Sample& s, const WeibullParams& p);
double nll_weibull(const WeibullSuffStats& st, const WeibullParams& p);
double nll_lognormal(const Sample& s, const LognormalParams& p);
double nll_random_censoring(const Sample& s, const RandomCensorParams& p);

// Determinants of the expected Fisher information matrix.
double fisher_det_weibull_complete(std::size_t n, const WeibullParams& p);
double fisher_det_weibull_type1(std::size_t n, double c, const WeibullParams& p);
double fisher_det_weibull_type2(std::size_t n, std::size_t m, const WeibullParams& p);
double fisher_det_lognormal(std::size_t n, const LognormalParams& p,
                            std::optional<double> censor_time = std::nullopt);

}  // namespace wmml
