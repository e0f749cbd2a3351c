#pragma once

#include <cstddef>
#include <vector>

#include "wmml/sample.hpp"
#include "wmml/survival.hpp"

namespace wmml {

// Two-part message length in nats.
struct Codelength {
    double assertion = 0.0;
    double detail = 0.0;
    double total = 0.0;
};

enum class PriorKind {
    HalfCauchyPair,   // half-Cauchy(0,1) on both positive parameters
    YangXieImproper,  // pi(k) ~ 1/k^2, pi(lambda) ~ 1/lambda (non-normalizable)
    LognormalPair,    // Cauchy(0,1) on mu, half-Cauchy(0,1) on sigma
    BinomialUniform,  // uniform on phi
};

enum class Model { Weibull, Lognormal };
enum class Criterion { MML87, BIC };

// Lattice quantization constant kappa_p; exact for p <= 3, asymptotic beyond.
double quantization_constant(int p);

Codelength mml87_weibull_codelength(const Sample& s, const WeibullParams& p,
                                    PriorKind prior = PriorKind::HalfCauchyPair);
Codelength mml87_lognormal_codelength(const Sample& s, const LognormalParams& p);
Codelength binomial_codelength(std::size_t n, std::size_t d, double phi);
Codelength binomial_codelength(const std::vector<int>& delta, double phi);
Codelength random_censoring_codelength(const Sample& s, const ReducedCensorParams& r);

double bic_score(const Sample& s, Model model, const WeibullParams& mle);
double bic_score(const Sample& s, Model model, const LognormalParams& mle);

struct SelectionVerdict {
    Model winner = Model::Weibull;
    double codelength_weibull = 0.0;
    double codelength_lognormal = 0.0;
    Criterion criterion = Criterion::MML87;
    bool tie = false;
    bool degenerate = false;  // one model's fit failed; verdict defaulted
};

// Fits both models with the criterion's estimator and picks the smaller
// codelength/score. Ties go to Weibull and are flagged.
SelectionVerdict select_model(const Sample& s, Criterion criterion);

}  // namespace wmml
