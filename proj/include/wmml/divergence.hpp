#pragma once

#include "wmml/survival.hpp"

namespace wmml {

enum class KLRegime {
    WeibullTypeI,
    WeibullSameShapeTypeI,
    WeibullComplete,
    ExponentialTypeI,
    ExponentialComplete,
};

struct KLResult {
    double value = 0.0;  // nats
    KLRegime regime = KLRegime::WeibullComplete;
};

// KL divergence between the censored-observation laws of two Weibull models
// with fixed type I censoring at c (density on (0,c) plus a censoring atom).
KLResult kl_weibull_type1(const WeibullParams& p0, const WeibullParams& p1, double c);

KLResult kl_weibull_complete(const WeibullParams& p0, const WeibullParams& p1);

KLResult kl_exponential_type1(double lambda0, double lambda1, double c);

}  // namespace wmml
