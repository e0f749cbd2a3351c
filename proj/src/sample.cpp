#include "wmml/sample.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace wmml {

std::size_t Sample::d() const {
    return static_cast<std::size_t>(std::accumulate(delta.begin(), delta.end(), 0));
}

void Sample::validate() const {
    if (y.size() != delta.size())
        throw std::invalid_argument("Sample: y and delta length mismatch");
    if (y.empty()) throw std::invalid_argument("Sample: empty");
    for (std::size_t i = 0; i < y.size(); ++i) {
        if (!(y[i] > 0.0) || !std::isfinite(y[i]))
            throw std::invalid_argument("Sample: y[" + std::to_string(i) +
                                        "] must be a positive finite real");
        if (delta[i] != 0 && delta[i] != 1)
            throw std::invalid_argument("Sample: delta[" + std::to_string(i) +
                                        "] must be 0 or 1");
    }
    switch (scheme.kind) {
        case CensorKind::Complete:
            for (std::size_t i = 0; i < delta.size(); ++i)
                if (delta[i] != 1)
                    throw std::invalid_argument(
                        "Sample: complete scheme requires all delta = 1");
            break;
        case CensorKind::TypeI: {
            if (!(scheme.censor_time > 0.0))
                throw std::invalid_argument("Sample: TypeI requires censor time c > 0");
            for (std::size_t i = 0; i < y.size(); ++i) {
                if (delta[i] == 0 && y[i] != scheme.censor_time)
                    throw std::invalid_argument(
                        "Sample: TypeI censored row " + std::to_string(i) +
                        " must carry y = c");
                if (delta[i] == 1 && y[i] > scheme.censor_time)
                    throw std::invalid_argument(
                        "Sample: TypeI observed row " + std::to_string(i) +
                        " exceeds censor time");
            }
            break;
        }
        case CensorKind::TypeII: {
            const int m = scheme.num_failures;
            if (m < 1 || static_cast<std::size_t>(m) > y.size())
                throw std::invalid_argument("Sample: TypeII requires 1 <= m <= n");
            if (d() != static_cast<std::size_t>(m))
                throw std::invalid_argument(
                    "Sample: TypeII requires exactly m uncensored observations");
            double max_obs = 0.0;
            for (std::size_t i = 0; i < y.size(); ++i)
                if (delta[i] == 1) max_obs = std::max(max_obs, y[i]);
            for (std::size_t i = 0; i < y.size(); ++i)
                if (delta[i] == 0 && y[i] != max_obs)
                    throw std::invalid_argument(
                        "Sample: TypeII censored rows must carry the m-th order "
                        "statistic");
            break;
        }
        case CensorKind::RandomWeibull:
            break;
    }
}

WeibullSuffStats::WeibullSuffStats(const Sample& s) : n(s.n()), d(s.d()) {
    log_y_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double ly = std::log(s.y[i]);
        log_y_.push_back(ly);
        sum_log_y += ly;
        if (s.delta[i] == 1) sum_delta_log_y += ly;
    }
}

double WeibullSuffStats::log_sum_pow(double k) const {
    const double m = *std::max_element(log_y_.begin(), log_y_.end()) * k;
    double s = 0.0;
    for (double ly : log_y_) s += std::exp(k * ly - m);
    return m + std::log(s);
}

double WeibullSuffStats::weighted_mean_log(double k) const {
    const double m = *std::max_element(log_y_.begin(), log_y_.end()) * k;
    double s = 0.0, sw = 0.0;
    for (double ly : log_y_) {
        const double w = std::exp(k * ly - m);
        s += w;
        sw += w * ly;
    }
    return sw / s;
}

}  // namespace wmml
