#pragma once

#include <cstddef>
#include <vector>

namespace wmml {

enum class CensorKind { Complete, TypeI, TypeII, RandomWeibull };

struct CensorScheme {
    CensorKind kind = CensorKind::Complete;
    double censor_time = 0.0;  // TypeI: fixed censoring time c
    int num_failures = 0;      // TypeII: experiment stops after m failures

    static CensorScheme complete() { return {CensorKind::Complete, 0.0, 0}; }
    static CensorScheme type1(double c) { return {CensorKind::TypeI, c, 0}; }
    static CensorScheme type2(int m) { return {CensorKind::TypeII, 0.0, m}; }
    static CensorScheme random_weibull() { return {CensorKind::RandomWeibull, 0.0, 0}; }
};

// Observed times with per-item censoring indicators (delta = 1: failure
// observed, delta = 0: censored) and the censoring scheme metadata.
struct Sample {
    std::vector<double> y;
    std::vector<int> delta;
    CensorScheme scheme;

    std::size_t n() const { return y.size(); }
    std::size_t d() const;  // number of uncensored observations

    // Throws std::invalid_argument on any scheme violation. Validation is
    // strict: TypeI censored rows must carry y_i = c exactly.
    void validate() const;
};

// Precomputed pieces of the Weibull likelihood. Weighted power sums are
// evaluated in log space so large shape values do not overflow.
struct WeibullSuffStats {
    explicit WeibullSuffStats(const Sample& s);

    std::size_t n = 0;
    std::size_t d = 0;
    double sum_log_y = 0.0;            // over all observations
    double sum_delta_log_y = 0.0;      // over uncensored only

    // log(sum_i y_i^k) and sum_i y_i^k log(y_i) / sum_i y_i^k.
    double log_sum_pow(double k) const;
    double weighted_mean_log(double k) const;

private:
    std::vector<double> log_y_;
};

}  // namespace wmml
