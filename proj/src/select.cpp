#include <cmath>
#include <optional>

#include "wmml/codelength.hpp"
#include "wmml/estimators.hpp"

namespace wmml {

SelectionVerdict select_model(const Sample& s, Criterion criterion) {
    s.validate();
    if (s.scheme.kind != CensorKind::Complete && s.scheme.kind != CensorKind::TypeI)
        throw std::invalid_argument("select_model: scheme must be Complete or TypeI");

    std::optional<double> weib, logn;
    if (criterion == Criterion::MML87) {
        try {
            weib = mml87_weibull(s).codelength;
        } catch (const std::exception&) {}
        try {
            logn = mml87_lognormal(s).codelength;
        } catch (const std::exception&) {}
    } else {
        try {
            weib = bic_score(s, Model::Weibull, mle_weibull(s).params);
        } catch (const std::exception&) {}
        try {
            logn = bic_score(s, Model::Lognormal, mle_lognormal(s).params);
        } catch (const std::exception&) {}
    }

    SelectionVerdict v;
    v.criterion = criterion;
    const double inf = std::numeric_limits<double>::infinity();
    v.codelength_weibull = weib.value_or(inf);
    v.codelength_lognormal = logn.value_or(inf);
    if (!weib && !logn)
        throw EstimationError(EstimationError::Code::NonConvergence,
                              "select_model: both model fits failed");
    v.degenerate = !weib || !logn;
    const double diff = v.codelength_weibull - v.codelength_lognormal;
    if (std::abs(diff) < 1e-12) {
        v.winner = Model::Weibull;
        v.tie = true;
    } else {
        v.winner = diff < 0.0 ? Model::Weibull : Model::Lognormal;
    }
    return v;
}

}  // namespace wmml
