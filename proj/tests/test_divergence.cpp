#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wmml/divergence.hpp"
#include "wmml/rng.hpp"

using namespace wmml;

TEST_CASE("type I censored KL, frozen oracle") {
    const KLResult r = kl_weibull_type1({2.0, 1.0}, {1.5, 1.2}, 1.5);
    CHECK(r.value == doctest::Approx(0.08690022396368975).epsilon(1e-12));
    CHECK(r.regime == KLRegime::WeibullTypeI);
}

TEST_CASE("complete-data KL, frozen oracle and exponential reduction") {
    CHECK(kl_weibull_complete({2.0, 1.0}, {1.5, 1.2}).value ==
          doctest::Approx(0.11601504379626121).epsilon(1e-13));
    // exponential special case: lambda0/lambda1 + log(lambda1/lambda0) - 1
    const double l0 = 0.8, l1 = 2.0;
    CHECK(kl_weibull_complete({1.0, l0}, {1.0, l1}).value ==
          doctest::Approx(l0 / l1 + std::log(l1 / l0) - 1.0).epsilon(1e-13));
}

TEST_CASE("closed form equals brute-force quadrature") {
    RngStream rng(derive_stream(77, 0, 0));
    for (int trial = 0; trial < 12; ++trial) {
        const WeibullParams p0{0.5 + 2.5 * rng.uniform(), 0.5 + 1.5 * rng.uniform()};
        const WeibullParams p1{0.5 + 2.5 * rng.uniform(), 0.5 + 1.5 * rng.uniform()};
        const double c = 0.5 + 2.0 * rng.uniform();
        const double closed = kl_weibull_type1(p0, p1, c).value;
        const double brute = oracles::kl_censored_bruteforce(p0, p1, c);
        CHECK(std::abs(closed - brute) < 1e-6);
        CHECK(closed >= -1e-12);
    }
}

TEST_CASE("special-case reductions") {
    // identical models: zero divergence
    CHECK(kl_weibull_type1({1.7, 0.9}, {1.7, 0.9}, 1.3).value ==
          doctest::Approx(0.0).epsilon(1e-12));
    CHECK(kl_weibull_complete({1.7, 0.9}, {1.7, 0.9}).value ==
          doctest::Approx(0.0).epsilon(1e-12));

    // shape 1 coincides with the exponential form
    CHECK(kl_weibull_type1({1.0, 0.8}, {1.0, 1.7}, 2.0).value ==
          doctest::Approx(kl_exponential_type1(0.8, 1.7, 2.0).value).epsilon(1e-10));

    // equal shapes: invariant under t -> t^k, so it matches the exponential
    // divergence with transformed scales and censoring point
    const double k = 2.3, l0 = 0.9, l1 = 1.4, c = 1.2;
    CHECK(kl_weibull_type1({k, l0}, {k, l1}, c).value ==
          doctest::Approx(kl_exponential_type1(std::pow(l0, k), std::pow(l1, k),
                                               std::pow(c, k)).value).epsilon(1e-10));

    // censoring point far in the tail recovers the complete-data divergence
    const WeibullParams p0{2.0, 1.0}, p1{1.5, 1.2};
    CHECK(kl_weibull_type1(p0, p1, 1e6).value ==
          doctest::Approx(kl_weibull_complete(p0, p1).value).epsilon(1e-10));
}

TEST_CASE("exponential censored KL against brute force") {
    const double l0 = 1.0, l1 = 1.6, c = 1.1;
    const double brute =
        oracles::kl_censored_bruteforce({1.0, l0}, {1.0, l1}, c, 400000);
    CHECK(std::abs(kl_exponential_type1(l0, l1, c).value - brute) < 1e-8);
    CHECK(kl_exponential_type1(l0, l0, c).value == doctest::Approx(0.0));
}

TEST_CASE("domain validation") {
    CHECK_THROWS_AS((void)kl_weibull_type1({-1.0, 1.0}, {1.0, 1.0}, 1.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)kl_weibull_type1({1.0, 1.0}, {1.0, 1.0}, 0.0),
                    std::domain_error);
    CHECK_THROWS_AS((void)kl_weibull_complete({1.0, 0.0}, {1.0, 1.0}),
                    std::domain_error);
    CHECK_THROWS_AS((void)kl_exponential_type1(1.0, -2.0, 1.0), std::domain_error);
}
