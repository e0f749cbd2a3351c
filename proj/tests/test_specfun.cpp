#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wmml/specfun.hpp"

using namespace wmml;

TEST_CASE("standard normal cdf") {
    CHECK(std_normal_cdf(0.0) == doctest::Approx(0.5).epsilon(1e-15));
    // frozen from an adaptive-quadrature oracle of the normal density
    CHECK(std_normal_cdf(1.0) ==
          doctest::Approx(0.84134474606854295).epsilon(1e-14));
    CHECK(std_normal_cdf(40.0) == 1.0);
    CHECK(std_normal_cdf(-40.0) == doctest::Approx(0.0));

    // symmetry and monotonicity over a grid
    double prev = 0.0;
    for (double x = -8.0; x <= 8.0; x += 0.25) {
        const double p = std_normal_cdf(x);
        CHECK(p >= prev);
        CHECK(p + std_normal_cdf(-x) == doctest::Approx(1.0).epsilon(1e-13));
        prev = p;
    }
}

TEST_CASE("normal log-complement avoids underflow") {
    CHECK(std_normal_log_sf(0.0) == doctest::Approx(std::log(0.5)).epsilon(1e-14));
    CHECK(std_normal_log_sf(1.0) ==
          doctest::Approx(std::log(1.0 - 0.84134474606854295)).epsilon(1e-12));
    // far tail: finite and close to -x^2/2 - log(x sqrt(2 pi))
    const double x = 50.0;
    const double approx = -0.5 * x * x - std::log(x * std::sqrt(2.0 * M_PI));
    CHECK(std_normal_log_sf(x) == doctest::Approx(approx).epsilon(1e-3));
    CHECK(std::isfinite(std_normal_log_sf(200.0)));
}

TEST_CASE("standard normal quantile") {
    CHECK(std_normal_quantile(0.5) == doctest::Approx(0.0));
    CHECK(std_normal_quantile(0.975) ==
          doctest::Approx(1.9599639845400542).epsilon(1e-14));
    CHECK(std_normal_quantile(std_normal_cdf(1.0)) ==
          doctest::Approx(1.0).epsilon(1e-12));
    CHECK_THROWS_AS((void)std_normal_quantile(0.0), std::domain_error);
    CHECK_THROWS_AS((void)std_normal_quantile(1.0), std::domain_error);
    CHECK_THROWS_AS((void)std_normal_quantile(-0.3), std::domain_error);

    // quantile o cdf = identity
    for (double p : {1e-6, 1e-3, 0.1, 0.3, 0.5, 0.7, 0.9, 1.0 - 1e-3, 1.0 - 1e-6}) {
        CHECK(std_normal_cdf(std_normal_quantile(p)) ==
              doctest::Approx(p).epsilon(1e-10));
    }
}

TEST_CASE("incomplete gamma order derivatives") {
    const GammaOrderDerivs zero = lower_incomplete_gamma_order_derivs(0.0);
    CHECK(zero.g0 == 0.0);
    CHECK(zero.g1 == 0.0);
    CHECK(zero.g2 == 0.0);
    CHECK_THROWS_AS((void)lower_incomplete_gamma_order_derivs(-1.0), std::domain_error);

    // frozen oracle constants at x = 1 (first component analytic)
    const GammaOrderDerivs one = lower_incomplete_gamma_order_derivs(1.0);
    CHECK(one.g0 == doctest::Approx(0.63212055882855768).epsilon(1e-14));
    CHECK(one.g1 == doctest::Approx(-0.79659959929705313).epsilon(1e-11));
    CHECK(one.g2 == doctest::Approx(1.7824255962226048).epsilon(1e-11));

    // x -> infinity: moments of -log of an Exp(1) variate
    const GammaOrderDerivs inf = lower_incomplete_gamma_order_derivs(50.0);
    CHECK(inf.g0 == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(inf.g1 == doctest::Approx(-euler_mascheroni).epsilon(1e-11));
    CHECK(inf.g2 == doctest::Approx(euler_mascheroni * euler_mascheroni +
                                    M_PI * M_PI / 6.0).epsilon(1e-11));

    // closed form for the zeroth component; monotonicity of g0 and g2
    double prev0 = -1.0, prev2 = -1.0;
    for (double x : {0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0}) {
        const GammaOrderDerivs g = lower_incomplete_gamma_order_derivs(x);
        CHECK(g.g0 == doctest::Approx(-std::expm1(-x)).epsilon(1e-13));
        CHECK(g.g0 > prev0);
        CHECK(g.g2 > prev2);
        prev0 = g.g0;
        prev2 = g.g2;
    }

    // independent algebraic route: g1 = -gamma - exp(-x) log x - E1(x)
    for (double x : {0.25, 1.0, 3.0}) {
        const double e1 = -exp_integral_ei(-x);
        const double expected = -euler_mascheroni - std::exp(-x) * std::log(x) - e1;
        CHECK(lower_incomplete_gamma_order_derivs(x).g1 ==
              doctest::Approx(expected).epsilon(1e-11));
    }
}

TEST_CASE("regularized incomplete gamma") {
    for (double s : {0.5, 1.0, 2.5, 7.0}) {
        for (double x : {0.1, 1.0, 5.0, 30.0}) {
            CHECK(gamma_p(s, x) + gamma_q(s, x) == doctest::Approx(1.0).epsilon(1e-13));
        }
    }
    CHECK(gamma_p(1.0, 2.0) == doctest::Approx(-std::expm1(-2.0)).epsilon(1e-13));
    CHECK(gamma_p(0.5, 1.44) == doctest::Approx(std::erf(1.2)).epsilon(1e-12));
}

TEST_CASE("exponential integral") {
    CHECK_THROWS_AS((void)exp_integral_ei(0.0), std::domain_error);
    CHECK(exp_integral_ei(-1e-310) == -std::numeric_limits<double>::infinity());
    // frozen quadrature oracle
    CHECK(exp_integral_ei(-1.0) ==
          doctest::Approx(-0.21938393439552027).epsilon(1e-12));
    CHECK(exp_integral_ei(-10.0) ==
          doctest::Approx(-4.15696892968532438e-6).epsilon(1e-9));
    // series leading terms: Ei(-x) - gamma - log x -> 0
    const double x = 1e-6;
    CHECK(std::abs(exp_integral_ei(-x) - euler_mascheroni - std::log(x)) < 1e-5);
    CHECK(exp_integral_ei(1.0) == doctest::Approx(1.8951178163559368).epsilon(1e-12));
}

TEST_CASE("adaptive quadrature") {
    QuadratureSpec spec;
    CHECK(adaptive_quad([](double) { return 1.0; }, 0.0, 1.0, spec).value ==
          doctest::Approx(1.0).epsilon(1e-14));
    CHECK(adaptive_quad([](double t) { return std::exp(-t); }, 0.0, 2.0, spec).value ==
          doctest::Approx(-std::expm1(-2.0)).epsilon(1e-13));

    // integrable endpoint singularities at both ends; appears inside the
    // Sirvanci-Yang bias correction as p -> 1
    auto loglog = [](double t) { return std::log(-std::log1p(-t)); };
    const QuadResult q = adaptive_quad(loglog, 0.0, 1.0, spec);
    CHECK(q.value == doctest::Approx(-euler_mascheroni).epsilon(1e-7));

    // independent composite-Simpson oracle, after substitution u = -log(1-t)
    // and peeling off the singular piece (integral of log u over (0,1) is -1)
    const double oracle =
        -1.0 +
        oracles::composite_simpson(
            [](double u) { return std::expm1(-u) * std::log(u); }, 1e-30, 1.0, 20000) +
        oracles::composite_simpson(
            [](double u) { return std::exp(-u) * std::log(u); }, 1.0, 60.0, 20000);
    CHECK(oracle == doctest::Approx(-euler_mascheroni).epsilon(1e-8));

    // non-convergence is flagged, not silent
    QuadratureSpec shallow{1e-14, 2};
    const QuadResult nc =
        adaptive_quad([](double t) { return std::pow(t, -0.5); }, 0.0, 1.0, shallow);
    CHECK_FALSE(nc.converged);

    CHECK_THROWS_AS((void)adaptive_quad([](double) { return 1.0; }, 1.0, 0.0, spec),
                    std::invalid_argument);
}
