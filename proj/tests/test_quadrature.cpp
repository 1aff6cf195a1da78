#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "obf/quadrature.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("single panel integrates low-degree polynomials exactly", "[quadrature]") {
    double err = 0.0;
    // G7/K15 is exact well past cubic; these must come out to machine precision
    CHECK_THAT(obf::detail::gk15([](double) { return 1.0; }, 0.0, 1.0, err),
               WithinAbs(1.0, 1e-15));
    CHECK_THAT(obf::detail::gk15([](double x) { return x; }, 0.0, 2.0, err),
               WithinAbs(2.0, 1e-14));
    CHECK_THAT(obf::detail::gk15([](double x) { return x * x * x; }, -1.0, 3.0, err),
               WithinAbs(20.0, 1e-13));
}

TEST_CASE("adaptive integration reaches requested tolerance", "[quadrature]") {
    auto r1 = obf::integrate_adaptive([](double x) { return std::sin(x); }, 0.0,
                                      std::numbers::pi, 1e-12);
    CHECK(r1.converged);
    CHECK_THAT(r1.value, WithinAbs(2.0, 1e-12));

    auto r2 = obf::integrate_adaptive([](double x) { return std::exp(-x * x); }, -6.0, 6.0, 1e-12);
    CHECK(r2.converged);
    CHECK_THAT(r2.value, WithinAbs(std::sqrt(std::numbers::pi), 1e-11));

    auto r3 = obf::integrate_adaptive([](double x) { return std::cos(10.0 * x); }, 0.0, 5.0, 1e-12);
    CHECK(r3.converged);
    CHECK_THAT(r3.value, WithinAbs(std::sin(50.0) / 10.0, 1e-11));
}

TEST_CASE("integrable endpoint singularity converges", "[quadrature]") {
    // 1/sqrt(x) on (0,1]: nodes are interior so the singularity is never hit
    auto r = obf::integrate_adaptive([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0, 1e-9,
                                     1 << 16);
    CHECK_THAT(r.value, WithinAbs(2.0, 1e-6));
}

TEST_CASE("error estimate brackets the true error on smooth integrands", "[quadrature]") {
    auto r = obf::integrate_adaptive([](double x) { return std::log1p(x) * std::exp(-x); }, 0.0,
                                     10.0, 1e-10);
    CHECK(r.converged);
    // reference computed with 25-digit arithmetic
    CHECK(std::abs(r.value - 0.59623469163535981237) <= std::max(r.error_estimate, 1e-12));
}

TEST_CASE("interval budget exhaustion is reported", "[quadrature]") {
    auto r = obf::integrate_adaptive([](double x) { return std::cos(200.0 * x); }, 0.0, 50.0,
                                     1e-14, 4);
    CHECK_FALSE(r.converged);
    CHECK(r.intervals >= 1);
    CHECK(r.error_estimate > 1e-14);
}

TEST_CASE("breakpoint splitting handles interior kinks", "[quadrature]") {
    auto f = [](double x) { return std::abs(x - 0.5); };
    auto split = obf::integrate_adaptive_split(f, 0.0, 1.0, {0.5}, 1e-13);
    CHECK(split.converged);
    CHECK_THAT(split.value, WithinAbs(0.25, 1e-13));

    // breakpoints outside the range are ignored rather than corrupting panels
    auto outside = obf::integrate_adaptive_split(f, 0.0, 1.0, {-3.0, 0.5, 42.0}, 1e-10);
    CHECK_THAT(outside.value, WithinAbs(0.25, 1e-10));
}

TEST_CASE("zero-length range integrates to zero", "[quadrature]") {
    auto r = obf::integrate_adaptive([](double x) { return x * x; }, 1.5, 1.5, 1e-12);
    CHECK(r.value == 0.0);
    CHECK(r.converged);
}
