#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "obf/specfun.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("complete gamma matches known values", "[specfun]") {
    CHECK_THAT(obf::complete_gamma(0.5), WithinRel(std::sqrt(std::numbers::pi), 1e-15));
    CHECK_THAT(obf::complete_gamma(1.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(obf::complete_gamma(2.0), WithinRel(1.0, 1e-15));
    CHECK_THAT(obf::complete_gamma(5.0), WithinRel(24.0, 1e-15));
    // reference values computed with 40-digit arithmetic
    CHECK_THAT(obf::complete_gamma(2.0 / 3.0), WithinRel(1.3541179394264004169, 1e-14));
    CHECK_THAT(obf::complete_gamma(0.8), WithinRel(1.1642297137253033736, 1e-14));
    CHECK_THAT(obf::complete_gamma(2.5), WithinRel(1.3293403881791370205, 1e-14));
}

TEST_CASE("complete gamma rejects out-of-domain shapes", "[specfun]") {
    CHECK_THROWS_AS(obf::complete_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(obf::complete_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS(obf::complete_gamma(10.5), std::domain_error);
}

TEST_CASE("lower incomplete gamma matches high-precision references", "[specfun]") {
    // series branch (x < s+1)
    CHECK_THAT(obf::lower_incomplete_gamma(0.5, 1.0), WithinRel(1.4936482656248540508, 1e-14));
    CHECK_THAT(obf::lower_incomplete_gamma(0.8, 0.3), WithinRel(0.41919206278135693912, 1e-14));
    CHECK_THAT(obf::lower_incomplete_gamma(2.5, 2.0), WithinRel(0.59897957413602228466, 1e-14));
    // continued-fraction branch (x >= s+1)
    CHECK_THAT(obf::lower_incomplete_gamma(0.8, 5.0), WithinRel(1.1595077668941051606, 1e-14));
    CHECK_THAT(obf::lower_incomplete_gamma(2.5, 3.4), WithinRel(1.0156897848515549214, 1e-14));
    CHECK_THAT(obf::lower_incomplete_gamma(4.0, 9.0), WithinRel(5.8726410821825467049, 1e-14));
}

TEST_CASE("lower incomplete gamma closed forms for integer shape", "[specfun]") {
    // gamma(1,x) = 1 - e^-x and gamma(2,x) = 1 - (1+x) e^-x hold everywhere,
    // so they exercise both branches and the crossover
    for (double x : {0.0, 0.5, 1.5, 1.999, 2.001, 3.0, 7.5, 30.0}) {
        CHECK_THAT(obf::lower_incomplete_gamma(1.0, x), WithinAbs(-std::expm1(-x), 1e-14));
        CHECK_THAT(obf::lower_incomplete_gamma(2.0, x),
                   WithinAbs(1.0 - (1.0 + x) * std::exp(-x), 1e-14));
    }
}

TEST_CASE("lower incomplete gamma recurrence", "[specfun]") {
    // gamma(s+1,x) = s gamma(s,x) - x^s e^-x
    for (double s : {0.4, 1.3, 2.5, 4.0}) {
        for (double x : {0.2, 1.0, 3.7, 12.0}) {
            double lhs = obf::lower_incomplete_gamma(s + 1.0, x);
            double rhs = s * obf::lower_incomplete_gamma(s, x) - std::pow(x, s) * std::exp(-x);
            CHECK_THAT(lhs, WithinAbs(rhs, 1e-12 * std::max(1.0, std::abs(rhs))));
        }
    }
}

TEST_CASE("lower incomplete gamma limits and bounds", "[specfun]") {
    CHECK(obf::lower_incomplete_gamma(0.7, 0.0) == 0.0);
    // saturates to the complete gamma in the deep tail
    CHECK_THAT(obf::lower_incomplete_gamma(0.5, 50.0),
               WithinRel(obf::complete_gamma(0.5), 1e-15));
    // the remaining upper tail at x=25 is known to 12 digits
    double tail = obf::complete_gamma(0.5) - obf::lower_incomplete_gamma(0.5, 25.0);
    CHECK_THAT(tail, WithinRel(2.72507653325e-12, 1e-3));
    // monotone nondecreasing in x, never exceeding the complete gamma
    double prev = 0.0;
    for (double x = 0.1; x < 40.0; x *= 1.7) {
        double v = obf::lower_incomplete_gamma(1.7, x);
        CHECK(v >= prev);
        CHECK(v <= obf::complete_gamma(1.7) * (1.0 + 1e-15));
        prev = v;
    }
}

TEST_CASE("lower incomplete gamma rejects bad arguments", "[specfun]") {
    CHECK_THROWS_AS(obf::lower_incomplete_gamma(0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(obf::lower_incomplete_gamma(1.0, -0.5), std::domain_error);
}

TEST_CASE("branch crossover is seamless", "[specfun]") {
    // the series/continued-fraction switch at x = s+1 must not leave a seam
    for (double s : {0.5, 1.25, 3.0}) {
        double below = obf::lower_incomplete_gamma(s, (s + 1.0) * (1.0 - 1e-9));
        double at = obf::lower_incomplete_gamma(s, s + 1.0);
        double above = obf::lower_incomplete_gamma(s, (s + 1.0) * (1.0 + 1e-9));
        CHECK_THAT(below, WithinRel(at, 1e-7));
        CHECK_THAT(above, WithinRel(at, 1e-7));
        CHECK(below <= at * (1 + 1e-12));
        CHECK(at <= above * (1 + 1e-12));
    }
}
