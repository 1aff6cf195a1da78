#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "obf/rootfind.hpp"

using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("bisection drives the bracket to adjacent doubles", "[rootfind]") {
    auto f = [](double x) { return x * x - 2.0; };
    auto r = obf::bisect(f, 1.0, 2.0);
    CHECK(r.converged);
    CHECK_THAT(r.root, WithinRel(std::sqrt(2.0), 4e-16));
    // the final bracket cannot be split further
    CHECK(std::nextafter(r.low, r.high) >= r.high);
    // the reported root is the better of the two endpoints
    CHECK(std::abs(r.f_root) <= std::abs(f(r.low)));
    CHECK(std::abs(r.f_root) <= std::abs(f(r.high)));
}

TEST_CASE("bisection handles roots at or near endpoints", "[rootfind]") {
    auto f = [](double x) { return x - 1.0; };
    auto r = obf::bisect(f, 1.0, 2.0);
    CHECK(r.converged);
    CHECK_THAT(r.root, WithinAbs(1.0, 1e-15));

    auto g = [](double x) { return std::log(x); };
    auto r2 = obf::bisect(g, 0.5, 1.0);
    CHECK_THAT(r2.root, WithinRel(1.0, 1e-15));
}

TEST_CASE("bisection rejects a bracket without a sign change", "[rootfind]") {
    auto f = [](double x) { return x * x + 1.0; };
    CHECK_THROWS_AS(obf::bisect(f, -1.0, 1.0), std::invalid_argument);
    // reversed orientation (f(lo) > 0 > f(hi)) is also rejected: callers
    // must present an increasing bracket
    auto g = [](double x) { return -x; };
    CHECK_THROWS_AS(obf::bisect(g, -1.0, 1.0), std::invalid_argument);
}

TEST_CASE("bisection resolves roots over huge dynamic range", "[rootfind]") {
    // the root equations put roots anywhere from 1+1e-6 to 1e12; emulate both
    auto f1 = [](double x) { return std::log(x) - 27.0; };
    auto r1 = obf::bisect(f1, 1.0, 1e13);
    CHECK_THAT(r1.root, WithinRel(std::exp(27.0), 1e-15));

    auto f2 = [](double x) { return x - (1.0 + 1e-6); };
    auto r2 = obf::bisect(f2, 1.0, 2.0);
    CHECK_THAT(r2.root, WithinRel(1.0 + 1e-6, 1e-15));
}

TEST_CASE("upward bracket expansion finds distant sign changes", "[rootfind]") {
    auto f = [](double x) { return std::log(x) - 5.0; };
    auto [lo, hi] = obf::expand_bracket_up(f, 1.0001, 2.0);
    CHECK(f(lo) <= 0.0);
    CHECK(f(hi) >= 0.0);
    CHECK(lo < std::exp(5.0));
    CHECK(hi >= std::exp(5.0));
    // and the expanded bracket feeds straight into bisection
    auto r = obf::bisect(f, lo, hi);
    CHECK_THAT(r.root, WithinRel(std::exp(5.0), 1e-15));
}
