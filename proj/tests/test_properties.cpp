#include "doctest.h"

#include "properties.hpp"

using namespace genus3;

namespace {

void report(props::Outcome const & o)
{
    for (auto const & line : o.log)
        MESSAGE(line);
}

} // namespace

TEST_CASE("reduction of 10^4 random forms per discriminant")
{
    std::uint64_t seed = 100;
    for (std::int64_t d : { -3, -4, -7, -8, -11 }) {
        auto o = props::reduction_suite(d, 10000, seed++);
        report(o);
        CHECK(o.cases == 10000);
        CHECK(o.violations == 0);
    }
}

TEST_CASE("covering radius on 10^4 random points per discriminant")
{
    std::uint64_t seed = 200;
    for (std::int64_t d : { -3, -4, -7, -8, -11, -15, -19, -20 }) {
        auto o = props::covering_suite(d, 10000, seed++);
        report(o);
        CHECK(o.violations == 0);
    }
}

TEST_CASE("bielliptic formula against direct counts")
{
    std::uint64_t seed = 300;
    for (auto [p, e] : { std::pair{ 3u, 1u }, { 5u, 1u }, { 3u, 2u }, { 3u, 3u } }) {
        auto o = props::bielliptic_suite(p, e, 50, seed++);
        report(o);
        CHECK(o.cases == 50);
        CHECK(o.violations == 0);
    }
}

TEST_CASE("direct count of the F_27 example")
{
    auto c = std::get<BiellipticProduct>(reference_curve("bielliptic_f27"));
    CHECK(props::bielliptic_direct_count(c, 1) == 56);
}

TEST_CASE("subfield monotonicity on counted curves")
{
    auto o = props::subfield_suite();
    report(o);
    CHECK(o.violations == 0);
}
