#include "doctest.h"

#include "genus3/arith.hpp"
#include "genus3/error.hpp"
#include "genus3/serre.hpp"

using namespace genus3;

namespace {

std::vector<std::uint64_t> prime_powers_upto(std::uint64_t n)
{
    std::vector<bool> composite(n + 1, false);
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= n; ++p) {
        if (composite[p])
            continue;
        for (std::uint64_t k = p * p; k <= n; k += p)
            composite[k] = true;
        for (std::uint64_t q = p; q <= n; q *= p)
            out.push_back(q);
    }
    std::sort(out.begin(), out.end());
    return out;
}

/* {2 sqrt q} < sqrt 3 - 1 with 100 decimal digits of fixed point */
bool fixed_point_oracle(std::uint64_t q)
{
    BigInt scale = big_pow(10, 100);
    BigInt two_sqrt_q = isqrt(BigInt(4 * BigInt(static_cast<unsigned long>(q)) * scale * scale));
    BigInt m = isqrt(BigInt(4 * BigInt(static_cast<unsigned long>(q))));
    BigInt frac = two_sqrt_q - m * scale;
    BigInt bound = isqrt(BigInt(3 * scale * scale)) - scale;
    return frac < bound;
}

} // namespace

TEST_CASE("decompose examples")
{
    auto check = [](std::uint64_t q, std::int64_t x, std::int64_t a, std::int64_t m, std::int64_t d) {
        auto dec = decompose(q);
        CHECK(dec.x == x);
        CHECK(dec.a == a);
        CHECK(dec.m == m);
        CHECK(dec.d == d);
    };
    check(5, 2, -1, 4, -4);
    check(3, 1, 1, 3, -3);
    check(41, 6, -1, 12, -20);
    check(343, 18, 1, 37, -3);
    check(27, 5, -3, 10, -8);
    check(2, 1, 0, 2, -4);
    check(9, 3, -3, 6, 0);
    CHECK(decompose(343).dprime == -76);
    CHECK_THROWS_AS(decompose(12), NotAPrimePower);
}

TEST_CASE("theorem_family examples")
{
    CHECK(theorem_family(decompose(7)) == TheoremFamily::D3_11);
    CHECK(theorem_family(decompose(3)) == TheoremFamily::D3_11);
    CHECK(theorem_family(decompose(17)) == TheoremFamily::D4_8);
    CHECK(theorem_family(decompose(5)) == TheoremFamily::D4_8);
    CHECK(theorem_family(decompose(2)) == TheoremFamily::D4_8);
    CHECK(theorem_family(decompose(41)) == TheoremFamily::Other);
    CHECK(theorem_family(decompose(243)) == TheoremFamily::D3_11);
    CHECK(decompose(243).d == -11);
}

TEST_CASE("defect2_type_forced examples")
{
    CHECK(defect2_type_forced(decompose(7)));
    CHECK_FALSE(defect2_type_forced(decompose(2)));
    CHECK_THROWS_AS(defect2_type_forced(decompose(49)), PerfectSquareInput);
}

TEST_CASE("decomposition invariants for all prime powers up to 10^6")
{
    auto qs = prime_powers_upto(1000000);
    CHECK(qs.size() == 78734);
    std::size_t forced_checked = 0;
    for (auto q : qs) {
        auto dec = decompose(q);
        auto qq = static_cast<std::int64_t>(q);
        REQUIRE(dec.x == static_cast<std::int64_t>(isqrt(q)));
        REQUIRE(qq == dec.x * dec.x + dec.x + dec.a);
        REQUIRE(-dec.x <= dec.a);
        REQUIRE(dec.a <= dec.x);
        REQUIRE(dec.m == static_cast<std::int64_t>(isqrt(4 * q)));
        REQUIRE(dec.m == (dec.a <= 0 ? 2 * dec.x : 2 * dec.x + 1));
        REQUIRE(dec.d == dec.m * dec.m - 4 * qq);
        REQUIRE(dec.d == (dec.a <= 0 ? -4 * (dec.x + dec.a) : 1 - 4 * dec.a));
        REQUIRE(dec.d <= 0);
        REQUIRE((dec.d == 0) == is_perfect_square(qq));
        REQUIRE(dec.dprime == dec.d - 2 * dec.m + 1);
        if (dec.d != 0) {
            auto fam = theorem_family(dec);
            if (fam == TheoremFamily::D3_11)
                REQUIRE((dec.d == -3 || dec.d == -11));
            if (fam == TheoremFamily::D4_8)
                REQUIRE((dec.d == -4 || dec.d == -8));
            if (dec.a == 1)
                REQUIRE(defect2_type_forced(dec));
            REQUIRE(defect2_type_forced(dec) == fixed_point_oracle(q));
            ++forced_checked;
        }
    }
    CHECK(forced_checked > 78000);
}
