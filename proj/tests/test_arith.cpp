#include <random>
#include <set>

#include "doctest.h"

#include "genus3/arith.hpp"
#include "genus3/error.hpp"
#include "genus3/finite_field.hpp"

using namespace genus3;

TEST_CASE("factor_prime_power")
{
    CHECK(factor_prime_power(343) == PrimePower{ 7, 3, 343 });
    CHECK(factor_prime_power(2) == PrimePower{ 2, 1, 2 });
    CHECK(factor_prime_power(1024) == PrimePower{ 2, 10, 1024 });
    CHECK_THROWS_AS(factor_prime_power(12), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(1), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(0), NotAPrimePower);
    CHECK_THROWS_AS(factor_prime_power(36), NotAPrimePower);
}

TEST_CASE("factor_prime_power inverts p^e")
{
    for (std::uint64_t p : { 2, 3, 5, 7, 11, 13, 101, 65537 })
        for (unsigned e = 1; checked_pow(p, e) < (std::int64_t{ 1 } << 40); ++e) {
            auto q = static_cast<std::uint64_t>(checked_pow(p, e));
            CHECK(factor_prime_power(q) == PrimePower{ p, e, q });
        }
}

TEST_CASE("is_prime")
{
    std::vector<std::uint64_t> small;
    for (std::uint64_t n = 0; n < 200; ++n)
        if (is_prime(n))
            small.push_back(n);
    CHECK(small.size() == 46);
    CHECK(is_prime(18446744073709551557ull));
    CHECK_FALSE(is_prime(18446744073709551557ull - 2));
    CHECK_FALSE(is_prime(3215031751ull)); /* strong pseudoprime to 2, 3, 5, 7 */
}

TEST_CASE("isqrt examples")
{
    CHECK(isqrt(std::uint64_t{ 0 }) == 0);
    CHECK(isqrt(std::uint64_t{ 28 }) == 5);
    CHECK(isqrt(std::uint64_t{ 972 }) == 31);
    CHECK(isqrt(std::uint64_t{ 4 * 343 }) == 37);
    CHECK(isqrt(~std::uint64_t{ 0 }) == 4294967295ull);
    CHECK(isqrt(BigInt("1000000000000000000000000000000")) == BigInt("1000000000000000"));
}

TEST_CASE("isqrt bracket on random 64-bit inputs")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20000; ++i) {
        std::uint64_t n = rng() >> (rng() % 64);
        BigInt r = isqrt(n);
        BigInt nb;
        mpz_import(nb.get_mpz_t(), 1, 1, sizeof n, 0, 0, &n);
        REQUIRE(r * r <= nb);
        REQUIRE((r + 1) * (r + 1) > nb);
        REQUIRE(isqrt(nb) == r);
    }
}

TEST_CASE("perfect squares")
{
    std::mt19937_64 rng(12);
    for (int i = 0; i < 500; ++i) {
        BigInt n = big_pow(rng() % 1000 + 2, 1 + rng() % 40) + rng();
        CHECK(is_perfect_square(BigInt(n * n)));
        CHECK_FALSE(is_perfect_square(BigInt(n * n + 1)));
    }
    CHECK(is_perfect_square(std::int64_t{ 0 }));
    CHECK_FALSE(is_perfect_square(std::int64_t{ -4 }));
}

TEST_CASE("floor_div and rational floor")
{
    CHECK(floor_div(7, 2) == 3);
    CHECK(floor_div(-7, 2) == -4);
    CHECK(floor_div(-8, 2) == -4);
    CHECK(floor_of(Rational(-7, 2)) == -4);
    CHECK(ceil_of(Rational(-7, 2)) == -3);
    CHECK(ceil_of(Rational(6, 3)) == 2);
}

TEST_CASE("field construction")
{
    FiniteField F27(3, { 1, 0, 2, 1 });
    CHECK(F27.order() == 27);
    auto a = F27.generator();
    /* a^3 = -2a^2 - 1 = a^2 + 2 */
    CHECK(F27.coefficients(F27.pow(a, 3)) == std::vector<std::uint32_t>{ 2, 0, 1 });
    auto els = F27.elements();
    CHECK(els.size() == 27);
    CHECK(std::set<FieldElement>(els.begin(), els.end()).size() == 27);

    FiniteField F2(2, 1);
    CHECK(F2.order() == 2);
    CHECK_THROWS_AS(FiniteField(3, std::vector<std::uint32_t>{ 0, 2, 0, 1 }), ReducibleModulus);
    CHECK_THROWS_AS(FiniteField(2, 21), FieldTooLarge);
    CHECK(FiniteField(5, 2).modulus() == fp_poly::smallest_irreducible(5, 2));
    CHECK(F27.inv(F27.one()) == F27.one());
    CHECK_THROWS_AS(F27.inv(F27.zero()), DivisionByZero);
}

TEST_CASE("field axioms and frobenius")
{
    std::mt19937_64 rng(13);
    for (auto [p, e] : { std::pair{ 2u, 1u }, { 2u, 3u }, { 3u, 3u }, { 5u, 2u }, { 7u, 3u }, { 2u, 8u } }) {
        FiniteField F(p, e);
        auto pick = [&] { return FieldElement{ static_cast<std::uint32_t>(rng() % F.order()) }; };
        for (int i = 0; i < 2000; ++i) {
            auto x = pick(), y = pick(), z = pick();
            REQUIRE(F.add(F.add(x, y), z) == F.add(x, F.add(y, z)));
            REQUIRE(F.mul(F.mul(x, y), z) == F.mul(x, F.mul(y, z)));
            REQUIRE(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
            REQUIRE(F.add(x, F.neg(x)) == F.zero());
            if (x != F.zero())
                REQUIRE(F.mul(x, F.inv(x)) == F.one());
            REQUIRE(F.frobenius(F.add(x, y)) == F.add(F.frobenius(x), F.frobenius(y)));
            REQUIRE(F.frobenius(F.mul(x, y)) == F.mul(F.frobenius(x), F.frobenius(y)));
            auto f = x;
            for (unsigned k = 0; k < e; ++k)
                f = F.frobenius(f);
            REQUIRE(f == x);
        }
    }
}

TEST_CASE("embedding into an extension is a field homomorphism")
{
    auto base = std::make_shared<FiniteField>(3, std::vector<std::uint32_t>{ 1, 0, 2, 1 });
    auto emb = embed_in_extension(base, 2);
    auto const & T = *emb.target;
    CHECK(T.order() == 729);
    for (auto x : base->elements())
        for (auto y : base->elements()) {
            REQUIRE(emb(base->add(x, y)) == T.add(emb(x), emb(y)));
            REQUIRE(emb(base->mul(x, y)) == T.mul(emb(x), emb(y)));
        }
}
