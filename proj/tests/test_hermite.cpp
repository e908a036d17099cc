#include <algorithm>
#include <map>

#include "doctest.h"

#include "genus3/error.hpp"
#include "genus3/hermite.hpp"

using namespace genus3;

namespace {

HermitianForm2 form2(std::int64_t d, std::int64_t l, std::int64_t m, std::int64_t u, std::int64_t v)
{
    return HermitianForm2::from_entries(d, { l, m }, { OrderElement{ d, u, v } });
}

std::map<std::int64_t, std::size_t> value_histogram(HermitianForm2 const & f, std::int64_t bound)
{
    std::map<std::int64_t, std::size_t> h;
    for (auto const & s : short_vectors(f, bound))
        ++h[s.value];
    return h;
}

HermitianForm2 const form_m4 = form2(-4, 2, 2, 1, -1); /* [[2, 1+i], [1-i, 2]] */
HermitianForm2 const form_m8 = form2(-8, 2, 2, 0, 1);  /* [[2, -sqrt-2], [sqrt-2, 2]] */

} // namespace

TEST_CASE("discriminants")
{
    CHECK(form_m4.disc() == 2);
    CHECK(form_m8.disc() == 2);
    CHECK(form_m4.entry(0, 1) == OrderElement{ -4, 1, 1 });
    for (std::int64_t d : { -3, -4, -7, -8, -11 })
        CHECK(form2(d, 1, 2, 0, 0).disc() == 2);
    CHECK_FALSE(form2(-4, 1, 1, 1, 0).is_positive_definite());
}

TEST_CASE("hermitian validation")
{
    OrderMatrix<2> bad{ { { OrderElement{ -4, 1, 0 }, OrderElement{ -4, 1, 1 } },
                          { OrderElement{ -4, 1, 1 }, OrderElement{ -4, 2, 0 } } } };
    CHECK_THROWS_AS(HermitianForm2{ bad }, InputError);
}

TEST_CASE("reduce2 examples")
{
    auto r = reduce2(form2(-7, 2, 1, 0, 0));
    CHECK(r.form == form2(-7, 1, 2, 0, 0));
    /* [[1, w], [conj w, 2]] over R_-3 */
    auto s = reduce2(HermitianForm2::from_entries(-3, { 1, 2 }, { conj(omega(-3)) }));
    CHECK(s.form == form2(-3, 1, 1, 0, 0));
    CHECK(HermitianForm2::from_entries(-3, { 1, 2 }, { conj(omega(-3)) }).transform(s.basis) == s.form);
    auto t = reduce2(form_m4);
    CHECK(reduce2(t.form).form == t.form);
    CHECK(t.form.disc() == 2);
    CHECK_THROWS_AS(reduce2(form2(-4, 1, 1, 1, 0)), NotPositiveDefinite);
}

TEST_CASE("represents_one and indecomposability")
{
    CHECK_FALSE(represents_one(form_m4));
    CHECK_FALSE(represents_one(form_m8));
    auto w = represents_one(form2(-4, 1, 2, 0, 0));
    REQUIRE(w);
    CHECK(form2(-4, 1, 2, 0, 0).value(*w) == 1);
    CHECK(is_indecomposable(form_m4).indecomposable);
    CHECK(is_indecomposable(form_m8).indecomposable);
    CHECK_FALSE(is_indecomposable(form2(-3, 1, 2, 0, 0)).indecomposable);
    auto id3 = HermitianForm3::from_entries(-3, { 1, 1, 1 }, { order_zero(-3), order_zero(-3), order_zero(-3) });
    CHECK_FALSE(is_indecomposable(id3).indecomposable);
    CHECK(is_indecomposable(id3).complete);
    CHECK_FALSE(is_indecomposable(form2(-20, 2, 3, 0, 0)).complete);
}

TEST_CASE("enumerate_reduced2 examples")
{
    for (std::int64_t d : { -3, -11 }) {
        auto cl = enumerate_reduced2(d, 2);
        REQUIRE(cl.size() == 1);
        CHECK(cl[0].form == form2(d, 1, 2, 0, 0));
        CHECK_FALSE(cl[0].indecomposability.indecomposable);
    }
    for (auto [d, known] : { std::pair{ std::int64_t{ -4 }, form_m4 }, std::pair{ std::int64_t{ -8 }, form_m8 } }) {
        auto cl = enumerate_reduced2(d, 2);
        REQUIRE(cl.size() == 2);
        auto n_ind = std::count_if(cl.begin(), cl.end(), [](auto const & c) { return c.indecomposability.indecomposable; });
        CHECK(n_ind == 1);
        for (auto const & c : cl)
            if (c.indecomposability.indecomposable)
                CHECK(c.form == reduce2(known).form);
    }
    auto one = enumerate_reduced2(-3, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].form == form2(-3, 1, 1, 0, 0));
    CHECK_THROWS_AS(enumerate_reduced2(-15, 2), IncompleteForDiscriminant);
}

TEST_CASE("every form in a box reduces to exactly one listed class")
{
    for (std::int64_t d : { -3, -4, -8, -11 })
        for (std::int64_t disc : { 1, 2, 3 }) {
            auto classes = enumerate_reduced2(d, disc);
            std::size_t hits = 0;
            for (std::int64_t l = 1; l <= 7; ++l)
                for (std::int64_t m = 1; m <= 7; ++m)
                    for (std::int64_t u = -4; u <= 4; ++u)
                        for (std::int64_t v = -4; v <= 4; ++v) {
                            auto f = form2(d, l, m, u, v);
                            if (f.disc() != disc)
                                continue;
                            auto r = reduce2(f);
                            auto n = std::count_if(classes.begin(), classes.end(),
                                                   [&](auto const & c) { return c.form == r.form; });
                            INFO("d = " << d << ", form " << to_string(f));
                            REQUIRE(n == 1);
                            REQUIRE(f.transform(r.basis) == r.form);
                            REQUIRE(value_histogram(f, 20) == value_histogram(r.form, 20));
                            ++hits;
                        }
            CHECK(hits > 0);
        }
}

TEST_CASE("unimodular forms: indecomposable iff minimum >= 2")
{
    for (std::int64_t d : { -3, -4, -7, -8, -11, -19 }) {
        for (std::int64_t l = 1; l <= 4; ++l)
            for (std::int64_t m = l; m <= 4; ++m)
                for (std::int64_t u = -3; u <= 3; ++u)
                    for (std::int64_t v = -3; v <= 3; ++v) {
                        auto f = form2(d, l, m, u, v);
                        if (f.disc() != 1)
                            continue;
                        CHECK(is_indecomposable(f).indecomposable == (minimum(f) >= 2));
                    }
    }
    auto res = search_unimodular_indecomposable3(-7, 8, 50);
    REQUIRE(!res.forms.empty());
    for (auto const & f : res.forms)
        CHECK(is_indecomposable(f).indecomposable == (minimum(f) >= 2));
    CHECK(is_indecomposable(res.forms[0]).indecomposable);
}

TEST_CASE("rank-3 search")
{
    for (std::int64_t d : { -3, -4, -8, -11 }) {
        auto res = search_unimodular_indecomposable3(d, 6);
        CHECK(res.forms.empty());
        CHECK(res.exhausted);
    }
    for (std::int64_t d : { -7, -19 }) {
        auto res = search_unimodular_indecomposable3(d, 8);
        CHECK_FALSE(res.forms.empty());
        CHECK(res.indecomposability_certified);
        for (auto const & f : res.forms) {
            REQUIRE(f.is_positive_definite());
            REQUIRE(f.disc() == 1);
            REQUIRE_FALSE(represents_one(f));
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    REQUIRE(f.entry(i, j) == conj(f.entry(j, i)));
        }
    }
    auto limited = search_unimodular_indecomposable3(-7, 8, 3);
    CHECK(limited.forms.size() == 3);
    CHECK_FALSE(limited.exhausted);
    auto r20 = search_unimodular_indecomposable3(-20, 8, 5);
    CHECK_FALSE(r20.indecomposability_certified);
}

TEST_CASE("hoffmann table")
{
    CHECK_FALSE(hoffmann_exists(3, -3));
    CHECK_FALSE(hoffmann_exists(3, -4));
    CHECK_FALSE(hoffmann_exists(3, -8));
    CHECK_FALSE(hoffmann_exists(3, -11));
    CHECK(hoffmann_exists(3, -7));
    CHECK(hoffmann_exists(3, -20));
    CHECK_FALSE(hoffmann_exists(2, -7));
    CHECK_FALSE(hoffmann_exists(2, -3));
    CHECK_FALSE(hoffmann_exists(2, -4));
    CHECK(hoffmann_exists(2, -8));
    for (std::int64_t d : { -7, -19 }) {
        REQUIRE(hoffmann_exists(3, d));
        CHECK_FALSE(search_unimodular_indecomposable3(d, 8, 1).forms.empty());
    }
}

TEST_CASE("rank-2 indecomposable unimodular forms follow the rank-2 table")
{
    for (std::int64_t d : { -3, -4, -7, -8, -11 }) {
        bool found = false;
        for (auto const & c : enumerate_reduced2(d, 1))
            found = found || c.indecomposability.indecomposable;
        CHECK(found == hoffmann_exists(2, d));
    }
}
