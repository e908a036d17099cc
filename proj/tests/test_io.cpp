#include <filesystem>

#include "doctest.h"

#include "genus3/error.hpp"
#include "genus3/io.hpp"

using namespace genus3;

namespace {

std::filesystem::path data(std::string const & name)
{
    return std::filesystem::path(GENUS3_DATA_DIR) / "curves" / name;
}

std::size_t scalar_count(Json const & j)
{
    if (j.is_object() || j.is_array()) {
        if (j.empty())
            return 1;
        std::size_t n = 0;
        for (auto const & x : j)
            n += scalar_count(x);
        return n;
    }
    return 1;
}

} // namespace

TEST_CASE("curve files match the built-in models")
{
    for (auto name : reference_curve_names()) {
        auto file = load_curve_file(data(std::string(name) + ".json"));
        auto built = reference_curve(name);
        CHECK(point_counts(file, 2) == point_counts(built, 2));
        CHECK(curve_to_json(file) == curve_to_json(built));
        /* round trip through the serialized form */
        CHECK(curve_to_json(curve_from_json(curve_to_json(file))) == curve_to_json(file));
    }
    auto e = load_curve_file(data("elliptic_f3.json"));
    CHECK(point_counts(e, 1)[0] == 4);
}

TEST_CASE("field element parsing")
{
    FiniteField F(3, { 1, 0, 2, 1 });
    auto a = F.generator();
    CHECK(parse_field_element(F, Json("2a^4")) == F.mul(F.from_int(2), F.pow(a, 4)));
    CHECK(parse_field_element(F, Json("a^8")) == F.pow(a, 8));
    CHECK(parse_field_element(F, Json("a + 1")) == F.add(a, F.one()));
    CHECK(parse_field_element(F, Json("-a")) == F.neg(a));
    CHECK(parse_field_element(F, Json(-1)) == F.from_int(2));
    CHECK(parse_field_element(F, Json::array({ 0, 1 })) == a);
    CHECK_THROWS_AS(parse_field_element(F, Json("b")), ParseError);
    CHECK_THROWS_AS(parse_field_element(F, Json("")), ParseError);
    CHECK_THROWS_AS(parse_field_element(F, Json::array({ 0, 1, 0, 0 })), ParseError);
    CHECK_THROWS_AS(parse_field_element(F, Json(1.5)), ParseError);
}

TEST_CASE("malformed curve records")
{
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"field": {"p": 3}})")), ParseError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "conic", "field": {"p": 3}})")), ParseError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "artin_schreier"})")), ParseError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "artin_schreier", "field": {"p": 4}, "f": [1]})")), InputError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "plane_quartic", "field": {"p": 2}, "coefficients": {"x^3": 1}})")), ParseError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "plane_quartic", "field": {"p": 2}, "coefficients": [1, 0]})")), ParseError);
    CHECK_THROWS_AS(curve_from_json(Json::parse(R"({"kind": "weierstrass", "field": {"p": 3, "e": 3, "modulus": [0, 1, 0, 1]}})")), ReducibleModulus);
    CHECK_THROWS_AS(load_curve_file("/nonexistent/curve.json"), ParseError);
}

TEST_CASE("form records")
{
    auto f = HermitianForm2::from_entries(-4, { 2, 2 }, { OrderElement{ -4, 1, -1 } });
    auto j = form_to_json(f);
    CHECK(j["d"] == -4);
    CHECK(j["rank"] == 2);
    CHECK(j["disc"] == 2);
    CHECK(form2_from_json(j) == f);
    auto g = HermitianForm3::from_entries(-7, { 2, 2, 2 }, { OrderElement{ -7, 0, 1 }, OrderElement{ -7, 1, 0 }, OrderElement{ -7, 0, -1 } });
    CHECK(form3_from_json(form_to_json(g)) == g);
    CHECK_THROWS_AS(form2_from_json(Json::parse(R"({"d": -4, "diagonal": [1], "off_diagonal": []})")), ParseError);
    CHECK_THROWS_AS(form2_from_json(Json::parse(R"({"d": -4, "rank": 3, "diagonal": [1, 1], "off_diagonal": [[0, 0]]})")), ParseError);
    CHECK_THROWS_AS(form2_from_json(Json::parse(R"({"d": -5, "diagonal": [1, 1], "off_diagonal": [[0, 0]]})")), InvalidDiscriminant);
}

TEST_CASE("report schema and text flattening")
{
    auto j = to_json(analyze(7));
    for (auto key : { "q", "family", "m", "d", "d_prime", "upper", "guarantee", "certificates", "exclusions", "caveats" })
        CHECK(j.contains(key));
    CHECK(j["upper"] == 20);
    auto text = to_text(j);
    CHECK(text.find("upper = 20\n") != std::string::npos);
    CHECK(text.find("guarantee.type = [4,4,4]\n") != std::string::npos);
    std::size_t lines = std::count(text.begin(), text.end(), '\n');
    CHECK(lines == scalar_count(j));
    auto parsed = Json::parse(j.dump());
    CHECK(parsed == j);
}

TEST_CASE("big integers serialize exactly")
{
    CHECK(to_json(BigInt(42)) == 42);
    BigInt big = big_pow(5, 100);
    CHECK(to_json(big) == big.get_str());
}
