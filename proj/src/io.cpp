#include "genus3/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

std::int64_t get_int(Json const & j, char const * key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        throw ParseError(std::string("expected integer field '") + key + "'");
    return j.at(key).get<std::int64_t>();
}

Json elem_json(FiniteField const & F, FieldElement x)
{
    if (F.degree() == 1)
        return x.index;
    Json out = Json::array();
    for (auto c : F.coefficients(x))
        out.push_back(c);
    return out;
}

Json poly_json(FiniteField const & F, FieldPoly const & f)
{
    Json out = Json::array();
    for (auto x : f)
        out.push_back(elem_json(F, x));
    return out;
}

FieldPoly parse_poly(FiniteField const & F, Json const & j, char const * key)
{
    if (!j.contains(key) || !j.at(key).is_array())
        throw ParseError(std::string("expected coefficient list '") + key + "'");
    FieldPoly f;
    for (auto const & c : j.at(key))
        f.push_back(parse_field_element(F, c));
    return f;
}

FieldPtr parse_field(Json const & j)
{
    if (!j.contains("field") || !j.at("field").is_object())
        throw ParseError("missing 'field' object");
    auto const & f = j.at("field");
    auto p = get_int(f, "p");
    std::int64_t e = f.contains("e") ? get_int(f, "e") : 1;
    if (p < 2 || p > (1 << 20) || e < 1 || e > 20)
        throw ParseError("field parameters out of range");
    if (!is_prime(static_cast<std::uint64_t>(p)))
        throw NotAPrimePower("field characteristic " + std::to_string(p) + " is not prime");
    if (f.contains("modulus")) {
        std::vector<std::uint32_t> mod;
        for (auto const & c : f.at("modulus")) {
            if (!c.is_number_integer())
                throw ParseError("modulus coefficients must be integers");
            auto v = c.get<std::int64_t>();
            mod.push_back(static_cast<std::uint32_t>(((v % p) + p) % p));
        }
        if (mod.size() != static_cast<std::size_t>(e) + 1)
            throw ParseError("modulus degree does not match e");
        return std::make_shared<FiniteField>(static_cast<std::uint32_t>(p), std::move(mod));
    }
    return std::make_shared<FiniteField>(static_cast<std::uint32_t>(p), static_cast<unsigned>(e));
}

/* "x^2*y*z" -> {2, 1, 1} */
std::array<int, 3> parse_monomial(std::string const & s)
{
    std::array<int, 3> ex{ 0, 0, 0 };
    std::size_t i = 0;
    while (i < s.size()) {
        char ch = s[i];
        if (ch == '*' || std::isspace(static_cast<unsigned char>(ch))) {
            ++i;
            continue;
        }
        int var = ch == 'x' ? 0 : ch == 'y' ? 1 : ch == 'z' ? 2 : -1;
        if (var < 0)
            throw ParseError("bad monomial '" + s + "'");
        ++i;
        int k = 1;
        if (i < s.size() && s[i] == '^') {
            ++i;
            std::size_t start = i;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                ++i;
            if (start == i)
                throw ParseError("bad exponent in '" + s + "'");
            k = std::stoi(s.substr(start, i - start));
        }
        ex[var] += k;
    }
    if (ex[0] + ex[1] + ex[2] != 4)
        throw ParseError("monomial '" + s + "' is not of degree 4");
    return ex;
}

std::string monomial_name(std::array<int, 3> const & ex)
{
    std::string out;
    char const * vars = "xyz";
    for (int v = 0; v < 3; ++v) {
        if (ex[v] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += vars[v];
        if (ex[v] > 1)
            out += "^" + std::to_string(ex[v]);
    }
    return out;
}

/* "2a^4 + a - 1" */
FieldElement parse_element_string(FiniteField const & F, std::string const & s)
{
    FieldElement acc = F.zero();
    std::size_t i = 0;
    auto skip = [&] {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i])))
            ++i;
    };
    bool any = false;
    while (true) {
        skip();
        if (i >= s.size())
            break;
        int sign = 1;
        if (s[i] == '+' || s[i] == '-') {
            sign = s[i] == '-' ? -1 : 1;
            ++i;
            skip();
        } else if (any) {
            throw ParseError("bad field element '" + s + "'");
        }
        std::int64_t coef = 1;
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            ++i;
        bool has_coef = i > start;
        if (has_coef)
            coef = std::stoll(s.substr(start, i - start));
        skip();
        if (i < s.size() && s[i] == '*') {
            ++i;
            skip();
        }
        std::uint64_t k = 0;
        if (i < s.size() && s[i] == 'a') {
            ++i;
            k = 1;
            if (i < s.size() && s[i] == '^') {
                ++i;
                std::size_t st = i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
                    ++i;
                if (st == i)
                    throw ParseError("bad exponent in '" + s + "'");
                k = std::stoull(s.substr(st, i - st));
            }
        } else if (!has_coef) {
            throw ParseError("bad field element '" + s + "'");
        }
        FieldElement term = F.mul(F.from_int(sign * coef), F.pow(F.generator(), k));
        acc = F.add(acc, term);
        any = true;
    }
    if (!any)
        throw ParseError("empty field element");
    return acc;
}

template <class T>
Json list_json(std::vector<T> const & xs)
{
    Json out = Json::array();
    for (auto const & x : xs)
        out.push_back(to_json(x));
    return out;
}

void flatten(Json const & j, std::string const & path, std::ostringstream & o)
{
    if (j.is_object()) {
        if (j.empty())
            o << path << " = {}\n";
        for (auto it = j.begin(); it != j.end(); ++it)
            flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), o);
    } else if (j.is_array()) {
        if (j.empty())
            o << path << " = []\n";
        for (std::size_t i = 0; i < j.size(); ++i)
            flatten(j[i], path + "[" + std::to_string(i) + "]", o);
    } else if (j.is_string()) {
        o << path << " = " << j.get<std::string>() << "\n";
    } else {
        o << path << " = " << j.dump() << "\n";
    }
}

} // namespace

Json to_json(BigInt const & n)
{
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

Json to_json(std::vector<BigInt> const & poly)
{
    Json out = Json::array();
    for (auto const & c : poly)
        out.push_back(to_json(c));
    return out;
}

Json to_json(SerreDecomposition const & dec)
{
    return Json{ { "q", dec.q }, { "p", dec.p }, { "e", dec.e }, { "x", dec.x },
                 { "a", dec.a }, { "m", dec.m }, { "d", dec.d }, { "d_prime", dec.dprime } };
}

Json to_json(Certificate const & c)
{
    using K = Certificate::Kind;
    Json j{ { "kind", to_string(c.kind) } };
    switch (c.kind) {
    case K::HOFFMANN_TABLE:
        j["rank"] = c.rank;
        j["d"] = c.d;
        break;
    case K::ELLIPTIC_TRACE:
        j["q"] = c.q;
        j["t"] = c.t;
        break;
    case K::ADMISSIBILITY:
        j["q"] = c.q;
        j["poly"] = to_json(c.poly);
        j["poly_text"] = RealWeilPoly(c.poly, c.q).to_string();
        break;
    case K::RANK2_ENUMERATION:
        j["d"] = c.d;
        j["disc"] = c.disc;
        j["indecomposable_classes"] = c.value;
        break;
    case K::DEFECT2_TYPE_FORCED:
    case K::GLUE_FEASIBILITY:
        j["q"] = c.q;
        break;
    case K::POINT_COUNTS:
        j["curve"] = c.curve;
        j["counts"] = c.counts;
        break;
    case K::ZETA_FROM_COUNTS:
        j["q"] = c.q;
        j["counts"] = c.counts;
        j["poly"] = to_json(c.poly);
        j["poly_text"] = RealWeilPoly(c.poly, c.q).to_string();
        break;
    case K::IBUKIYAMA_FORMULA:
        j["p"] = c.q;
        j["r"] = c.rank;
        j["value"] = c.value;
        break;
    case K::HERMITIAN_FORM:
        j["d"] = c.d;
        j["form"] = c.form;
        j["disc"] = c.value;
        break;
    case K::DIVISIBILITY:
        j["q"] = c.q;
        j["t"] = c.t;
        break;
    case K::CITED_THEOREM:
        break;
    case K::DATA:
        j["value"] = c.value;
        break;
    }
    j["holds"] = c.holds;
    if (!c.detail.empty())
        j["detail"] = c.detail;
    return j;
}

Json to_json(Exclusion const & e)
{
    return Json{ { "type", e.type },
                 { "poly", to_json(e.poly) },
                 { "reason", to_string(e.reason) },
                 { "detail", e.detail },
                 { "certificates", list_json(e.certificates) } };
}

Json to_json(Guarantee const & g)
{
    Json j{ { "deviation", g.deviation },
            { "side", to_string(g.side) },
            { "type", g.type },
            { "poly", to_json(g.poly) },
            { "construction", to_string(g.construction) } };
    j["attained"] = g.attained ? Json(*g.attained) : Json(nullptr);
    j["certificates"] = list_json(g.certificates);
    return j;
}

Json to_json(BoundReport const & r)
{
    Json j{ { "q", r.dec.q },
            { "family", r.dec.is_square() ? "square" : std::string(to_string(r.family)) },
            { "m", r.dec.m },
            { "d", r.dec.d },
            { "d_prime", r.dec.dprime },
            { "decomposition", to_json(r.dec) },
            { "serre_weil_upper", r.serre_weil_upper },
            { "upper", r.improved_upper },
            { "upper_source", r.upper_source },
            { "exact", r.exact } };
    j["guarantee"] = r.guarantee ? to_json(*r.guarantee) : Json(nullptr);
    j["certificates"] = list_json(r.certificates);
    j["exclusions"] = list_json(r.exclusions);
    j["caveats"] = r.caveats;
    j["divisibility"] = Json{ { "p_divides_m", r.divisibility.p_divides_m },
                              { "p_divides_m_minus_1", r.divisibility.p_divides_m_minus_1 },
                              { "p_divides_m_minus_2", r.divisibility.p_divides_m_minus_2 },
                              { "tags", r.divisibility.tags } };
    return j;
}

Json to_json(GlueFeasibility const & g)
{
    auto mats = [](std::vector<Mod2Matrix> const & ms) {
        Json out = Json::array();
        for (auto const & m : ms)
            out.push_back(Json{ { "matrix", { { m.a, m.b }, { m.c, m.d } } },
                                { "action", to_string(m.action()) } });
        return out;
    };
    auto wit = [](std::optional<std::array<std::int64_t, 3>> const & w) {
        return w ? Json(*w) : Json(nullptr);
    };
    Json j{ { "q", g.q }, { "m", g.m }, { "d", g.d } };
    j["form"] = g.form ? form_to_json(*g.form) : Json(nullptr);
    j["n_em"] = g.n_em;
    j["n_em2"] = g.n_em2;
    j["n_em_is_2_mod_4"] = g.n_em_is_2_mod_4;
    j["n_em2_is_0_mod_4"] = g.n_em2_is_0_mod_4;
    j["traces_exist"] = g.traces_exist;
    j["traces_prime_to_p"] = g.traces_prime_to_p;
    j["matrices_em"] = mats(g.matrices_em);
    j["matrices_em2"] = mats(g.matrices_em2);
    j["identity_excluded_for_em"] = g.identity_excluded_for_em;
    j["fixes_one_available_for_em2"] = g.fixes_one_available_for_em2;
    j["witness_em"] = wit(g.witness_em);
    j["witness_em2"] = wit(g.witness_em2);
    j["verdict"] = g.feasible ? "FEASIBLE" : "INFEASIBLE";
    return j;
}

Json to_json(UnglueObstruction const & u)
{
    return Json{ { "q", u.q },
                 { "m", u.m },
                 { "d", u.d },
                 { "type_forced", u.type_forced },
                 { "forced_type", u.forced_type },
                 { "indecomposable_disc2_classes", u.indecomposable_disc2_classes },
                 { "reason", u.reason },
                 { "verdict", u.verdict },
                 { "caveats", u.caveats },
                 { "certificates", list_json(u.certificates) } };
}

Json to_json(SolutionSet const & s)
{
    Json sols = Json::array();
    for (auto const & x : s.solutions())
        sols.push_back(Json{ { "e", x.e }, { "x", to_json(x.x) } });
    return Json{ { "family", s.family().describe() },
                 { "solutions", sols },
                 { "e_max", s.e_max() },
                 { "exhaustive", s.exhaustive() } };
}

Json to_json(AdmissibilityVerdict const & v)
{
    Json j{ { "admissible", v.admissible } };
    j["violation"] = v.violation ? Json(v.violation->describe()) : Json(nullptr);
    j["counts"] = to_json(v.counts);
    return j;
}

Json to_json(IndecomposabilityVerdict const & v)
{
    Json w = Json::array();
    for (auto const & x : v.witness)
        w.push_back({ x.u, x.v });
    return Json{ { "indecomposable", v.indecomposable }, { "complete", v.complete },
                 { "witness", w } };
}

template <std::size_t N>
Json form_to_json(HermitianForm<N> const & f)
{
    Json diag = Json::array();
    for (int i = 0; i < int(N); ++i)
        diag.push_back(f.diagonal(i));
    Json off = Json::array();
    for (auto const & x : f.lower_entries())
        off.push_back({ x.u, x.v });
    return Json{ { "d", f.d() }, { "rank", N }, { "diagonal", diag }, { "off_diagonal", off },
                 { "disc", f.disc() }, { "text", to_string(f) } };
}

template Json form_to_json<2>(HermitianForm<2> const &);
template Json form_to_json<3>(HermitianForm<3> const &);

namespace {

template <std::size_t N>
HermitianForm<N> form_from_json(Json const & j)
{
    try {
        auto d = get_int(j, "d");
        if (j.contains("rank") && get_int(j, "rank") != static_cast<std::int64_t>(N))
            throw ParseError("unexpected rank");
        std::array<std::int64_t, N> diag{};
        auto const & jd = j.at("diagonal");
        auto const & jo = j.at("off_diagonal");
        if (jd.size() != N || jo.size() != N * (N - 1) / 2)
            throw ParseError("wrong number of form entries");
        for (std::size_t i = 0; i < N; ++i)
            diag[i] = jd.at(i).get<std::int64_t>();
        std::vector<OrderElement> lower;
        for (auto const & e : jo) {
            if (!e.is_array() || e.size() != 2)
                throw ParseError("off-diagonal entries are [u, v] pairs");
            lower.push_back({ d, e.at(0).get<std::int64_t>(), e.at(1).get<std::int64_t>() });
        }
        return HermitianForm<N>::from_entries(d, diag, lower);
    } catch (Json::exception const & e) {
        throw ParseError(std::string("malformed form: ") + e.what());
    }
}

} // namespace

HermitianForm2 form2_from_json(Json const & j) { return form_from_json<2>(j); }
HermitianForm3 form3_from_json(Json const & j) { return form_from_json<3>(j); }

FieldElement parse_field_element(FiniteField const & F, Json const & j)
{
    if (j.is_number_integer())
        return F.from_int(j.get<std::int64_t>());
    if (j.is_array()) {
        std::vector<std::int64_t> c;
        for (auto const & x : j) {
            if (!x.is_number_integer())
                throw ParseError("field element coefficients must be integers");
            c.push_back(x.get<std::int64_t>());
        }
        if (c.size() > F.degree())
            throw ParseError("too many coefficients for a field element");
        return F.from_coefficients(c);
    }
    if (j.is_string())
        return parse_element_string(F, j.get<std::string>());
    throw ParseError("bad field element " + j.dump());
}

CurveModel curve_from_json(Json const & j)
{
    if (!j.is_object() || !j.contains("kind") || !j.at("kind").is_string())
        throw ParseError("curve record needs a 'kind'");
    auto kind = j.at("kind").get<std::string>();
    FieldPtr F = parse_field(j);
    if (kind == "plane_quartic") {
        PlaneQuartic c{ F, {} };
        if (!j.contains("coefficients"))
            throw ParseError("plane_quartic needs 'coefficients'");
        auto const & cs = j.at("coefficients");
        if (cs.is_array()) {
            if (cs.size() != 15)
                throw ParseError("plane_quartic needs 15 coefficients");
            for (std::size_t k = 0; k < 15; ++k)
                c.coefficients[k] = parse_field_element(*F, cs[k]);
        } else if (cs.is_object()) {
            for (auto it = cs.begin(); it != cs.end(); ++it) {
                auto ex = parse_monomial(it.key());
                for (std::size_t k = 0; k < 15; ++k)
                    if (quartic_monomials[k] == ex)
                        c.coefficients[k] = F->add(c.coefficients[k],
                                                   parse_field_element(*F, it.value()));
            }
        } else {
            throw ParseError("bad 'coefficients'");
        }
        return c;
    }
    if (kind == "artin_schreier")
        return ArtinSchreier{ F, parse_poly(*F, j, "f") };
    if (kind == "weierstrass") {
        auto a = [&](char const * key) {
            return j.contains(key) ? parse_field_element(*F, j.at(key)) : F->zero();
        };
        return Weierstrass{ F, a("a1"), a("a2"), a("a3"), a("a4"), a("a6") };
    }
    if (kind == "bielliptic")
        return BiellipticProduct{ F, parse_poly(*F, j, "f"), parse_poly(*F, j, "g") };
    throw ParseError("unknown curve kind '" + kind + "'");
}

CurveModel load_curve_file(std::filesystem::path const & path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path.string());
    Json j;
    try {
        j = Json::parse(in);
    } catch (Json::exception const & e) {
        throw ParseError(path.string() + ": " + e.what());
    }
    return curve_from_json(j);
}

Json curve_to_json(CurveModel const & c)
{
    FieldPtr F = field_of(c);
    Json field{ { "p", F->characteristic() }, { "e", F->degree() }, { "modulus", F->modulus() } };
    Json j{ { "kind", kind_name(c) }, { "field", field } };
    std::visit(
        [&](auto const & m) {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PlaneQuartic>) {
                Json cs = Json::object();
                for (std::size_t k = 0; k < 15; ++k)
                    if (m.coefficients[k].index != 0)
                        cs[monomial_name(quartic_monomials[k])] = elem_json(*F, m.coefficients[k]);
                j["coefficients"] = cs;
            } else if constexpr (std::is_same_v<T, ArtinSchreier>) {
                j["f"] = poly_json(*F, m.f);
            } else if constexpr (std::is_same_v<T, Weierstrass>) {
                j["a1"] = elem_json(*F, m.a1);
                j["a2"] = elem_json(*F, m.a2);
                j["a3"] = elem_json(*F, m.a3);
                j["a4"] = elem_json(*F, m.a4);
                j["a6"] = elem_json(*F, m.a6);
            } else {
                j["f"] = poly_json(*F, m.f);
                j["g"] = poly_json(*F, m.g);
            }
        },
        c);
    return j;
}

std::string to_text(Json const & j)
{
    std::ostringstream o;
    flatten(j, "", o);
    return o.str();
}

} // namespace genus3
