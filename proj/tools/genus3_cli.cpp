#include <charconv>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "genus3/bounds.hpp"
#include "genus3/curves.hpp"
#include "genus3/dioph.hpp"
#include "genus3/error.hpp"
#include "genus3/hermite.hpp"
#include "genus3/io.hpp"
#include "genus3/weil.hpp"

using namespace genus3;

namespace {

std::uint64_t parse_u64(std::string const & s)
{
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw InputError("expected a positive integer, got '" + s + "'");
    return v;
}

std::vector<std::int64_t> parse_list(std::string const & s)
{
    std::vector<std::int64_t> out;
    std::size_t i = 0;
    while (i <= s.size()) {
        auto j = s.find(',', i);
        if (j == std::string::npos)
            j = s.size();
        std::string item = s.substr(i, j - i);
        std::int64_t v = 0;
        auto b = item.data(), e = item.data() + item.size();
        while (b < e && *b == ' ')
            ++b;
        auto [ptr, ec] = std::from_chars(b, e, v);
        if (item.empty() || ec != std::errc() || ptr != e)
            throw InputError("expected a comma-separated integer list, got '" + s + "'");
        out.push_back(v);
        i = j + 1;
    }
    return out;
}

void emit(Json const & j, bool json)
{
    if (json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << to_text(j);
}

struct Options
{
    bool json = false;

    std::string target;
    unsigned jobs = 1;
    bool recheck = false;

    std::string file;
    std::string reference;
    unsigned r = 3;

    std::int64_t d = 0;
    int rank = 2;
    std::int64_t disc = 1;
    std::string mode;
    std::int64_t bound = 6;
    std::size_t limit = 0;

    std::string family;
    std::uint64_t p = 0;
    std::int64_t a = 1;
    std::int64_t c = 0;
    std::uint64_t modulus = 0;
    unsigned emax = 0;
    bool relaxed = false;

    std::int64_t q = 0;
    std::string type;
    std::string coeffs;
    std::string counts;
    int rmax = default_admissibility_rmax;

    std::uint64_t glue_q = 0;
};

int run_analyze(Options const & o)
{
    auto dots = o.target.find("..");
    std::vector<BoundReport> reports;
    bool single = dots == std::string::npos;
    if (single) {
        reports.push_back(analyze(parse_u64(o.target)));
    } else {
        auto lo = parse_u64(o.target.substr(0, dots));
        auto hi = parse_u64(o.target.substr(dots + 2));
        if (lo > hi)
            throw InputError("empty range " + o.target);
        reports = analyze_range(lo, hi, o.jobs);
    }
    Json out = Json::array();
    bool ok = true;
    for (auto const & r : reports) {
        Json j = to_json(r);
        if (o.recheck) {
            auto rc = recheck(r);
            ok = ok && rc.ok;
            j["recheck"] = Json{ { "ok", rc.ok }, { "checked", rc.checked },
                                 { "imported", rc.imported }, { "failures", rc.failures } };
        }
        out.push_back(j);
    }
    emit(single ? out[0] : out, o.json);
    return ok ? 0 : 1;
}

int run_count(Options const & o)
{
    if (o.file.empty() == o.reference.empty())
        throw InputError("give exactly one of a curve file or --reference");
    if (o.r < 1 || o.r > 12)
        throw InputError("--r must be in 1..12");
    CurveModel c = o.file.empty() ? reference_curve(o.reference) : load_curve_file(o.file);
    auto counts = point_counts(c, o.r);
    Json j{ { "curve", curve_to_json(c) }, { "genus", curve_genus(c) }, { "counts", counts } };
    auto q = static_cast<std::int64_t>(field_of(c)->order());
    if (curve_genus(c) == 3 && counts.size() >= 3) {
        auto h = zeta_from_counts(counts, q);
        j["zeta_poly"] = to_json(h.coefficients());
        j["zeta_text"] = h.to_string();
        auto roots = h.integer_roots();
        j["type"] = roots ? Json(*roots) : Json(nullptr);
    }
    if (auto const * w = std::get_if<Weierstrass>(&c)) {
        j["trace"] = weierstrass_trace(*w);
        if (field_of(c)->characteristic() != 2)
            j["two_torsion_action"] = to_string(two_torsion_action(*w));
    }
    emit(j, o.json);
    return 0;
}

int run_hermitian(Options const & o)
{
    Json j{ { "d", o.d }, { "rank", o.rank }, { "disc", o.disc }, { "mode", o.mode } };
    if (o.mode == "enumerate") {
        if (o.rank != 2)
            throw UnsupportedCase("enumeration is implemented for rank 2");
        Json forms = Json::array();
        for (auto const & cl : enumerate_reduced2(o.d, o.disc)) {
            Json f = form_to_json(cl.form);
            f["indecomposability"] = to_json(cl.indecomposability);
            forms.push_back(f);
        }
        j["classes"] = forms;
        j["complete"] = true;
    } else {
        if (o.rank != 3 || o.disc != 1)
            throw UnsupportedCase("search is implemented for rank 3, discriminant 1");
        if (o.bound < 1)
            throw InputError("--bound must be positive");
        auto res = search_unimodular_indecomposable3(o.d, o.bound, o.limit);
        Json forms = Json::array();
        for (auto const & f : res.forms)
            forms.push_back(form_to_json(f));
        j["bound"] = o.bound;
        j["forms"] = forms;
        j["count"] = res.forms.size();
        j["exhausted"] = res.exhausted;
        j["indecomposability_certified"] = res.indecomposability_certified;
        j["hoffmann_exists"] = hoffmann_exists(3, o.d);
    }
    emit(j, o.json);
    return 0;
}

int run_dioph(Options const & o)
{
    if (o.family == "mod-obstruction") {
        if (o.p < 2 || o.modulus < 2)
            throw InputError("--p and --modulus >= 2 are required");
        bool ob = mod_obstruction(o.p, o.c, o.modulus);
        emit(Json{ { "family", "p^e = x^2 + x + c" }, { "p", o.p }, { "c", o.c },
                   { "modulus", o.modulus }, { "obstruction", ob } },
             o.json);
        return 0;
    }
    if (o.emax < 1)
        throw InputError("--emax must be positive");
    auto need_p = [&] {
        if (o.p < 2)
            throw InputError("--p is required");
    };
    if (o.family == "pow-eq-x2x1" || o.family == "pow-eq-x2x3" || o.family == "pow-eq-quadratic") {
        need_p();
        std::int64_t a = o.family == "pow-eq-x2x1" ? 1 : o.family == "pow-eq-x2x3" ? 3 : o.a;
        emit(to_json(solve_pow_eq_quadratic(o.p, a, o.emax)), o.json);
    } else if (o.family == "x2-plus-c") {
        need_p();
        emit(to_json(solve_x2_plus_c(o.c, o.p, o.emax)), o.json);
    } else if (o.family == "5e-x2x3") {
        emit(to_json(check_5e_family(o.emax, !o.relaxed)), o.json);
    } else {
        throw InputError("unknown family '" + o.family + "'");
    }
    return 0;
}

int run_zeta(Options const & o)
{
    if (o.q < 2)
        throw InputError("--q is required");
    factor_prime_power(static_cast<std::uint64_t>(o.q));
    int given = !o.type.empty() + !o.coeffs.empty() + !o.counts.empty();
    if (given != 1)
        throw InputError("give exactly one of --type, --coeffs, --counts");
    std::vector<BigInt> coeffs;
    Json j{ { "q", o.q } };
    if (!o.type.empty()) {
        auto xs = parse_list(o.type);
        coeffs = type_to_poly(xs, o.q).coefficients();
    } else if (!o.coeffs.empty()) {
        for (auto v : parse_list(o.coeffs))
            coeffs.emplace_back(static_cast<long>(v));
    } else {
        auto ns = parse_list(o.counts);
        j["counts"] = ns;
        coeffs = zeta_from_counts(ns, o.q).coefficients();
    }
    if (coeffs.empty() || coeffs.back() != 1)
        throw InputError("the polynomial must be monic (coefficients low degree first)");
    j["poly"] = to_json(coeffs);
    auto v = admissible(coeffs, o.q, o.rmax);
    j["verdict"] = to_json(v);
    if (v.admissible || weil_range(coeffs, o.q) == WeilRange::Ok)
        j["text"] = RealWeilPoly(coeffs, o.q).to_string();
    emit(j, o.json);
    return 0;
}

int run_glue(Options const & o)
{
    emit(to_json(glue_feasibility_defect2(o.glue_q)), o.json);
    return 0;
}

int run_unglue(Options const & o)
{
    emit(to_json(unglue_obstruction_defect2(o.glue_q)), o.json);
    return 0;
}

} // namespace

int main(int argc, char ** argv)
{
    CLI::App app{ "Genus-3 curves with many points: bounds, certificates and searches" };
    app.require_subcommand(1);
    Options o;

    auto * an = app.add_subcommand("analyze", "bound report for q or a range a..b");
    an->add_option("q", o.target, "prime power q or range a..b")->required();
    an->add_option("--jobs", o.jobs, "worker threads for ranges")->check(CLI::Range(1u, 256u));
    an->add_flag("--recheck", o.recheck, "recompute every certificate");

    auto * ct = app.add_subcommand("count", "point counts and zeta type of a curve file");
    ct->add_option("file", o.file, "curve file (JSON)");
    ct->add_option("--reference", o.reference, "built-in curve name");
    ct->add_option("--r", o.r, "count over F_q, ..., F_{q^r}");

    auto * he = app.add_subcommand("hermitian", "hermitian forms over R_d");
    he->add_option("mode", o.mode, "enumerate | search")
        ->required()
        ->check(CLI::IsMember({ "enumerate", "search" }));
    he->add_option("--d", o.d, "discriminant")->required();
    he->add_option("--rank", o.rank, "2 or 3");
    he->add_option("--disc", o.disc, "discriminant of the form");
    he->add_option("--bound", o.bound, "entry bound for the rank-3 search");
    he->add_option("--limit", o.limit, "stop after this many forms (0: no limit)");

    auto * di = app.add_subcommand("dioph", "exponential diophantine searches");
    di->add_option("--family", o.family,
                   "pow-eq-x2x1 | pow-eq-x2x3 | pow-eq-quadratic | x2-plus-c | 5e-x2x3 | "
                   "mod-obstruction")
        ->required();
    di->add_option("--p", o.p, "prime");
    di->add_option("--a", o.a, "constant a in p^e = x^2 + x + a");
    di->add_option("--c", o.c, "constant c");
    di->add_option("--modulus", o.modulus, "modulus for mod-obstruction");
    di->add_option("--emax", o.emax, "largest exponent");
    di->add_flag("--relaxed", o.relaxed, "drop the congruence in 5e-x2x3");

    auto * ze = app.add_subcommand("zeta", "admissibility of a zeta type");
    ze->add_option("--q", o.q, "prime power")->required();
    ze->add_option("--type", o.type, "comma-separated type x_1,...,x_g");
    ze->add_option("--coeffs", o.coeffs, "real Weil polynomial, low degree first");
    ze->add_option("--counts", o.counts, "N_1,N_2,N_3 of a genus-3 curve");
    ze->add_option("--rmax", o.rmax, "largest extension degree checked")->check(CLI::Range(1, 24));

    auto * gl = app.add_subcommand("glue", "defect-2 glueing feasibility (d = -4, -8)");
    gl->add_option("q", o.glue_q, "prime power")->required();
    auto * ug = app.add_subcommand("unglue", "defect-2 obstruction (d = -3, -11)");
    ug->add_option("q", o.glue_q, "prime power")->required();

    for (auto * s : { an, ct, he, di, ze, gl, ug })
        s->add_flag("--json", o.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (CLI::ParseError const & e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*an)
            return run_analyze(o);
        if (*ct)
            return run_count(o);
        if (*he)
            return run_hermitian(o);
        if (*di)
            return run_dioph(o);
        if (*ze)
            return run_zeta(o);
        if (*gl)
            return run_glue(o);
        if (*ug)
            return run_unglue(o);
    } catch (InputError const & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (InvariantViolation const & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    } catch (std::exception const & e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
