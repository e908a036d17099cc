#include "genus3/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

using Type = std::vector<std::int64_t>;

std::string type_string(Type const & xs)
{
    std::ostringstream o;
    o << "[";
    for (std::size_t i = 0; i < xs.size(); ++i)
        o << (i ? "," : "") << xs[i];
    o << "]";
    return o.str();
}

Type negate(Type xs)
{
    for (auto & x : xs)
        x = -x;
    return xs;
}

std::vector<BigInt> poly_of(Type const & xs, std::int64_t q)
{
    return type_to_poly(xs, q).coefficients();
}

Certificate cert(Certificate::Kind k)
{
    Certificate c;
    c.kind = k;
    return c;
}

Certificate cert_hoffmann(int rank, std::int64_t d)
{
    Certificate c = cert(Certificate::Kind::HOFFMANN_TABLE);
    c.rank = rank;
    c.d = d;
    c.holds = hoffmann_exists(rank, d);
    return c;
}

Certificate cert_trace(SerreDecomposition const & dec, std::int64_t t)
{
    Certificate c = cert(Certificate::Kind::ELLIPTIC_TRACE);
    c.q = dec.q;
    c.t = t;
    c.holds = elliptic_trace_exists(dec.prime_power(), t);
    return c;
}

Certificate cert_admissible(std::vector<BigInt> const & poly, std::int64_t q)
{
    Certificate c = cert(Certificate::Kind::ADMISSIBILITY);
    c.q = q;
    c.poly = poly;
    auto v = admissible(poly, q);
    c.holds = v.admissible;
    if (v.violation)
        c.detail = v.violation->describe();
    return c;
}

Certificate cert_rank2(std::int64_t d, std::int64_t disc)
{
    Certificate c = cert(Certificate::Kind::RANK2_ENUMERATION);
    c.d = d;
    c.disc = disc;
    for (auto const & cl : enumerate_reduced2(d, disc))
        if (cl.indecomposability.indecomposable)
            ++c.value;
    c.holds = c.value > 0;
    return c;
}

Certificate cert_forced(SerreDecomposition const & dec)
{
    Certificate c = cert(Certificate::Kind::DEFECT2_TYPE_FORCED);
    c.q = dec.q;
    c.holds = defect2_type_forced(dec);
    return c;
}

Certificate cert_counts(std::string const & curve, unsigned rmax)
{
    Certificate c = cert(Certificate::Kind::POINT_COUNTS);
    c.curve = curve;
    c.counts = point_counts(reference_curve(curve), rmax);
    c.holds = true;
    return c;
}

Certificate cert_zeta(std::vector<std::int64_t> const & counts, std::int64_t q)
{
    Certificate c = cert(Certificate::Kind::ZETA_FROM_COUNTS);
    c.q = q;
    c.counts = counts;
    c.poly = zeta_from_counts(counts, q).coefficients();
    c.holds = true;
    return c;
}

Certificate cert_divides(SerreDecomposition const & dec, std::int64_t t)
{
    Certificate c = cert(Certificate::Kind::DIVISIBILITY);
    c.q = dec.q;
    c.t = t;
    c.holds = t % static_cast<std::int64_t>(dec.p) == 0;
    return c;
}

Certificate cert_cited(std::string detail)
{
    Certificate c = cert(Certificate::Kind::CITED_THEOREM);
    c.holds = true;
    c.detail = std::move(detail);
    return c;
}

Certificate cert_data(std::int64_t value, std::string detail)
{
    Certificate c = cert(Certificate::Kind::DATA);
    c.value = value;
    c.holds = true;
    c.detail = std::move(detail);
    return c;
}

Certificate cert_form(std::int64_t d, std::int64_t lambda, std::int64_t mu, OrderElement alpha)
{
    Certificate c = cert(Certificate::Kind::HERMITIAN_FORM);
    c.d = d;
    c.form = { lambda, mu, alpha.u, alpha.v };
    auto f = HermitianForm2::from_entries(d, { lambda, mu }, { alpha });
    c.holds = f.is_positive_definite();
    c.value = f.disc();
    return c;
}

Exclusion exclude(Type const & xs, std::int64_t q, ExclusionReason reason, std::string detail,
                  std::vector<Certificate> certs)
{
    return { poly_of(xs, q), type_string(xs), reason, std::move(detail), std::move(certs) };
}

void exclude_defect0_and_1(BoundReport & r)
{
    auto const & dec = r.dec;
    std::int64_t m = dec.m;
    for (int s : { 1, -1 }) {
        Type t0{ s * m, s * m, s * m };
        r.exclusions.push_back(exclude(
            t0, dec.q, ExclusionReason::NO_UNIMODULAR_INDECOMPOSABLE,
            "defect 0 needs an indecomposable unimodular rank-3 hermitian module over R_d",
            { cert_hoffmann(3, dec.d) }));
    }
    for (int s : { 1, -1 }) {
        Type t1{ s * m, s * m, s * (m - 1) };
        r.exclusions.push_back(exclude(t1, dec.q, ExclusionReason::GENUS_TOO_LARGE_FOR_DEFECT1,
                                       "a curve of defect 1 has genus at most 2",
                                       { cert_cited("defect 1 only occurs in genus <= 2") }));
    }
}

/* Decide the side of a +-type from count admissibility of both signs. */
void settle_side(BoundReport & r, Guarantee & g, Type const & xs)
{
    std::int64_t q = r.dec.q;
    auto plus = cert_admissible(poly_of(xs, q), q);
    auto minus = cert_admissible(poly_of(negate(xs), q), q);
    g.certificates.push_back(plus);
    g.certificates.push_back(minus);
    std::int64_t sum = 0;
    for (auto x : xs)
        sum += x;
    if (plus.holds && !minus.holds) {
        g.side = Side::MAX;
        g.attained = q + 1 + sum;
        r.exclusions.push_back({ minus.poly, type_string(negate(xs)),
                                 ExclusionReason::COUNT_INADMISSIBLE, minus.detail, { minus } });
    } else if (!plus.holds && minus.holds) {
        g.side = Side::MIN;
        g.attained = q + 1 - sum;
        r.exclusions.push_back({ plus.poly, type_string(xs), ExclusionReason::COUNT_INADMISSIBLE,
                                 plus.detail, { plus } });
    } else if (!plus.holds && !minus.holds) {
        throw InvariantViolation("neither sign of " + type_string(xs) + " is admissible over F_"
                                 + std::to_string(q));
    } else {
        g.side = Side::EITHER;
    }
}

Guarantee hoffmann_guarantee(BoundReport & r, std::int64_t t, std::int64_t disc)
{
    Guarantee g;
    Type xs{ t, t, t };
    g.deviation = 3 * t;
    g.poly = poly_of(xs, r.dec.q);
    g.type = type_string(xs);
    g.construction = Construction::HOFFMANN_RANK3;
    g.certificates.push_back(cert_divides(r.dec, t));
    g.certificates.push_back(cert_hoffmann(3, disc));
    g.certificates.push_back(cert_trace(r.dec, t));
    g.certificates.push_back(cert_cited(
        "an indecomposable unimodular rank-3 hermitian module over R_" + std::to_string(disc)
        + " gives a principally polarized abelian threefold isogenous to E^3, which is a "
          "Jacobian up to quadratic twist"));
    settle_side(r, g, xs);
    return g;
}

void attach_explicit(BoundReport & r, Guarantee & g, std::string const & curve)
{
    auto counts = cert_counts(curve, 3);
    auto zeta = cert_zeta(counts.counts, r.dec.q);
    g.certificates.push_back(counts);
    g.certificates.push_back(zeta);
    g.certificates.push_back(cert_admissible(zeta.poly, r.dec.q));
    g.attained = counts.counts[0];
    g.side = counts.counts[0] >= r.dec.q + 1 ? Side::MAX : Side::MIN;
}

void analyze_d3_11(BoundReport & r)
{
    auto const & dec = r.dec;
    std::int64_t q = dec.q, m = dec.m;
    if (q == 3) {
        r.improved_upper = 10;
        r.upper_source = "DATA";
        r.certificates.push_back(cert_data(10, "explicit formula bound N(C) <= 10 over F_3"));
        Guarantee g;
        g.construction = Construction::EXPLICIT_CURVE;
        attach_explicit(r, g, "artin_schreier_f3");
        g.poly = g.certificates[1].poly;
        g.type = RealWeilPoly(g.poly, q).to_string();
        g.deviation = *g.attained - (q + 1);
        r.guarantee = g;
        r.exact = *g.attained == r.improved_upper;
        return;
    }
    exclude_defect0_and_1(r);
    auto ob = unglue_obstruction_defect2(static_cast<std::uint64_t>(q));
    if (ob.verdict == "NO_DEFECT_2") {
        ExclusionReason reason = ob.reason == "TRACE_INADMISSIBLE"
            ? ExclusionReason::TRACE_INADMISSIBLE
            : ExclusionReason::NO_INDECOMPOSABLE_DISC2;
        for (int s : { 1, -1 }) {
            Type t2{ s * m, s * m, s * (m - 2) };
            r.exclusions.push_back(exclude(t2, q, reason,
                                           "the only defect-2 type; unglueing obstruction",
                                           ob.certificates));
        }
        r.improved_upper = q + 1 + 3 * m - 3;
        for (auto const & c : ob.caveats)
            if (std::find(r.caveats.begin(), r.caveats.end(), c) == r.caveats.end())
                r.caveats.push_back(c);
    } else {
        r.improved_upper = q + 1 + 3 * m - 2;
        r.caveats.emplace_back("DEFECT2_UNDECIDED");
    }
    r.upper_source = "DEFECT_EXCLUSIONS";

    bool m1_ok = (m - 1) % static_cast<std::int64_t>(dec.p) != 0
        && elliptic_trace_exists(dec.prime_power(), m - 1);
    if (m1_ok) {
        r.guarantee = hoffmann_guarantee(r, m - 1, dec.dprime);
    } else {
        /* [m-1]^3 has no elliptic factor: glue E_m^2 (disc 3) to E_{m-3} */
        for (int s : { 1, -1 }) {
            Type t3{ s * (m - 1), s * (m - 1), s * (m - 1) };
            r.exclusions.push_back(exclude(t3, q, ExclusionReason::TRACE_INADMISSIBLE,
                                           "no elliptic curve with trace +-(m-1)",
                                           { cert_trace(dec, s * (m - 1)) }));
        }
        Guarantee g;
        Type xs{ m, m, m - 3 };
        g.deviation = 3 * m - 3;
        g.poly = poly_of(xs, q);
        g.type = type_string(xs);
        g.construction = Construction::GLUE_RANK2_PLUS_E;
        g.certificates.push_back(cert_divides(dec, m));
        g.certificates.push_back(cert_trace(dec, m));
        g.certificates.push_back(cert_trace(dec, m - 3));
        g.certificates.push_back(cert_form(dec.d, 2, 2, from_int(dec.d, 1)));
        g.certificates.push_back(cert_cited(
            "glueing E_m x E_m with the discriminant-3 polarization [[2,1],[1,2]] to E_{m-3} "
            "with 3 times its canonical polarization along an anti-isometry of the kernels"));
        settle_side(r, g, xs);
        r.guarantee = g;
    }
    r.exact = r.guarantee->attained && *r.guarantee->attained == r.improved_upper;
}

void analyze_d4_8(BoundReport & r)
{
    auto const & dec = r.dec;
    std::int64_t q = dec.q, m = dec.m;
    exclude_defect0_and_1(r);
    r.improved_upper = q + 1 + 3 * m - 2;
    r.upper_source = "DEFECT_EXCLUSIONS";
    if (q == 2) {
        for (auto const & poly : { poly_of({ 2, 2, 0 }, 2),
                                   std::vector<BigInt>{ 4, 2, -4, 1 } }) {
            auto c = cert_admissible(poly, 2);
            RealWeilPoly h(poly, 2);
            auto roots = h.integer_roots();
            r.exclusions.push_back({ poly, roots ? type_string(*roots) : h.to_string(),
                                     ExclusionReason::COUNT_INADMISSIBLE, c.detail, { c } });
        }
        Guarantee g;
        g.construction = Construction::EXPLICIT_CURVE;
        attach_explicit(r, g, "quartic_f2");
        g.poly = g.certificates[1].poly;
        g.type = RealWeilPoly(g.poly, q).to_string();
        g.deviation = *g.attained - (q + 1);
        r.guarantee = g;
        r.exact = *g.attained == r.improved_upper;
        return;
    }
    Guarantee g;
    Type xs{ m, m, m - 2 };
    g.deviation = 3 * m - 2;
    g.poly = poly_of(xs, q);
    g.type = type_string(xs);
    g.construction = Construction::GLUE_RANK2_PLUS_E;
    Certificate glue = cert(Certificate::Kind::GLUE_FEASIBILITY);
    glue.q = q;
    glue.holds = glue_feasibility_defect2(static_cast<std::uint64_t>(q)).feasible;
    g.certificates.push_back(glue);
    g.certificates.push_back(cert_rank2(dec.d, 2));
    g.certificates.push_back(cert_trace(dec, m));
    g.certificates.push_back(cert_trace(dec, m - 2));
    g.certificates.push_back(cert_cited(
        "glueing E_m x E_m with an indecomposable discriminant-2 polarization to E_{m-2} "
        "gives an indecomposable principally polarized threefold, a Jacobian up to twist"));
    if (q == 27) {
        g.construction = Construction::EXPLICIT_CURVE;
        attach_explicit(r, g, "bielliptic_f27");
        auto const & zeta = g.certificates[g.certificates.size() - 2];
        g.poly = zeta.poly;
        auto roots = RealWeilPoly(g.poly, q).integer_roots();
        g.type = roots ? type_string(*roots) : RealWeilPoly(g.poly, q).to_string();
    } else {
        settle_side(r, g, xs);
    }
    r.guarantee = g;
    r.exact = g.attained && *g.attained == r.improved_upper;
}

void analyze_square(BoundReport & r)
{
    auto const & dec = r.dec;
    std::int64_t q = dec.q, m = dec.m;
    unsigned rr = dec.e / 2;
    r.improved_upper = r.serre_weil_upper;
    r.upper_source = "SERRE_WEIL";
    if (dec.p != 2) {
        Guarantee g;
        g.construction = Construction::IBUKIYAMA;
        Certificate c = cert(Certificate::Kind::IBUKIYAMA_FORMULA);
        c.q = static_cast<std::int64_t>(dec.p);
        c.rank = static_cast<int>(rr);
        c.value = to_int64(ibukiyama_count(dec.p, rr));
        c.holds = true;
        g.certificates.push_back(c);
        g.certificates.push_back(cert_cited(
            "Ibukiyama: a genus-3 curve over F_p has 1 + p^(2r) + (-1)^(r+1) 6 p^r points over "
            "F_(p^(2r))"));
        g.deviation = 3 * m;
        g.side = rr % 2 == 1 ? Side::MAX : Side::MIN;
        g.attained = c.value;
        Type xs = g.side == Side::MAX ? Type{ m, m, m } : Type{ -m, -m, -m };
        g.poly = poly_of(xs, q);
        g.type = type_string(xs);
        g.certificates.push_back(cert_admissible(g.poly, q));
        r.guarantee = g;
        r.exact = g.side == Side::MAX;
        return;
    }
    /* q = 2^(2r): d' = -2^(r+2) + 1 */
    std::int64_t dprime = 1 - (std::int64_t{ 1 } << (rr + 2));
    if (dprime != dec.dprime)
        throw InvariantViolation("d' for q = 2^(2r) disagrees with (m-1)^2 - 4q");
    Guarantee g = hoffmann_guarantee(r, m - 1, dprime);
    if (q == 4) {
        auto counts = cert_counts("klein_form_f4", 3);
        auto zeta = cert_zeta(counts.counts, q);
        g.certificates.push_back(counts);
        g.certificates.push_back(zeta);
        g.side = Side::MAX;
        g.attained = counts.counts[0];
        if (zeta.poly != g.poly)
            throw InvariantViolation("the F_4 Klein form does not have type [m-1,m-1,m-1]");
    }
    r.guarantee = g;
    r.exact = false;
}

void analyze_other(BoundReport & r)
{
    auto const & dec = r.dec;
    std::int64_t m = dec.m;
    r.improved_upper = r.serre_weil_upper;
    r.upper_source = "SERRE_WEIL";
    if (m % static_cast<std::int64_t>(dec.p) != 0)
        r.guarantee = hoffmann_guarantee(r, m, dec.d);
    else
        r.guarantee = hoffmann_guarantee(r, m - 1, dec.dprime);
    r.exact = r.guarantee->attained && *r.guarantee->attained == r.improved_upper;
}

std::vector<Mod2Matrix> frobenius_mod2(std::int64_t q, std::int64_t n)
{
    /* matrices over Z/4 with det = q and det + 1 - trace = n, reduced mod 2 */
    std::vector<Mod2Matrix> out;
    auto mod4 = [](std::int64_t v) { return ((v % 4) + 4) % 4; };
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c)
                for (int d = 0; d < 4; ++d) {
                    std::int64_t det = a * d - b * c;
                    if (mod4(det - q) != 0 || mod4(det + 1 - (a + d) - n) != 0)
                        continue;
                    Mod2Matrix m2{ a % 2, b % 2, c % 2, d % 2 };
                    if (std::find(out.begin(), out.end(), m2) == out.end())
                        out.push_back(m2);
                }
    std::sort(out.begin(), out.end(), [](auto const & x, auto const & y) {
        return std::tie(x.a, x.b, x.c, x.d) < std::tie(y.a, y.b, y.c, y.d);
    });
    return out;
}

std::optional<std::array<std::int64_t, 3>> find_witness(FieldPtr const & F, std::int64_t n)
{
    /* y^2 = x^3 + a x^2 + b x + c with n points and Frobenius fixing one 2-torsion point */
    for (auto c : F->elements())
        for (auto b : F->elements())
            for (auto a : F->elements()) {
                Weierstrass w{ F, F->zero(), a, F->zero(), b, c };
                if (weierstrass_discriminant(w).index == 0)
                    continue;
                if (count_weierstrass(w, 1) != n)
                    continue;
                if (two_torsion_action(w) != TwoTorsionAction::FixesExactly1)
                    continue;
                return std::array<std::int64_t, 3>{ a.index, b.index, c.index };
            }
    return std::nullopt;
}

} // namespace

std::string_view to_string(Construction c)
{
    switch (c) {
    case Construction::HOFFMANN_RANK3:
        return "HOFFMANN_RANK3";
    case Construction::GLUE_RANK2_PLUS_E:
        return "GLUE_RANK2_PLUS_E";
    case Construction::EXPLICIT_CURVE:
        return "EXPLICIT_CURVE";
    case Construction::IBUKIYAMA:
        return "IBUKIYAMA";
    case Construction::DATA:
        return "DATA";
    }
    return "?";
}

std::string_view to_string(ExclusionReason r)
{
    switch (r) {
    case ExclusionReason::NO_UNIMODULAR_INDECOMPOSABLE:
        return "NO_UNIMODULAR_INDECOMPOSABLE";
    case ExclusionReason::GENUS_TOO_LARGE_FOR_DEFECT1:
        return "GENUS_TOO_LARGE_FOR_DEFECT1";
    case ExclusionReason::NO_INDECOMPOSABLE_DISC2:
        return "NO_INDECOMPOSABLE_DISC2";
    case ExclusionReason::TRACE_INADMISSIBLE:
        return "TRACE_INADMISSIBLE";
    case ExclusionReason::COUNT_INADMISSIBLE:
        return "COUNT_INADMISSIBLE";
    }
    return "?";
}

std::string_view to_string(Side s)
{
    switch (s) {
    case Side::MAX:
        return "MAX";
    case Side::MIN:
        return "MIN";
    case Side::EITHER:
        return "EITHER";
    }
    return "?";
}

std::string_view to_string(Certificate::Kind k)
{
    using K = Certificate::Kind;
    switch (k) {
    case K::HOFFMANN_TABLE:
        return "HOFFMANN_TABLE";
    case K::ELLIPTIC_TRACE:
        return "ELLIPTIC_TRACE";
    case K::ADMISSIBILITY:
        return "ADMISSIBILITY";
    case K::RANK2_ENUMERATION:
        return "RANK2_ENUMERATION";
    case K::DEFECT2_TYPE_FORCED:
        return "DEFECT2_TYPE_FORCED";
    case K::POINT_COUNTS:
        return "POINT_COUNTS";
    case K::ZETA_FROM_COUNTS:
        return "ZETA_FROM_COUNTS";
    case K::IBUKIYAMA_FORMULA:
        return "IBUKIYAMA_FORMULA";
    case K::GLUE_FEASIBILITY:
        return "GLUE_FEASIBILITY";
    case K::HERMITIAN_FORM:
        return "HERMITIAN_FORM";
    case K::DIVISIBILITY:
        return "DIVISIBILITY";
    case K::CITED_THEOREM:
        return "CITED_THEOREM";
    case K::DATA:
        return "DATA";
    }
    return "?";
}

TwoTorsionAction Mod2Matrix::action() const
{
    int fixed = 0;
    for (auto [x, y] : { std::pair{ 1, 0 }, std::pair{ 0, 1 }, std::pair{ 1, 1 } }) {
        int fx = (a * x + b * y) % 2, fy = (c * x + d * y) % 2;
        if (fx == x && fy == y)
            ++fixed;
    }
    if (fixed == 3)
        return TwoTorsionAction::FixesAll3;
    return fixed == 1 ? TwoTorsionAction::FixesExactly1 : TwoTorsionAction::FixesNone;
}

BigInt ibukiyama_count(std::uint64_t p, unsigned r)
{
    if (p == 2)
        throw EvenPrime("the Ibukiyama count needs an odd prime");
    if (!is_prime(p))
        throw InputError(std::to_string(p) + " is not prime");
    if (r < 1)
        throw InputError("r must be positive");
    BigInt pr = big_pow(p, r);
    BigInt sign = (r % 2 == 1) ? 1 : -1;
    return 1 + pr * pr + sign * 6 * pr;
}

GlueFeasibility glue_feasibility_defect2(std::uint64_t q)
{
    SerreDecomposition dec = decompose(q);
    if (dec.is_square() || theorem_family(dec) != TheoremFamily::D4_8 || dec.q == 2)
        throw WrongFamily("q = " + std::to_string(q) + " is not in the d = -4, -8 family with q != 2");
    GlueFeasibility g;
    g.q = dec.q;
    g.m = dec.m;
    g.d = dec.d;
    for (auto const & cl : enumerate_reduced2(dec.d, 2))
        if (cl.indecomposability.indecomposable) {
            g.form = cl.form;
            break;
        }
    g.n_em = dec.q + 1 + dec.m;
    g.n_em2 = dec.q + 1 + dec.m - 2;
    g.n_em_is_2_mod_4 = g.n_em % 4 == 2;
    g.n_em2_is_0_mod_4 = g.n_em2 % 4 == 0;
    auto pp = dec.prime_power();
    g.traces_exist = elliptic_trace_exists(pp, -dec.m) && elliptic_trace_exists(pp, -(dec.m - 2));
    auto p = static_cast<std::int64_t>(dec.p);
    g.traces_prime_to_p = dec.m % p != 0 && (dec.m - 2) % p != 0;
    g.matrices_em = frobenius_mod2(dec.q, g.n_em);
    g.matrices_em2 = frobenius_mod2(dec.q, g.n_em2);
    g.identity_excluded_for_em = std::none_of(g.matrices_em.begin(), g.matrices_em.end(),
                                              [](auto const & x) {
                                                  return x.action() == TwoTorsionAction::FixesAll3;
                                              });
    g.fixes_one_available_for_em2 = std::any_of(
        g.matrices_em2.begin(), g.matrices_em2.end(),
        [](auto const & x) { return x.action() == TwoTorsionAction::FixesExactly1; });
    if (dec.q <= 128 && dec.p != 2) {
        auto F = std::make_shared<FiniteField>(static_cast<std::uint32_t>(dec.p), dec.e);
        g.witness_em = find_witness(F, g.n_em);
        g.witness_em2 = find_witness(F, g.n_em2);
    }
    bool witnesses_ok = dec.q > 128 || (g.witness_em && g.witness_em2);
    g.feasible = g.form && g.n_em_is_2_mod_4 && g.n_em2_is_0_mod_4 && g.traces_exist
        && g.traces_prime_to_p && g.identity_excluded_for_em && g.fixes_one_available_for_em2
        && dec.p != 2 && witnesses_ok;
    return g;
}

UnglueObstruction unglue_obstruction_defect2(std::uint64_t q)
{
    SerreDecomposition dec = decompose(q);
    if (dec.is_square() || theorem_family(dec) != TheoremFamily::D3_11)
        throw WrongFamily("q = " + std::to_string(q) + " is not in the d = -3, -11 family");
    UnglueObstruction u;
    u.q = dec.q;
    u.m = dec.m;
    u.d = dec.d;
    u.forced_type = { dec.m, dec.m, dec.m - 2 };
    u.divisibility = divisibility_report(q);
    for (auto const & t : u.divisibility.tags)
        if (t == "CAVEAT_P5")
            u.caveats.push_back(t);
    if (dec.q == 3) {
        u.type_forced = defect2_type_forced(dec);
        u.reason = "DATA";
        u.verdict = "NO_DEFECT_2";
        u.certificates.push_back(cert_data(10, "explicit formula bound N(C) <= 10 over F_3"));
        return u;
    }
    auto forced = cert_forced(dec);
    u.type_forced = forced.holds;
    u.certificates.push_back(forced);
    if (!u.type_forced) {
        u.verdict = "UNDECIDED";
        return u;
    }
    if (u.divisibility.p_divides_m_minus_2) {
        auto tr = cert_trace(dec, dec.m - 2);
        u.certificates.push_back(cert_divides(dec, dec.m - 2));
        u.certificates.push_back(tr);
        u.reason = "TRACE_INADMISSIBLE";
        u.verdict = tr.holds ? "UNDECIDED" : "NO_DEFECT_2";
        return u;
    }
    auto enumeration = cert_rank2(dec.d, 2);
    u.indecomposable_disc2_classes = enumeration.value;
    u.certificates.push_back(cert_divides(dec, dec.m));
    u.certificates.push_back(cert_divides(dec, dec.m - 2));
    u.certificates.push_back(enumeration);
    u.certificates.push_back(cert_cited(
        "unglueing: an indecomposable principal polarization on a threefold isogenous to "
        "E_m x E_m x E_{m-2} induces an indecomposable discriminant-2 hermitian form over R_d"));
    u.reason = "NO_INDECOMPOSABLE_DISC2";
    u.verdict = enumeration.value == 0 ? "NO_DEFECT_2" : "UNDECIDED";
    return u;
}

BoundReport analyze(std::uint64_t q)
{
    PrimePower pp = factor_prime_power(q);
    BoundReport r;
    r.dec = decompose(pp);
    r.family = r.dec.is_square() ? TheoremFamily::Other : theorem_family(r.dec);
    r.serre_weil_upper = r.dec.q + 1 + 3 * r.dec.m;
    r.divisibility = divisibility_report(q);
    for (auto const & t : r.divisibility.tags)
        if (t == "CAVEAT_P5")
            r.caveats.push_back(t);
    if (r.dec.is_square())
        analyze_square(r);
    else if (r.family == TheoremFamily::D3_11)
        analyze_d3_11(r);
    else if (r.family == TheoremFamily::D4_8)
        analyze_d4_8(r);
    else
        analyze_other(r);

    if (r.improved_upper > r.serre_weil_upper || r.improved_upper < r.dec.q + 1)
        throw InvariantViolation("upper bound out of range for q = " + std::to_string(q));
    if (r.guarantee) {
        auto dev = r.guarantee->deviation;
        if (dev > 3 * r.dec.m || dev < 3 * r.dec.m - 3)
            throw InvariantViolation("guarantee outside [3m-3, 3m] for q = " + std::to_string(q));
    }
    return r;
}

std::vector<BoundReport> analyze_range(std::uint64_t lo, std::uint64_t hi, unsigned jobs)
{
    if (lo > hi)
        throw InputError("empty range");
    std::vector<std::uint64_t> qs;
    for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n) {
        try {
            factor_prime_power(n);
            qs.push_back(n);
        } catch (NotAPrimePower const &) {
        }
    }
    std::vector<std::optional<BoundReport>> out(qs.size());
    std::vector<std::exception_ptr> errors(qs.size());
    std::atomic<std::size_t> next{ 0 };
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < qs.size();) {
            try {
                out[i] = analyze(qs[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    jobs = std::max(1u, jobs);
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto & t : pool)
        t.join();
    std::vector<BoundReport> reports;
    for (std::size_t i = 0; i < qs.size(); ++i) {
        if (errors[i])
            std::rethrow_exception(errors[i]);
        reports.push_back(std::move(*out[i]));
    }
    return reports;
}

RecheckResult recheck(Certificate const & c)
{
    using K = Certificate::Kind;
    RecheckResult res;
    auto expect = [&](bool ok, std::string what) {
        ++res.checked;
        if (!ok) {
            res.ok = false;
            res.failures.push_back(std::string(to_string(c.kind)) + ": " + what);
        }
    };
    switch (c.kind) {
    case K::HOFFMANN_TABLE:
        expect(hoffmann_exists(c.rank, c.d) == c.holds, "rank " + std::to_string(c.rank) + ", d = " + std::to_string(c.d));
        break;
    case K::ELLIPTIC_TRACE:
        expect(elliptic_trace_exists(factor_prime_power(c.q), c.t) == c.holds,
               "q = " + std::to_string(c.q) + ", t = " + std::to_string(c.t));
        break;
    case K::ADMISSIBILITY: {
        auto v = admissible(c.poly, c.q);
        expect(v.admissible == c.holds
                   && (v.violation ? v.violation->describe() : std::string()) == c.detail,
               "admissibility over F_" + std::to_string(c.q));
        break;
    }
    case K::RANK2_ENUMERATION: {
        std::int64_t n = 0;
        for (auto const & cl : enumerate_reduced2(c.d, c.disc))
            if (cl.indecomposability.indecomposable)
                ++n;
        expect(n == c.value, "indecomposable classes at d = " + std::to_string(c.d));
        break;
    }
    case K::DEFECT2_TYPE_FORCED:
        expect(defect2_type_forced(decompose(static_cast<std::uint64_t>(c.q))) == c.holds,
               "q = " + std::to_string(c.q));
        break;
    case K::POINT_COUNTS:
        expect(point_counts(reference_curve(c.curve), static_cast<unsigned>(c.counts.size()))
                   == c.counts,
               c.curve);
        break;
    case K::ZETA_FROM_COUNTS:
        expect(zeta_from_counts(c.counts, c.q).coefficients() == c.poly,
               "q = " + std::to_string(c.q));
        break;
    case K::IBUKIYAMA_FORMULA:
        expect(ibukiyama_count(static_cast<std::uint64_t>(c.q), static_cast<unsigned>(c.rank))
                   == static_cast<long>(c.value),
               "p = " + std::to_string(c.q));
        break;
    case K::GLUE_FEASIBILITY:
        expect(glue_feasibility_defect2(static_cast<std::uint64_t>(c.q)).feasible == c.holds,
               "q = " + std::to_string(c.q));
        break;
    case K::HERMITIAN_FORM: {
        auto f = HermitianForm2::from_entries(c.d, { c.form.at(0), c.form.at(1) },
                                              { OrderElement{ c.d, c.form.at(2), c.form.at(3) } });
        expect(f.is_positive_definite() == c.holds && f.disc() == c.value, to_string(f));
        break;
    }
    case K::DIVISIBILITY: {
        auto p = static_cast<std::int64_t>(factor_prime_power(c.q).p);
        expect((c.t % p == 0) == c.holds, "t = " + std::to_string(c.t));
        break;
    }
    case K::CITED_THEOREM:
    case K::DATA:
        ++res.imported;
        break;
    }
    return res;
}

RecheckResult recheck(BoundReport const & r)
{
    RecheckResult total;
    auto merge = [&](Certificate const & c) {
        auto one = recheck(c);
        total.ok = total.ok && one.ok;
        total.checked += one.checked;
        total.imported += one.imported;
        total.failures.insert(total.failures.end(), one.failures.begin(), one.failures.end());
    };
    for (auto const & c : r.certificates)
        merge(c);
    if (r.guarantee)
        for (auto const & c : r.guarantee->certificates)
            merge(c);
    for (auto const & e : r.exclusions)
        for (auto const & c : e.certificates)
            merge(c);
    return total;
}

} // namespace genus3
