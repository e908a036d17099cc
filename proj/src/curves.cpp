#include "genus3/curves.hpp"

#include <string>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

struct Term
{
    FieldElement c;
    std::array<int, 3> exp;
};

using Homogeneous = std::vector<Term>;

std::uint64_t checked_order(FiniteField const & F, unsigned r, std::uint64_t limit)
{
    std::uint64_t n = 1;
    for (unsigned i = 0; i < r; ++i) {
        n *= F.order();
        if (n > limit)
            throw FieldTooLarge("F_" + std::to_string(F.order()) + "^" + std::to_string(r)
                                + " exceeds the enumeration limit of "
                                + std::to_string(limit));
    }
    return n;
}

/* Visit one representative of every point of P^2(F). */
template <class Fn>
void for_each_projective_point(FiniteField const & F, Fn && fn)
{
    auto els = F.elements();
    for (auto y : els)
        for (auto z : els)
            fn(F.one(), y, z);
    for (auto z : els)
        fn(F.zero(), F.one(), z);
    fn(F.zero(), F.zero(), F.one());
}

FieldElement eval_homogeneous(FiniteField const & F, Homogeneous const & h,
                              std::array<std::array<FieldElement, 5>, 3> const & pw)
{
    FieldElement s = F.zero();
    for (auto const & t : h) {
        if (t.c.index == 0)
            continue;
        FieldElement m = F.mul(t.c, F.mul(pw[0][t.exp[0]], F.mul(pw[1][t.exp[1]], pw[2][t.exp[2]])));
        s = F.add(s, m);
    }
    return s;
}

std::array<std::array<FieldElement, 5>, 3> powers(FiniteField const & F, FieldElement x,
                                                   FieldElement y, FieldElement z)
{
    std::array<std::array<FieldElement, 5>, 3> pw;
    FieldElement v[3] = { x, y, z };
    for (int i = 0; i < 3; ++i) {
        pw[i][0] = F.one();
        for (int k = 1; k < 5; ++k)
            pw[i][k] = F.mul(pw[i][k - 1], v[i]);
    }
    return pw;
}

Homogeneous quartic_terms(PlaneQuartic const & c, FieldEmbedding const & emb)
{
    Homogeneous h;
    for (std::size_t k = 0; k < 15; ++k)
        h.push_back({ emb(c.coefficients[k]), quartic_monomials[k] });
    return h;
}

void require_nonzero(PlaneQuartic const & c)
{
    for (auto x : c.coefficients)
        if (x.index != 0)
            return;
    throw ModelError("the quartic is identically zero");
}

void require_odd(FiniteField const & F, char const * what)
{
    if (F.characteristic() == 2)
        throw ModelError(std::string(what) + " requires odd characteristic");
}

} // namespace

std::string_view kind_name(CurveModel const & c)
{
    static constexpr std::string_view names[] = { "plane_quartic", "artin_schreier",
                                                  "weierstrass", "bielliptic" };
    return names[c.index()];
}

FieldPtr field_of(CurveModel const & c)
{
    return std::visit([](auto const & m) { return m.field; }, c);
}

std::int64_t count_plane_quartic(PlaneQuartic const & c, unsigned r)
{
    require_nonzero(c);
    checked_order(*c.field, r, max_quartic_field);
    auto emb = embed_in_extension(c.field, r);
    FiniteField const & T = *emb.target;
    Homogeneous h = quartic_terms(c, emb);
    std::int64_t n = 0;
    for_each_projective_point(T, [&](FieldElement x, FieldElement y, FieldElement z) {
        if (eval_homogeneous(T, h, powers(T, x, y, z)).index == 0)
            ++n;
    });
    return n;
}

bool quartic_is_smooth(PlaneQuartic const & c, unsigned kmax)
{
    require_nonzero(c);
    std::uint64_t size = c.field->order();
    for (unsigned k = 1; k <= kmax && size <= max_quartic_field; ++k, size *= c.field->order()) {
        auto emb = embed_in_extension(c.field, k);
        FiniteField const & T = *emb.target;
        Homogeneous h = quartic_terms(c, emb);
        std::array<Homogeneous, 3> partial;
        for (int v = 0; v < 3; ++v)
            for (auto const & t : h) {
                if (t.exp[v] == 0)
                    continue;
                Term d = t;
                d.c = T.mul(t.c, T.from_int(t.exp[v]));
                --d.exp[v];
                partial[v].push_back(d);
            }
        bool singular = false;
        for_each_projective_point(T, [&](FieldElement x, FieldElement y, FieldElement z) {
            if (singular)
                return;
            auto pw = powers(T, x, y, z);
            if (eval_homogeneous(T, h, pw).index != 0)
                return;
            for (auto const & p : partial)
                if (eval_homogeneous(T, p, pw).index != 0)
                    return;
            singular = true;
        });
        if (singular)
            return false;
    }
    return true;
}

int artin_schreier_genus(ArtinSchreier const & c)
{
    FieldPoly f = c.f;
    field_poly::trim(f);
    int deg = field_poly::degree(f);
    int p = static_cast<int>(c.field->characteristic());
    if (deg < 1)
        throw ModelError("y^p - y = constant is not a curve of positive genus");
    if (deg % p == 0)
        throw ModelError("p divides deg f; the model is not in standard form");
    return (p - 1) * (deg - 1) / 2;
}

std::int64_t count_artin_schreier(ArtinSchreier const & c, unsigned r)
{
    artin_schreier_genus(c);
    checked_order(*c.field, r, FiniteField::max_order);
    auto emb = embed_in_extension(c.field, r);
    FiniteField const & T = *emb.target;
    FieldPoly f = emb(c.f);
    std::vector<std::int64_t> fibre(T.order(), 0);
    for (auto y : T.elements())
        ++fibre[T.sub(T.frobenius(y), y).index];
    std::int64_t n = 1;
    for (auto x : T.elements())
        n += fibre[field_poly::eval(T, f, x).index];
    return n;
}

FieldElement weierstrass_discriminant(Weierstrass const & c)
{
    FiniteField const & F = *c.field;
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    auto mul = [&](FieldElement a, FieldElement b) { return F.mul(a, b); };
    auto add = [&](FieldElement a, FieldElement b) { return F.add(a, b); };
    auto sub = [&](FieldElement a, FieldElement b) { return F.sub(a, b); };
    FieldElement b2 = add(mul(c.a1, c.a1), mul(k(4), c.a2));
    FieldElement b4 = add(mul(k(2), c.a4), mul(c.a1, c.a3));
    FieldElement b6 = add(mul(c.a3, c.a3), mul(k(4), c.a6));
    FieldElement b8 = sub(add(add(mul(mul(c.a1, c.a1), c.a6), mul(k(4), mul(c.a2, c.a6))),
                              mul(c.a2, mul(c.a3, c.a3))),
                          add(mul(c.a1, mul(c.a3, c.a4)), mul(c.a4, c.a4)));
    /* -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6 */
    FieldElement D = F.neg(mul(mul(b2, b2), b8));
    D = sub(D, mul(k(8), mul(b4, mul(b4, b4))));
    D = sub(D, mul(k(27), mul(b6, b6)));
    D = add(D, mul(k(9), mul(b2, mul(b4, b6))));
    return D;
}

std::int64_t count_weierstrass(Weierstrass const & c, unsigned r)
{
    if (weierstrass_discriminant(c).index == 0)
        throw SingularCurve("the Weierstrass equation has zero discriminant");
    checked_order(*c.field, r, FiniteField::max_order);
    auto emb = embed_in_extension(c.field, r);
    FiniteField const & T = *emb.target;
    FieldElement a1 = emb(c.a1), a2 = emb(c.a2), a3 = emb(c.a3), a4 = emb(c.a4), a6 = emb(c.a6);
    std::int64_t n = 1;
    bool char2 = T.characteristic() == 2;
    for (auto x : T.elements()) {
        /* y^2 + b y = rhs */
        FieldElement b = T.add(T.mul(a1, x), a3);
        FieldElement x2 = T.mul(x, x);
        FieldElement rhs = T.add(T.add(T.mul(x2, x), T.mul(a2, x2)), T.add(T.mul(a4, x), a6));
        if (!char2) {
            FieldElement disc = T.add(T.mul(b, b), T.mul(T.from_int(4), rhs));
            n += 1 + T.quadratic_character(disc);
        } else if (b.index == 0) {
            n += 1;
        } else {
            FieldElement w = T.div(rhs, T.mul(b, b));
            n += T.absolute_trace(w) == 0 ? 2 : 0;
        }
    }
    return n;
}

std::int64_t weierstrass_trace(Weierstrass const & c)
{
    return static_cast<std::int64_t>(c.field->order()) + 1 - count_weierstrass(c, 1);
}

std::string_view to_string(TwoTorsionAction a)
{
    switch (a) {
    case TwoTorsionAction::FixesAll3:
        return "FixesAll3";
    case TwoTorsionAction::FixesExactly1:
        return "FixesExactly1";
    case TwoTorsionAction::FixesNone:
        return "FixesNone";
    }
    return "?";
}

TwoTorsionAction two_torsion_action(Weierstrass const & c)
{
    FiniteField const & F = *c.field;
    require_odd(F, "the 2-division cubic");
    if (weierstrass_discriminant(c).index == 0)
        throw SingularCurve("the Weierstrass equation has zero discriminant");
    auto k = [&](std::int64_t n) { return F.from_int(n); };
    FieldElement b2 = F.add(F.mul(c.a1, c.a1), F.mul(k(4), c.a2));
    FieldElement b4 = F.add(F.mul(k(2), c.a4), F.mul(c.a1, c.a3));
    FieldElement b6 = F.add(F.mul(c.a3, c.a3), F.mul(k(4), c.a6));
    FieldPoly cubic{ b6, F.mul(k(2), b4), b2, k(4) };
    switch (field_poly::roots(F, cubic).size()) {
    case 3:
        return TwoTorsionAction::FixesAll3;
    case 1:
        return TwoTorsionAction::FixesExactly1;
    case 0:
        return TwoTorsionAction::FixesNone;
    default:
        throw InvariantViolation("2-division cubic of a smooth curve has a double root");
    }
}

int double_cover_genus(FieldPoly const & P)
{
    FieldPoly f = P;
    field_poly::trim(f);
    int deg = field_poly::degree(f);
    return (deg + 1) / 2 - 1;
}

std::int64_t count_double_cover(FiniteField const & F, FieldPoly const & P)
{
    require_odd(F, "y^2 = P(x)");
    FieldPoly f = P;
    field_poly::trim(f);
    int deg = field_poly::degree(f);
    if (deg < 1 || !field_poly::is_squarefree(F, f))
        throw ModelError("y^2 = P(x) needs P squarefree of positive degree");
    std::int64_t n = 0;
    for (auto x : F.elements())
        n += 1 + F.quadratic_character(field_poly::eval(F, f, x));
    if (deg % 2 == 1)
        n += 1;
    else if (F.is_square(f.back()))
        n += 2;
    return n;
}

BiellipticQuotients bielliptic_quotients(BiellipticProduct const & c)
{
    FiniteField const & F = *c.field;
    require_odd(F, "a bielliptic fiber product");
    FieldPoly f = c.f, g = c.g;
    field_poly::trim(f);
    field_poly::trim(g);
    if (field_poly::degree(f) < 1 || field_poly::degree(g) < 1)
        throw ModelError("f and g must be nonconstant");
    if (!field_poly::is_squarefree(F, f) || !field_poly::is_squarefree(F, g))
        throw ModelError("f and g must be squarefree");
    FieldPoly G = field_poly::gcd(F, f, g);
    FieldPoly h = field_poly::mul(F, field_poly::divmod(F, f, G).first,
                                  field_poly::divmod(F, g, G).first);
    field_poly::trim(h);
    if (field_poly::degree(h) < 1)
        throw ModelError("f g is a square up to a constant");
    int genus = double_cover_genus(f) + double_cover_genus(g) + double_cover_genus(h);
    if (genus != 3)
        throw ModelError("the fiber product has genus " + std::to_string(genus) + ", not 3");
    return { f, g, h };
}

std::int64_t count_bielliptic_product(BiellipticProduct const & c, unsigned r)
{
    auto quo = bielliptic_quotients(c);
    std::uint64_t qr = checked_order(*c.field, r, FiniteField::max_order);
    auto emb = embed_in_extension(c.field, r);
    FiniteField const & T = *emb.target;
    return count_double_cover(T, emb(quo.f)) + count_double_cover(T, emb(quo.g))
        + count_double_cover(T, emb(quo.h)) - 2 * static_cast<std::int64_t>(qr + 1);
}

int curve_genus(CurveModel const & c)
{
    struct
    {
        int operator()(PlaneQuartic const &) const { return 3; }
        int operator()(ArtinSchreier const & m) const { return artin_schreier_genus(m); }
        int operator()(Weierstrass const &) const { return 1; }
        int operator()(BiellipticProduct const & m) const
        {
            bielliptic_quotients(m);
            return 3;
        }
    } visitor;
    return std::visit(visitor, c);
}

std::vector<std::int64_t> point_counts(CurveModel const & c, unsigned rmax)
{
    if (rmax < 1)
        throw InputError("rmax must be positive");
    std::vector<std::int64_t> out;
    for (unsigned r = 1; r <= rmax; ++r) {
        struct
        {
            unsigned r;
            std::int64_t operator()(PlaneQuartic const & m) const { return count_plane_quartic(m, r); }
            std::int64_t operator()(ArtinSchreier const & m) const { return count_artin_schreier(m, r); }
            std::int64_t operator()(Weierstrass const & m) const { return count_weierstrass(m, r); }
            std::int64_t operator()(BiellipticProduct const & m) const
            {
                return count_bielliptic_product(m, r);
            }
        } visitor{ r };
        out.push_back(std::visit(visitor, c));
    }
    return out;
}

RealWeilPoly zeta_from_counts(std::span<const std::int64_t> counts, std::int64_t q)
{
    if (counts.size() < 3)
        throw InputError("genus 3 needs N_1, N_2, N_3");
    BigInt Q = static_cast<long>(q);
    BigInt S[4];
    BigInt qr = 1;
    for (int r = 1; r <= 3; ++r) {
        qr *= Q;
        S[r] = qr + 1 - static_cast<long>(counts[r - 1]);
    }
    /* power sums of the x_i */
    BigInt P1 = -S[1];
    BigInt P2 = S[2] + 6 * Q;
    BigInt P3 = 3 * Q * P1 - S[3];
    BigInt e1 = P1;
    BigInt t2 = e1 * P1 - P2;
    if (t2 % 2 != 0)
        throw NonIntegralSolution("counts do not come from an integral genus-3 type");
    BigInt e2 = t2 / 2;
    BigInt t3 = e2 * P1 - e1 * P2 + P3;
    if (t3 % 3 != 0)
        throw NonIntegralSolution("counts do not come from an integral genus-3 type");
    BigInt e3 = t3 / 3;
    std::vector<BigInt> coeffs{ -e3, e2, -e1, 1 };
    try {
        RealWeilPoly h(coeffs, q);
        auto back = counts_from_type(h, static_cast<int>(counts.size()));
        for (std::size_t i = 0; i < counts.size(); ++i)
            if (back[i] != static_cast<long>(counts[i]))
                throw NonIntegralSolution("N_" + std::to_string(i + 1)
                                          + " disagrees with the type fixed by N_1..N_3");
        return h;
    } catch (RootOutOfWeilRange const & e) {
        throw NonIntegralSolution(std::string("counts give ") + e.what());
    }
}

} // namespace genus3

namespace genus3 {

namespace {

PlaneQuartic quartic_from_monomials(FieldPtr const & F,
                                    std::initializer_list<std::array<int, 3>> monomials)
{
    PlaneQuartic c{ F, {} };
    for (auto const & m : monomials)
        for (std::size_t k = 0; k < 15; ++k)
            if (quartic_monomials[k] == m)
                c.coefficients[k] = F->one();
    return c;
}

} // namespace

CurveModel reference_curve(std::string_view name)
{
    if (name == "artin_schreier_f3") {
        auto F = std::make_shared<FiniteField>(3, 1);
        return ArtinSchreier{ F, { F->zero(), F->zero(), F->from_int(-1), F->zero(), F->one() } };
    }
    if (name == "quartic_f2") {
        auto F = std::make_shared<FiniteField>(2, 1);
        return quartic_from_monomials(F, { { 3, 1, 0 }, { 0, 3, 1 }, { 1, 0, 3 }, { 2, 2, 0 },
                                           { 0, 2, 2 }, { 2, 0, 2 }, { 2, 1, 1 }, { 1, 2, 1 } });
    }
    if (name == "klein_f4") {
        auto F = std::make_shared<FiniteField>(2, 2);
        return quartic_from_monomials(F, { { 3, 1, 0 }, { 0, 3, 1 }, { 1, 0, 3 } });
    }
    if (name == "klein_form_f4") {
        auto F = std::make_shared<FiniteField>(2, 2);
        return quartic_from_monomials(F, { { 4, 0, 0 }, { 0, 4, 0 }, { 0, 0, 4 }, { 2, 2, 0 },
                                           { 0, 2, 2 }, { 2, 0, 2 }, { 2, 1, 1 }, { 1, 2, 1 },
                                           { 1, 1, 2 } });
    }
    if (name == "bielliptic_f27") {
        auto F = std::make_shared<FiniteField>(3, std::vector<std::uint32_t>{ 1, 0, 2, 1 });
        FieldElement a = F->generator();
        return BiellipticProduct{
            F,
            { F->zero(), F->from_int(2), F->from_int(2), F->one() },
            { F->zero(), F->pow(a, 8), F->mul(F->from_int(2), F->pow(a, 4)), F->from_int(2) },
        };
    }
    throw InputError("unknown reference curve '" + std::string(name) + "'");
}

std::vector<std::string_view> reference_curve_names()
{
    return { "artin_schreier_f3", "quartic_f2", "klein_f4", "klein_form_f4", "bielliptic_f27" };
}

} // namespace genus3
