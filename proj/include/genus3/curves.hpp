#ifndef GENUS3_CURVES_HPP
#define GENUS3_CURVES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "genus3/finite_field.hpp"
#include "genus3/weil.hpp"

namespace genus3 {

/* Exponents (i, j, k) of x^i y^j z^k, in coefficient order. */
inline constexpr std::array<std::array<int, 3>, 15> quartic_monomials{ {
    { 4, 0, 0 }, { 3, 1, 0 }, { 3, 0, 1 }, { 2, 2, 0 }, { 2, 1, 1 },
    { 2, 0, 2 }, { 1, 3, 0 }, { 1, 2, 1 }, { 1, 1, 2 }, { 1, 0, 3 },
    { 0, 4, 0 }, { 0, 3, 1 }, { 0, 2, 2 }, { 0, 1, 3 }, { 0, 0, 4 },
} };

struct PlaneQuartic
{
    FieldPtr field;
    std::array<FieldElement, 15> coefficients{};
};

/* y^p - y = f(x) in characteristic p. */
struct ArtinSchreier
{
    FieldPtr field;
    FieldPoly f;
};

/* y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6 */
struct Weierstrass
{
    FieldPtr field;
    FieldElement a1, a2, a3, a4, a6;
};

/* The fiber product of y1^2 = f(x) and y2^2 = g(x), odd characteristic. */
struct BiellipticProduct
{
    FieldPtr field;
    FieldPoly f;
    FieldPoly g;
};

using CurveModel = std::variant<PlaneQuartic, ArtinSchreier, Weierstrass, BiellipticProduct>;

std::string_view kind_name(CurveModel const & c);
FieldPtr field_of(CurveModel const & c);

/* Plane quartics are enumerated for q^r <= this. */
inline constexpr std::uint64_t max_quartic_field = 1024;

/* Projective points over F_{q^r}. Throws FieldTooLarge, ModelError. */
std::int64_t count_plane_quartic(PlaneQuartic const & c, unsigned r);

/* No common zero of F and its partials over F_{q^k}, for every k <= kmax
   with q^k <= max_quartic_field. */
bool quartic_is_smooth(PlaneQuartic const & c, unsigned kmax = 6);

/* (p-1)(deg f - 1)/2; throws ModelError when f is constant or p | deg f. */
int artin_schreier_genus(ArtinSchreier const & c);

/* Affine points plus the single point over x = infinity. */
std::int64_t count_artin_schreier(ArtinSchreier const & c, unsigned r);

FieldElement weierstrass_discriminant(Weierstrass const & c);

/* Throws SingularCurve. */
std::int64_t count_weierstrass(Weierstrass const & c, unsigned r);
std::int64_t weierstrass_trace(Weierstrass const & c);

enum class TwoTorsionAction
{
    FixesAll3,
    FixesExactly1,
    FixesNone,
};

std::string_view to_string(TwoTorsionAction a);

/* Frobenius on E[2] from the roots of the 2-division cubic. Requires odd
   characteristic; throws SingularCurve, ModelError. */
TwoTorsionAction two_torsion_action(Weierstrass const & c);

/* Points on the smooth model of y^2 = P(x) over the field of P, P squarefree
   of degree >= 1, odd characteristic. */
std::int64_t count_double_cover(FiniteField const & F, FieldPoly const & P);

/* ceil(deg / 2) - 1 */
int double_cover_genus(FieldPoly const & P);

struct BiellipticQuotients
{
    FieldPoly f;
    FieldPoly g;
    /* (f/G)(g/G) with G = gcd(f, g) */
    FieldPoly h;
};

/* Throws ModelError unless f, g are squarefree, fg is not a square and the
   three quotient genera add up to 3. */
BiellipticQuotients bielliptic_quotients(BiellipticProduct const & c);

/* N(E_f) + N(E_g) + N(E_h) - 2 (q^r + 1). */
std::int64_t count_bielliptic_product(BiellipticProduct const & c, unsigned r);

int curve_genus(CurveModel const & c);

/* N_1, ..., N_rmax */
std::vector<std::int64_t> point_counts(CurveModel const & c, unsigned rmax);

/*
 * The genus-3 real Weil polynomial whose counts are N_1, N_2, N_3; any
 * further entries are checked against the result. Throws
 * NonIntegralSolution when no such polynomial exists.
 */
RealWeilPoly zeta_from_counts(std::span<const std::int64_t> counts, std::int64_t q);

/*
 * Built-in models:
 *   artin_schreier_f3  y^3 - y = x^4 - x^2 over F_3
 *   quartic_f2         x^3y+y^3z+z^3x+x^2y^2+y^2z^2+z^2x^2+x^2yz+xy^2z over F_2
 *   klein_f4           x^3y+y^3z+z^3x over F_4
 *   klein_form_f4      x^4+y^4+z^4+x^2y^2+y^2z^2+z^2x^2+xyz(x+y+z) over F_4
 *   bielliptic_f27     y^2 = x^3+2x^2+2x, y^2 = 2x^3+2a^4x^2+a^8x over
 *                      F_27 = F_3[a]/(a^3+2a^2+1)
 * Throws InputError for an unknown name.
 */
CurveModel reference_curve(std::string_view name);
std::vector<std::string_view> reference_curve_names();

} // namespace genus3

#endif
