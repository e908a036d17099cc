#ifndef GENUS3_IO_HPP
#define GENUS3_IO_HPP

#include <filesystem>
#include <string>

#include "json.hpp"

#include "genus3/bounds.hpp"
#include "genus3/curves.hpp"
#include "genus3/dioph.hpp"
#include "genus3/hermite.hpp"
#include "genus3/weil.hpp"

namespace genus3 {

using Json = nlohmann::ordered_json;

Json to_json(BigInt const & n);
Json to_json(std::vector<BigInt> const & poly);
Json to_json(SerreDecomposition const & dec);
Json to_json(Certificate const & c);
Json to_json(Exclusion const & e);
Json to_json(Guarantee const & g);
Json to_json(BoundReport const & r);
Json to_json(GlueFeasibility const & g);
Json to_json(UnglueObstruction const & u);
Json to_json(SolutionSet const & s);
Json to_json(AdmissibilityVerdict const & v);
Json to_json(IndecomposabilityVerdict const & v);

/* {"d", "rank", "diagonal": [..], "off_diagonal": [[u, v], ..]} with the
   strictly lower entries in the order (1,0), (2,0), (2,1). */
template <std::size_t N>
Json form_to_json(HermitianForm<N> const & f);

/* Throws ParseError on a malformed record. */
HermitianForm2 form2_from_json(Json const & j);
HermitianForm3 form3_from_json(Json const & j);

/*
 * Curve files:
 *   {"kind": "plane_quartic" | "artin_schreier" | "weierstrass" | "bielliptic",
 *    "field": {"p": 3, "e": 3, "modulus": [1, 0, 2, 1]},
 *    ...coefficients}
 * plane_quartic: "coefficients" as 15 entries in quartic_monomials order,
 *   or an object keyed by monomials such as "x^2*y*z";
 * artin_schreier: "f" (low degree first), y^p - y = f(x);
 * weierstrass: "a1", "a2", "a3", "a4", "a6" (missing entries are 0);
 * bielliptic: "f", "g".
 * A field element is an integer, a coefficient list in the basis 1, a, a^2,
 * ... or a string such as "2a^4 + a + 1". Throws ParseError.
 */
CurveModel curve_from_json(Json const & j);
CurveModel load_curve_file(std::filesystem::path const & path);
Json curve_to_json(CurveModel const & c);

FieldElement parse_field_element(FiniteField const & F, Json const & j);

/* "path = value" lines, one per scalar, in document order. */
std::string to_text(Json const & j);

} // namespace genus3

#endif
