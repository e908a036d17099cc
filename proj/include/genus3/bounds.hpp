#ifndef GENUS3_BOUNDS_HPP
#define GENUS3_BOUNDS_HPP

#include <cstdint>
#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "genus3/curves.hpp"
#include "genus3/dioph.hpp"
#include "genus3/hermite.hpp"
#include "genus3/serre.hpp"
#include "genus3/weil.hpp"

namespace genus3 {

enum class Construction
{
    HOFFMANN_RANK3,
    GLUE_RANK2_PLUS_E,
    EXPLICIT_CURVE,
    IBUKIYAMA,
    DATA,
};

enum class ExclusionReason
{
    NO_UNIMODULAR_INDECOMPOSABLE, /* defect 0 needs an indecomposable unimodular rank-3 form */
    GENUS_TOO_LARGE_FOR_DEFECT1,  /* defect 1 forces g <= 2 */
    NO_INDECOMPOSABLE_DISC2,
    TRACE_INADMISSIBLE,
    COUNT_INADMISSIBLE,
};

enum class Side
{
    MAX,
    MIN,
    EITHER,
};

std::string_view to_string(Construction c);
std::string_view to_string(ExclusionReason r);
std::string_view to_string(Side s);

/*
 * A checkable sub-result. recheck() recomputes it from the stored inputs;
 * CITED_THEOREM and DATA entries record imported statements and are not
 * recomputed.
 */
struct Certificate
{
    enum class Kind
    {
        HOFFMANN_TABLE,        /* hoffmann_exists(rank, d) == holds */
        ELLIPTIC_TRACE,        /* elliptic_trace_exists(q, t) == holds */
        ADMISSIBILITY,         /* admissible(poly, q) == holds, detail = violation */
        RANK2_ENUMERATION,     /* value = number of indecomposable classes (d, disc) */
        DEFECT2_TYPE_FORCED,   /* defect2_type_forced(q) == holds */
        POINT_COUNTS,          /* point_counts(reference_curve(curve)) == counts */
        ZETA_FROM_COUNTS,      /* zeta_from_counts(counts, q) == poly */
        IBUKIYAMA_FORMULA,     /* ibukiyama_count(p, rank) == value */
        GLUE_FEASIBILITY,      /* glue_feasibility_defect2(q).feasible == holds */
        HERMITIAN_FORM,        /* form (d, entries) positive definite with disc == value */
        DIVISIBILITY,          /* p | t == holds */
        CITED_THEOREM,
        DATA,
    };

    Kind kind;
    std::int64_t q = 0;
    std::int64_t d = 0;
    int rank = 0;
    std::int64_t t = 0;
    std::int64_t disc = 0;
    std::int64_t value = 0;
    bool holds = false;
    std::vector<BigInt> poly;
    std::vector<std::int64_t> counts;
    std::string curve;
    std::vector<std::int64_t> form; /* rank-2 form: lambda, mu, alpha.u, alpha.v */
    std::string detail;
};

std::string_view to_string(Certificate::Kind k);

struct Guarantee
{
    /* a curve with |N - (q+1)| = deviation exists */
    std::int64_t deviation = 0;
    Side side = Side::EITHER;
    /* the certificate type on the maximum side, as a real Weil polynomial */
    std::vector<BigInt> poly;
    std::string type;
    Construction construction = Construction::DATA;
    /* the attained N when the side is known */
    std::optional<std::int64_t> attained;
    std::vector<Certificate> certificates;
};

struct Exclusion
{
    std::vector<BigInt> poly;
    std::string type;
    ExclusionReason reason;
    std::string detail;
    std::vector<Certificate> certificates;
};

struct BoundReport
{
    SerreDecomposition dec;
    TheoremFamily family = TheoremFamily::Other;
    std::int64_t serre_weil_upper = 0;
    std::int64_t improved_upper = 0;
    std::string upper_source;
    /* improved_upper is N_q(3) */
    bool exact = false;
    std::optional<Guarantee> guarantee;
    std::vector<Certificate> certificates;
    std::vector<Exclusion> exclusions;
    std::vector<std::string> caveats;
    DivisibilityReport divisibility;
};

/* Throws NotAPrimePower. */
BoundReport analyze(std::uint64_t q);

/* Reports for the prime powers in [lo, hi], in increasing order. */
std::vector<BoundReport> analyze_range(std::uint64_t lo, std::uint64_t hi, unsigned jobs = 1);

struct RecheckResult
{
    bool ok = true;
    std::size_t checked = 0;
    std::size_t imported = 0;
    std::vector<std::string> failures;
};

RecheckResult recheck(Certificate const & c);
RecheckResult recheck(BoundReport const & r);

/* 1 + p^(2r) + (-1)^(r+1) 6 p^r. Throws EvenPrime. */
BigInt ibukiyama_count(std::uint64_t p, unsigned r);

/* Frobenius mod 2 on E[2] with its action on the three nonzero points. */
struct Mod2Matrix
{
    int a, b, c, d;
    TwoTorsionAction action() const;
    bool operator==(Mod2Matrix const &) const = default;
};

struct GlueFeasibility
{
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t d = 0;
    /* an indecomposable discriminant-2 rank-2 form over R_d */
    std::optional<HermitianForm2> form;
    std::int64_t n_em = 0;  /* q + 1 + m */
    std::int64_t n_em2 = 0; /* q + 1 + m - 2 */
    bool n_em_is_2_mod_4 = false;
    bool n_em2_is_0_mod_4 = false;
    bool traces_exist = false;
    bool traces_prime_to_p = false;
    /* mod-2 reductions of Frobenius matrices over Z/4 compatible with N */
    std::vector<Mod2Matrix> matrices_em;
    std::vector<Mod2Matrix> matrices_em2;
    bool identity_excluded_for_em = false;
    bool fixes_one_available_for_em2 = false;
    /* explicit y^2 = x^3 + a x^2 + b x + c witnesses, searched for q <= 128 */
    std::optional<std::array<std::int64_t, 3>> witness_em;
    std::optional<std::array<std::int64_t, 3>> witness_em2;
    bool feasible = false;
};

/* Throws WrongFamily unless q is in the d = -4, -8 family with q != 2. */
GlueFeasibility glue_feasibility_defect2(std::uint64_t q);

struct UnglueObstruction
{
    std::int64_t q = 0;
    std::int64_t m = 0;
    std::int64_t d = 0;
    bool type_forced = false;
    std::vector<std::int64_t> forced_type;
    std::int64_t indecomposable_disc2_classes = 0;
    DivisibilityReport divisibility;
    /* NO_INDECOMPOSABLE_DISC2, TRACE_INADMISSIBLE or DATA (q = 3) */
    std::string reason;
    /* "NO_DEFECT_2" or "UNDECIDED" */
    std::string verdict;
    std::vector<std::string> caveats;
    std::vector<Certificate> certificates;
};

/* Throws WrongFamily unless q is in the d = -3, -11 family. */
UnglueObstruction unglue_obstruction_defect2(std::uint64_t q);

} // namespace genus3

#endif
