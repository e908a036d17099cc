#ifndef GENUS3_WEIL_HPP
#define GENUS3_WEIL_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "genus3/arith.hpp"

namespace genus3 {

enum class WeilRange
{
    Ok,
    NotRealRooted,
    OutOfRange,
};

/*
 * Root location of a monic integer polynomial (coefficients low degree
 * first): all roots real, and all in [-2 sqrt q, 2 sqrt q]. Decided exactly
 * with Sturm sequences; the interval test runs on H(s) = h(sqrt s) h(-sqrt s)
 * so that the endpoint is the integer 4q.
 */
WeilRange weil_range(std::span<const BigInt> coefficients, std::int64_t q);

/*
 * A zeta type [x_1, ..., x_g] stored as h(t) = prod (t - x_i). Irrational
 * types are given through their integer polynomial.
 */
class RealWeilPoly
{
  public:
    /* Throws RootOutOfWeilRange. */
    RealWeilPoly(std::vector<BigInt> coefficients, std::int64_t q);

    int genus() const { return static_cast<int>(coefficients_.size()) - 1; }
    std::int64_t q() const { return q_; }
    std::vector<BigInt> const & coefficients() const { return coefficients_; }

    /* The roots, when they are all integers, in decreasing order. */
    std::optional<std::vector<std::int64_t>> integer_roots() const;

    /* "t^3 - 4*t^2 + 3*t + 1" */
    std::string to_string() const;

    bool operator==(RealWeilPoly const &) const = default;

  private:
    std::vector<BigInt> coefficients_;
    std::int64_t q_;
};

/* h(t) = prod (t - x_i); throws RootOutOfWeilRange when x_i^2 > 4q. */
RealWeilPoly type_to_poly(std::span<const std::int64_t> xs, std::int64_t q);

/* (-1)^g h(-t): the type of the quadratic twist. */
RealWeilPoly quadratic_twist(RealWeilPoly const & h);

/*
 * N_r = q^r + 1 - sum_i (alpha_i^r + conj(alpha_i)^r), r = 1..rmax, where
 * alpha_i + conj(alpha_i) = -x_i and alpha_i conj(alpha_i) = q. Works on any
 * monic integer polynomial through its power sums.
 */
std::vector<BigInt> counts_from_coefficients(std::span<const BigInt> coefficients,
                                             std::int64_t q, int rmax);
std::vector<BigInt> counts_from_type(RealWeilPoly const & h, int rmax);

struct Violation
{
    enum class Kind
    {
        NotRealRooted,
        RootOutOfRange,
        NegativeCount,   /* N_r < 0 */
        SubfieldExceeds, /* N_s > N_r with s | r */
    };

    Kind kind;
    int r = 0;
    int s = 0;
    BigInt n_r;
    BigInt n_s;

    std::string describe() const;
};

struct AdmissibilityVerdict
{
    bool admissible = false;
    std::optional<Violation> violation;
    std::vector<BigInt> counts;
};

constexpr int default_admissibility_rmax = 6;

AdmissibilityVerdict admissible(std::span<const BigInt> coefficients,
                                std::int64_t q,
                                int rmax = default_admissibility_rmax);
AdmissibilityVerdict admissible(RealWeilPoly const & h,
                                int rmax = default_admissibility_rmax);

/* Waterhouse: does some elliptic curve over F_q have trace t? */
bool elliptic_trace_exists(PrimePower const & pp, std::int64_t t);

} // namespace genus3

#endif
