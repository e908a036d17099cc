#ifndef GENUS3_DIOPH_HPP
#define GENUS3_DIOPH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "genus3/arith.hpp"

namespace genus3 {

/* The equation a search family solves for (e, x), x >= 0. */
struct DiophFamily
{
    enum class Kind
    {
        PowEqQuadratic,  /* p^e = x^2 + x + c */
        PowEqSquarePlusC, /* p^e = x^2 + c */
        FivePowerOdd,    /* 5^e = x^2 + x + 3, e odd >= 3, optionally 2x = 1 mod 5 */
    };

    Kind kind;
    std::uint64_t p = 0;
    std::int64_t c = 0;
    bool congruence = false;

    bool satisfied(unsigned e, BigInt const & x) const;
    std::string describe() const;
    bool operator==(DiophFamily const &) const = default;
};

struct DiophSolution
{
    unsigned e;
    BigInt x;

    bool operator==(DiophSolution const &) const = default;
};

class SolutionSet
{
  public:
    /* Re-substitutes every solution; throws InvariantViolation on a bad one. */
    SolutionSet(DiophFamily family, std::vector<DiophSolution> solutions, unsigned e_max,
                bool exhaustive);

    DiophFamily const & family() const { return family_; }
    std::vector<DiophSolution> const & solutions() const { return solutions_; }
    unsigned e_max() const { return e_max_; }
    /* every exponent up to e_max in the family was tested */
    bool exhaustive() const { return exhaustive_; }
    bool empty() const { return solutions_.empty(); }

  private:
    DiophFamily family_;
    std::vector<DiophSolution> solutions_;
    unsigned e_max_;
    bool exhaustive_;
};

/* p^e = x^2 + x + a for 1 <= e <= e_max. Throws InputError. */
SolutionSet solve_pow_eq_quadratic(std::uint64_t p, std::int64_t a, unsigned e_max);

/* p^e = x^2 + c for 1 <= e <= e_max. Throws InputError. */
SolutionSet solve_x2_plus_c(std::int64_t c, std::uint64_t p, unsigned e_max);

/* {p^e mod M} and {x^2 + x + c mod M} are disjoint, which rules out
   p^e = x^2 + x + c for every e >= 1. */
bool mod_obstruction(std::uint64_t p, std::int64_t c, std::uint64_t modulus);

/* 5^e = x^2 + x + 3 over odd 3 <= e <= e_max, with 2x = 1 mod 5 unless
   relaxed. */
SolutionSet check_5e_family(unsigned e_max, bool require_congruence = true);

struct DivisibilityReport
{
    std::int64_t q = 0;
    std::uint64_t p = 0;
    std::int64_t m = 0;
    bool p_divides_m = false;
    bool p_divides_m_minus_1 = false;
    bool p_divides_m_minus_2 = false;
    /* EXCEPTION_Q2, EXCEPTION_Q3, EXCEPTION_Q343, CAVEAT_P5 */
    std::vector<std::string> tags;
};

DivisibilityReport divisibility_report(std::uint64_t q);

} // namespace genus3

#endif
