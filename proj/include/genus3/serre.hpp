#ifndef GENUS3_SERRE_HPP
#define GENUS3_SERRE_HPP

#include <cstdint>
#include <string_view>

#include "genus3/arith.hpp"

namespace genus3 {

/*
 * q = x^2 + x + a with x = floor(sqrt(q)) and -x <= a <= x,
 * m = floor(2 sqrt(q)), d = m^2 - 4q and dprime = (m-1)^2 - 4q.
 */
struct SerreDecomposition
{
    std::int64_t q = 0;
    std::uint64_t p = 0;
    unsigned e = 0;
    std::int64_t x = 0;
    std::int64_t a = 0;
    std::int64_t m = 0;
    std::int64_t d = 0;
    std::int64_t dprime = 0;

    PrimePower prime_power() const
    {
        return { p, e, static_cast<std::uint64_t>(q) };
    }
    bool is_square() const { return d == 0; }

    bool operator==(SerreDecomposition const &) const = default;
};

/* Supported range: q < 2^60. */
SerreDecomposition decompose(PrimePower const & pp);
SerreDecomposition decompose(std::uint64_t q);

enum class TheoremFamily
{
    D3_11, /* q = x^2+x+a, a in {1,3}, a <= x: d in {-3,-11} */
    D4_8,  /* q = x^2+b, b in {1,2}, b <= x: d in {-4,-8} */
    Other,
};

std::string_view to_string(TheoremFamily f);

TheoremFamily theorem_family(SerreDecomposition const & dec);

/*
 * Whether the fractional part of 2 sqrt(q) is below sqrt(3) - 1, decided in
 * exact integer arithmetic. Throws PerfectSquareInput when q is a square.
 */
bool defect2_type_forced(SerreDecomposition const & dec);

} // namespace genus3

#endif
