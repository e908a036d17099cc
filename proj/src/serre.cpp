#include "genus3/serre.hpp"

#include <string>

#include "genus3/error.hpp"

namespace genus3 {

SerreDecomposition decompose(PrimePower const & pp)
{
    if (pp.q >= (std::uint64_t(1) << 60))
        throw InputError("q too large for the decomposition (need q < 2^60)");
    SerreDecomposition dec;
    dec.q = static_cast<std::int64_t>(pp.q);
    dec.p = pp.p;
    dec.e = pp.e;
    dec.x = static_cast<std::int64_t>(isqrt(pp.q));
    dec.a = dec.q - dec.x * dec.x - dec.x;
    dec.m = static_cast<std::int64_t>(isqrt(4 * pp.q));
    dec.d = dec.m * dec.m - 4 * dec.q;
    dec.dprime = (dec.m - 1) * (dec.m - 1) - 4 * dec.q;

    /* the closed-form cases must agree with the direct computation */
    std::int64_t m_case = dec.a <= 0 ? 2 * dec.x : 2 * dec.x + 1;
    std::int64_t d_case = dec.a <= 0 ? -4 * (dec.x + dec.a) : 1 - 4 * dec.a;
    if (dec.a < -dec.x || dec.a > dec.x || m_case != dec.m || d_case != dec.d
        || dec.dprime != dec.d - 2 * dec.m + 1)
        throw InvariantViolation("inconsistent decomposition of q="
                                 + std::to_string(dec.q));
    return dec;
}

SerreDecomposition decompose(std::uint64_t q)
{
    return decompose(factor_prime_power(q));
}

std::string_view to_string(TheoremFamily f)
{
    switch (f) {
    case TheoremFamily::D3_11:
        return "D3_11";
    case TheoremFamily::D4_8:
        return "D4_8";
    case TheoremFamily::Other:
        break;
    }
    return "OTHER";
}

TheoremFamily theorem_family(SerreDecomposition const & dec)
{
    if ((dec.a == 1 || dec.a == 3) && dec.a <= dec.x)
        return TheoremFamily::D3_11;
    if (dec.a <= 0) {
        std::int64_t b = dec.a + dec.x;
        if ((b == 1 || b == 2) && b <= dec.x)
            return TheoremFamily::D4_8;
    }
    return TheoremFamily::Other;
}

bool defect2_type_forced(SerreDecomposition const & dec)
{
    if (dec.is_square())
        throw PerfectSquareInput("q=" + std::to_string(dec.q)
                                 + " is a perfect square");
    /*
     * {2 sqrt q} < sqrt3 - 1  <=>  2 sqrt q - (m-1) < sqrt3
     *   <=> L := 4q + (m-1)^2 - 3 < 4 (m-1) sqrt q      (both sides squared,
     *                                                    left side positive)
     *   <=> L <= 0  or  L^2 < 16 (m-1)^2 q
     */
    BigInt q = static_cast<long>(dec.q);
    BigInt m1 = static_cast<long>(dec.m - 1);
    BigInt L = 4 * q + m1 * m1 - 3;
    if (sgn(L) <= 0)
        return true;
    return L * L < 16 * m1 * m1 * q;
}

} // namespace genus3
