#include "genus3/dioph.hpp"

#include <set>
#include <sstream>

#include "genus3/error.hpp"
#include "genus3/serre.hpp"

namespace genus3 {

namespace {

void require_base(std::uint64_t p, unsigned e_max)
{
    if (p < 2)
        throw InputError("base must be at least 2");
    if (e_max < 1)
        throw InputError("e_max must be at least 1");
}

} // namespace

bool DiophFamily::satisfied(unsigned e, BigInt const & x) const
{
    if (x < 0)
        return false;
    BigInt lhs = big_pow(kind == Kind::FivePowerOdd ? 5 : p, e);
    switch (kind) {
    case Kind::PowEqQuadratic:
        return lhs == x * x + x + c;
    case Kind::PowEqSquarePlusC:
        return lhs == x * x + c;
    case Kind::FivePowerOdd: {
        if (e < 3 || e % 2 == 0 || lhs != x * x + x + 3)
            return false;
        BigInt r = (2 * x - 1) % 5;
        return !congruence || r == 0;
    }
    }
    return false;
}

std::string DiophFamily::describe() const
{
    std::ostringstream o;
    switch (kind) {
    case Kind::PowEqQuadratic:
        o << p << "^e = x^2 + x + " << c;
        break;
    case Kind::PowEqSquarePlusC:
        o << p << "^e = x^2 + " << c;
        break;
    case Kind::FivePowerOdd:
        o << "5^e = x^2 + x + 3, e odd >= 3";
        if (congruence)
            o << ", 2x = 1 mod 5";
        break;
    }
    return o.str();
}

SolutionSet::SolutionSet(DiophFamily family, std::vector<DiophSolution> solutions,
                         unsigned e_max, bool exhaustive)
    : family_(std::move(family))
    , solutions_(std::move(solutions))
    , e_max_(e_max)
    , exhaustive_(exhaustive)
{
    for (auto const & s : solutions_)
        if (s.e > e_max_ || !family_.satisfied(s.e, s.x))
            throw InvariantViolation("(" + std::to_string(s.e) + ", " + s.x.get_str()
                                     + ") does not solve " + family_.describe());
}

SolutionSet solve_pow_eq_quadratic(std::uint64_t p, std::int64_t a, unsigned e_max)
{
    require_base(p, e_max);
    std::vector<DiophSolution> out;
    BigInt pe = 1;
    for (unsigned e = 1; e <= e_max; ++e) {
        pe *= static_cast<unsigned long>(p);
        /* (2x + 1)^2 = 4 p^e - (4a - 1) */
        BigInt n = 4 * pe - (4 * BigInt(static_cast<long>(a)) - 1);
        if (n < 0 || !is_perfect_square(n))
            continue;
        BigInt s = isqrt(n);
        out.push_back({ e, (s - 1) / 2 });
    }
    return SolutionSet({ DiophFamily::Kind::PowEqQuadratic, p, a, false }, std::move(out),
                       e_max, true);
}

SolutionSet solve_x2_plus_c(std::int64_t c, std::uint64_t p, unsigned e_max)
{
    require_base(p, e_max);
    std::vector<DiophSolution> out;
    BigInt pe = 1;
    for (unsigned e = 1; e <= e_max; ++e) {
        pe *= static_cast<unsigned long>(p);
        BigInt n = pe - static_cast<long>(c);
        if (n < 0 || !is_perfect_square(n))
            continue;
        out.push_back({ e, isqrt(n) });
    }
    return SolutionSet({ DiophFamily::Kind::PowEqSquarePlusC, p, c, false }, std::move(out),
                       e_max, true);
}

bool mod_obstruction(std::uint64_t p, std::int64_t c, std::uint64_t modulus)
{
    if (modulus < 2)
        throw InputError("modulus must be at least 2");
    std::set<std::uint64_t> powers;
    std::uint64_t v = p % modulus;
    /* the sequence p^e mod M is eventually periodic; stop at the first repeat */
    while (powers.insert(v).second)
        v = static_cast<std::uint64_t>((static_cast<unsigned __int128>(v) * p) % modulus);
    auto M = static_cast<std::int64_t>(modulus);
    std::int64_t cm = ((c % M) + M) % M;
    for (std::int64_t x = 0; x < M; ++x) {
        auto r = static_cast<std::uint64_t>(
            (static_cast<__int128>(x) * x + x + cm) % M);
        if (powers.count(r))
            return false;
    }
    return true;
}

SolutionSet check_5e_family(unsigned e_max, bool require_congruence)
{
    if (e_max < 1)
        throw InputError("e_max must be at least 1");
    std::vector<DiophSolution> out;
    for (unsigned e = 3; e <= e_max; e += 2) {
        BigInt n = 4 * big_pow(5, e) - 11;
        if (!is_perfect_square(n))
            continue;
        BigInt x = (isqrt(n) - 1) / 2;
        BigInt r = (2 * x - 1) % 5;
        if (require_congruence && r != 0)
            continue;
        out.push_back({ e, x });
    }
    return SolutionSet({ DiophFamily::Kind::FivePowerOdd, 5, 3, require_congruence },
                       std::move(out), e_max, true);
}

DivisibilityReport divisibility_report(std::uint64_t q)
{
    SerreDecomposition dec = decompose(q);
    DivisibilityReport r;
    r.q = dec.q;
    r.p = dec.p;
    r.m = dec.m;
    auto p = static_cast<std::int64_t>(dec.p);
    r.p_divides_m = dec.m % p == 0;
    r.p_divides_m_minus_1 = (dec.m - 1) % p == 0;
    r.p_divides_m_minus_2 = (dec.m - 2) % p == 0;
    if (dec.q == 2)
        r.tags.emplace_back("EXCEPTION_Q2");
    if (dec.q == 3)
        r.tags.emplace_back("EXCEPTION_Q3");
    if (dec.q == 343)
        r.tags.emplace_back("EXCEPTION_Q343");
    if (dec.p == 5 && dec.e >= 3 && dec.e % 2 == 1)
        r.tags.emplace_back("CAVEAT_P5");
    return r;
}

} // namespace genus3
