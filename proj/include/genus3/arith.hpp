#ifndef GENUS3_ARITH_HPP
#define GENUS3_ARITH_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>

#include <gmpxx.h>

namespace genus3 {

using BigInt = mpz_class;
using Rational = mpq_class;

/* q = p^e with p prime. */
struct PrimePower
{
    std::uint64_t p = 0;
    unsigned e = 0;
    std::uint64_t q = 0;

    bool operator==(PrimePower const &) const = default;
};

std::ostream & operator<<(std::ostream & o, PrimePower const & pp);

/* Deterministic Miller-Rabin, exact for all 64-bit inputs. */
bool is_prime(std::uint64_t n);

/* Throws NotAPrimePower when n is not of the form p^e, e >= 1. */
PrimePower factor_prime_power(std::uint64_t n);

std::uint64_t isqrt(std::uint64_t n);
BigInt isqrt(BigInt const & n);

/* floor(n^(1/k)) for k >= 1 */
std::uint64_t iroot(std::uint64_t n, unsigned k);

bool is_perfect_square(BigInt const & n);
bool is_perfect_square(std::int64_t n);

BigInt big_pow(std::uint64_t base, unsigned exponent);

/* Checked p^e; throws std::overflow_error past 2^63 - 1. */
std::int64_t checked_pow(std::int64_t base, unsigned exponent);

std::int64_t floor_div(std::int64_t a, std::int64_t b);

inline std::int64_t to_int64(BigInt const & n)
{
    return static_cast<std::int64_t>(n.get_si());
}

std::int64_t floor_of(Rational const & x);
std::int64_t ceil_of(Rational const & x);

} // namespace genus3

#endif
