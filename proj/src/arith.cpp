#include "genus3/arith.hpp"

#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "genus3/error.hpp"

namespace genus3 {

std::ostream & operator<<(std::ostream & o, PrimePower const & pp)
{
    return o << pp.p << "^" << pp.e;
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m)
{
    std::uint64_t r = 1 % m;
    b %= m;
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod(r, b, m);
        b = mulmod(b, b, m);
    }
    return r;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t sp : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % sp == 0)
            return n == sp;
    }
    std::uint64_t d = n - 1;
    unsigned s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (unsigned i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

std::uint64_t iroot(std::uint64_t n, unsigned k)
{
    if (k == 0)
        throw std::invalid_argument("iroot: k must be positive");
    if (k == 1 || n < 2)
        return n;
    auto r = static_cast<std::uint64_t>(
            std::pow(static_cast<long double>(n), 1.0L / k));
    /* r^k <= n, checked with saturation */
    auto pow_le = [n, k](std::uint64_t b) {
        u128 acc = 1;
        for (unsigned i = 0; i < k; ++i) {
            acc *= b;
            if (acc > n)
                return false;
        }
        return true;
    };
    while (r > 0 && !pow_le(r))
        --r;
    while (pow_le(r + 1))
        ++r;
    return r;
}

PrimePower factor_prime_power(std::uint64_t n)
{
    if (n < 2)
        throw NotAPrimePower(std::to_string(n) + " is not a prime power");
    for (unsigned e = 63; e >= 1; --e) {
        std::uint64_t r = iroot(n, e);
        if (r < 2)
            continue;
        u128 acc = 1;
        for (unsigned i = 0; i < e; ++i)
            acc *= r;
        if (acc == n && is_prime(r))
            return { r, e, n };
    }
    throw NotAPrimePower(std::to_string(n) + " is not a prime power");
}

std::uint64_t isqrt(std::uint64_t n)
{
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
    while (r > 0 && static_cast<u128>(r) * r > n)
        --r;
    while (static_cast<u128>(r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

BigInt isqrt(BigInt const & n)
{
    if (sgn(n) < 0)
        throw std::domain_error("isqrt of a negative integer");
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    return r;
}

bool is_perfect_square(BigInt const & n)
{
    if (sgn(n) < 0)
        return false;
    BigInt r = isqrt(n);
    return r * r == n;
}

bool is_perfect_square(std::int64_t n)
{
    if (n < 0)
        return false;
    std::uint64_t r = isqrt(static_cast<std::uint64_t>(n));
    return r * r == static_cast<std::uint64_t>(n);
}

BigInt big_pow(std::uint64_t base, unsigned exponent)
{
    BigInt r;
    BigInt b(static_cast<unsigned long>(base));
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exponent);
    return r;
}

std::int64_t checked_pow(std::int64_t base, unsigned exponent)
{
    std::int64_t r = 1;
    for (unsigned i = 0; i < exponent; ++i) {
        if (__builtin_mul_overflow(r, base, &r))
            throw std::overflow_error("checked_pow overflow");
    }
    return r;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b)
{
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

std::int64_t floor_of(Rational const & x)
{
    BigInt r;
    mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return to_int64(r);
}

std::int64_t ceil_of(Rational const & x)
{
    BigInt r;
    mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return to_int64(r);
}

} // namespace genus3
