#include "genus3/qorder.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

void check_same(OrderElement const & a, OrderElement const & b)
{
    if (a.d != b.d)
        throw MixedDiscriminants("elements of R_" + std::to_string(a.d) + " and R_"
                                 + std::to_string(b.d));
}

std::int64_t order_t(std::int64_t d)
{
    return (d % 4 == 0) ? 0 : 1;
}

std::int64_t order_n(std::int64_t d)
{
    return (d % 4 == 0) ? -d / 4 : (1 - d) / 4;
}

bool lex_less(OrderElement const & x, OrderElement const & y)
{
    return std::pair(x.u, x.v) < std::pair(y.u, y.v);
}

} // namespace

QuadOrder QuadOrder::make(std::int64_t d)
{
    std::int64_t r = ((d % 4) + 4) % 4;
    if (d >= 0 || (r != 0 && r != 1))
        throw InvalidDiscriminant("d = " + std::to_string(d)
                                  + " is not a negative discriminant");
    return { d, order_t(d), order_n(d) };
}

OrderElement order_zero(std::int64_t d)
{
    return { d, 0, 0 };
}

OrderElement order_one(std::int64_t d)
{
    return { d, 1, 0 };
}

OrderElement omega(std::int64_t d)
{
    return { d, 0, 1 };
}

OrderElement from_int(std::int64_t d, std::int64_t k)
{
    return { d, k, 0 };
}

OrderElement operator+(OrderElement const & a, OrderElement const & b)
{
    check_same(a, b);
    return { a.d, a.u + b.u, a.v + b.v };
}

OrderElement operator-(OrderElement const & a, OrderElement const & b)
{
    check_same(a, b);
    return { a.d, a.u - b.u, a.v - b.v };
}

OrderElement operator-(OrderElement const & a)
{
    return { a.d, -a.u, -a.v };
}

OrderElement operator*(OrderElement const & a, OrderElement const & b)
{
    check_same(a, b);
    std::int64_t t = order_t(a.d), n = order_n(a.d);
    std::int64_t bd = a.v * b.v;
    return { a.d, a.u * b.u - n * bd, a.u * b.v + a.v * b.u + t * bd };
}

OrderElement operator*(std::int64_t k, OrderElement const & a)
{
    return { a.d, k * a.u, k * a.v };
}

OrderElement conj(OrderElement const & a)
{
    return { a.d, a.u + order_t(a.d) * a.v, -a.v };
}

std::int64_t norm(OrderElement const & a)
{
    return a.u * a.u + order_t(a.d) * a.u * a.v + order_n(a.d) * a.v * a.v;
}

std::int64_t trace(OrderElement const & a)
{
    return 2 * a.u + order_t(a.d) * a.v;
}

std::optional<OrderElement> exact_div(OrderElement const & a, std::int64_t k)
{
    if (k == 0)
        throw DivisionByZero("division by zero in R_" + std::to_string(a.d));
    if (a.u % k != 0 || a.v % k != 0)
        return std::nullopt;
    return OrderElement{ a.d, a.u / k, a.v / k };
}

std::optional<OrderElement> exact_div(OrderElement const & a, OrderElement const & b)
{
    check_same(a, b);
    return exact_div(a * conj(b), norm(b));
}

std::vector<OrderElement> units(std::int64_t d)
{
    return elements_of_norm(d, 1);
}

std::vector<OrderElement> elements_of_norm(std::int64_t d, std::int64_t n)
{
    QuadOrder::make(d);
    std::vector<OrderElement> out;
    if (n < 0)
        return out;
    if (n == 0)
        return { order_zero(d) };
    /* 4 norm = (2u + t v)^2 + |d| v^2 */
    std::int64_t vmax = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(4 * n / -d))) + 1;
    std::int64_t t = order_t(d);
    for (std::int64_t v = -vmax; v <= vmax; ++v) {
        std::int64_t rest = 4 * n + d * v * v;
        if (rest < 0)
            continue;
        std::int64_t s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(rest)));
        if (s * s != rest)
            continue;
        for (std::int64_t w : { -s, s }) {
            if ((w - t * v) % 2 != 0)
                continue;
            OrderElement x{ d, (w - t * v) / 2, v };
            if (norm(x) == n && std::find(out.begin(), out.end(), x) == out.end())
                out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::optional<OrderElement> represents_norm(std::int64_t d, std::int64_t n)
{
    auto all = elements_of_norm(d, n);
    if (all.empty())
        return std::nullopt;
    return all.front();
}

std::int64_t class_number(std::int64_t d)
{
    QuadOrder::make(d);
    std::int64_t h = 0;
    std::int64_t D = -d;
    /* A <= sqrt(|d|/3) for reduced forms */
    for (std::int64_t A = 1; 3 * A * A <= D; ++A) {
        for (std::int64_t B = -A + 1; B <= A; ++B) {
            std::int64_t num = B * B - d;
            if (num % (4 * A) != 0)
                continue;
            std::int64_t C = num / (4 * A);
            if (C < A)
                continue;
            if (A == C && B < 0)
                continue;
            if (std::gcd(std::gcd(A, std::abs(B)), C) != 1)
                continue;
            ++h;
        }
    }
    return h;
}

Rational distance_sq(std::int64_t d, PlanePoint const & z, OrderElement const & r)
{
    Rational da = z.a - r.u;
    Rational db = z.b - r.v;
    Rational re = da + Rational(order_t(d)) * db / 2;
    Rational r2 = re * re + Rational(-d, 4) * db * db;
    r2.canonicalize();
    return r2;
}

Rational covering_radius_sq(std::int64_t d)
{
    QuadOrder::make(d);
    Rational D(-d);
    Rational c;
    if (d % 4 == 0)
        c = Rational(1, 4) + D / 16;
    else
        c = (D + 1) * (D + 1) / (16 * D);
    c.canonicalize();
    return c;
}

std::vector<OrderElement> elements_within(std::int64_t d, PlanePoint const & z,
                                          Rational const & r2)
{
    QuadOrder::make(d);
    std::vector<OrderElement> out;
    if (sgn(r2) < 0)
        return out;
    /* |d|/4 (b - v)^2 <= r2 and then |re| <= sqrt(r2 - ...) */
    double r = std::sqrt(r2.get_d());
    double vspan = 2.0 * r / std::sqrt(static_cast<double>(-d)) + 1.0;
    std::int64_t vlo = floor_of(z.b) - static_cast<std::int64_t>(vspan) - 1;
    std::int64_t vhi = ceil_of(z.b) + static_cast<std::int64_t>(vspan) + 1;
    std::int64_t t = order_t(d);
    for (std::int64_t v = vlo; v <= vhi; ++v) {
        Rational centre = z.a + Rational(t) * (z.b - v) / 2;
        std::int64_t ulo = floor_of(centre) - static_cast<std::int64_t>(r) - 1;
        std::int64_t uhi = ceil_of(centre) + static_cast<std::int64_t>(r) + 1;
        for (std::int64_t u = ulo; u <= uhi; ++u) {
            OrderElement x{ d, u, v };
            if (distance_sq(d, z, x) <= r2)
                out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end(), lex_less);
    return out;
}

std::vector<OrderElement> closest_elements(std::int64_t d, PlanePoint const & z)
{
    auto cand = elements_within(d, z, covering_radius_sq(d));
    if (cand.empty())
        throw InvariantViolation("no element of R_" + std::to_string(d)
                                 + " within the covering radius");
    Rational best = distance_sq(d, z, cand.front());
    for (auto const & x : cand)
        best = std::min(best, distance_sq(d, z, x));
    std::vector<OrderElement> out;
    for (auto const & x : cand)
        if (distance_sq(d, z, x) == best)
            out.push_back(x);
    return out;
}

OrderElement closest_element(std::int64_t d, PlanePoint const & z)
{
    return closest_elements(d, z).front();
}

PlanePoint quotient_point(OrderElement const & a, std::int64_t k)
{
    if (k == 0)
        throw DivisionByZero("division by zero in R_" + std::to_string(a.d));
    PlanePoint z{ Rational(a.u, 1) / k, Rational(a.v, 1) / k };
    z.a.canonicalize();
    z.b.canonicalize();
    return z;
}

} // namespace genus3
