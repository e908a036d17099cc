#ifndef GENUS3_QORDER_HPP
#define GENUS3_QORDER_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "genus3/arith.hpp"

namespace genus3 {

/*
 * The order R_d = Z[w] of discriminant d < 0, with w^2 = t w - n:
 * d = 0 mod 4: w = sqrt(d)/2, t = 0, n = |d|/4;
 * d = 1 mod 4: w = (1 + sqrt(d))/2, t = 1, n = (1 - d)/4.
 */
struct QuadOrder
{
    std::int64_t d = -4;
    std::int64_t t = 0;
    std::int64_t n = 1;

    /* Throws InvalidDiscriminant. */
    static QuadOrder make(std::int64_t d);

    bool operator==(QuadOrder const &) const = default;
};

/* u + v w in R_d. */
struct OrderElement
{
    std::int64_t d = -4;
    std::int64_t u = 0;
    std::int64_t v = 0;

    bool is_zero() const { return u == 0 && v == 0; }
    bool operator==(OrderElement const &) const = default;
};

OrderElement order_zero(std::int64_t d);
OrderElement order_one(std::int64_t d);
OrderElement omega(std::int64_t d);
OrderElement from_int(std::int64_t d, std::int64_t k);

/* All binary operations throw MixedDiscriminants on a d mismatch. */
OrderElement operator+(OrderElement const & a, OrderElement const & b);
OrderElement operator-(OrderElement const & a, OrderElement const & b);
OrderElement operator-(OrderElement const & a);
OrderElement operator*(OrderElement const & a, OrderElement const & b);
OrderElement operator*(std::int64_t k, OrderElement const & a);

OrderElement conj(OrderElement const & a);
std::int64_t norm(OrderElement const & a);
std::int64_t trace(OrderElement const & a);

/* a / b when it lies in R_d. */
std::optional<OrderElement> exact_div(OrderElement const & a, OrderElement const & b);
/* a / k when it lies in R_d. */
std::optional<OrderElement> exact_div(OrderElement const & a, std::int64_t k);

/* The elements of norm 1. */
std::vector<OrderElement> units(std::int64_t d);

/* All elements of norm n, sorted by (u, v). */
std::vector<OrderElement> elements_of_norm(std::int64_t d, std::int64_t n);

/* A witness of norm n when one exists (the smallest by (u, v)). */
std::optional<OrderElement> represents_norm(std::int64_t d, std::int64_t n);

/* Number of reduced primitive forms (A, B, C) with B^2 - 4AC = d. */
std::int64_t class_number(std::int64_t d);

/* A point a + b w of the plane in exact w-coordinates. */
struct PlanePoint
{
    Rational a;
    Rational b;
};

/* |z - r|^2 for r in R_d. */
Rational distance_sq(std::int64_t d, PlanePoint const & z, OrderElement const & r);

/* Squared covering radius of the lattice R_d in C. */
Rational covering_radius_sq(std::int64_t d);

/* All nearest elements to z, sorted by (u, v). */
std::vector<OrderElement> closest_elements(std::int64_t d, PlanePoint const & z);
/* The first of closest_elements. */
OrderElement closest_element(std::int64_t d, PlanePoint const & z);

/* All r with |z - r|^2 <= r2, sorted by (u, v). */
std::vector<OrderElement> elements_within(std::int64_t d, PlanePoint const & z,
                                          Rational const & r2);

/* a / k as a plane point. */
PlanePoint quotient_point(OrderElement const & a, std::int64_t k);

} // namespace genus3

#endif
