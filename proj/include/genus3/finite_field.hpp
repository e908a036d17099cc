#ifndef GENUS3_FINITE_FIELD_HPP
#define GENUS3_FINITE_FIELD_HPP

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace genus3 {

/*
 * An element of F_{p^e}. The index packs the coefficient vector in the
 * modulus basis {1, a, ..., a^(e-1)} as base-p digits (constant term
 * least significant), which makes the representation canonical.
 */
struct FieldElement
{
    std::uint32_t index = 0;

    auto operator<=>(FieldElement const &) const = default;
};

class FiniteField
{
  public:
    static constexpr std::uint64_t max_order = 1u << 20;

    /* Uses the lexicographically smallest monic irreducible of degree e. */
    FiniteField(std::uint32_t p, unsigned e);

    /* modulus: monic, low degree first. Throws ReducibleModulus. */
    FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const { return p_; }
    unsigned degree() const { return e_; }
    std::uint32_t order() const { return q_; }
    std::vector<std::uint32_t> const & modulus() const { return modulus_; }

    FieldElement zero() const { return { 0 }; }
    FieldElement one() const { return { 1 }; }
    /* The class of the polynomial variable, a root of the modulus. */
    FieldElement generator() const;
    FieldElement primitive_element() const { return { exp_[1] }; }
    FieldElement from_int(std::int64_t n) const;
    FieldElement from_coefficients(std::span<const std::int64_t> c) const;
    std::vector<std::uint32_t> coefficients(FieldElement x) const;

    FieldElement add(FieldElement a, FieldElement b) const;
    FieldElement sub(FieldElement a, FieldElement b) const;
    FieldElement neg(FieldElement a) const;
    FieldElement mul(FieldElement a, FieldElement b) const
    {
        if (a.index == 0 || b.index == 0)
            return { 0 };
        std::uint32_t s = log_[a.index] + log_[b.index];
        if (s >= q_ - 1)
            s -= q_ - 1;
        return { exp_[s] };
    }
    FieldElement inv(FieldElement a) const;
    FieldElement div(FieldElement a, FieldElement b) const;
    FieldElement pow(FieldElement a, std::uint64_t k) const;
    FieldElement frobenius(FieldElement a) const { return pow(a, p_); }

    bool is_square(FieldElement a) const;
    /* -1, 0, 1; requires odd characteristic */
    int quadratic_character(FieldElement a) const;
    /* absolute trace down to F_p, as an integer in [0, p) */
    std::uint32_t absolute_trace(FieldElement a) const;

    std::vector<FieldElement> elements() const;

    bool operator==(FiniteField const & o) const
    {
        return p_ == o.p_ && modulus_ == o.modulus_;
    }

  private:
    void build_tables();

    std::uint32_t p_;
    unsigned e_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> pow_p_; /* p^i for i <= e */
};

using FieldPtr = std::shared_ptr<const FiniteField>;

/* Dense polynomials over F_p, low degree first (used for moduli). */
namespace fp_poly {
bool is_irreducible(std::vector<std::uint32_t> const & f, std::uint32_t p);
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned e);
} // namespace fp_poly

/* Polynomials with coefficients in a FiniteField, low degree first. */
using FieldPoly = std::vector<FieldElement>;

namespace field_poly {
void trim(FieldPoly & f);
int degree(FieldPoly const & f);
FieldElement eval(FiniteField const & F, FieldPoly const & f, FieldElement x);
FieldPoly mul(FiniteField const & F, FieldPoly const & a, FieldPoly const & b);
FieldPoly derivative(FiniteField const & F, FieldPoly const & f);
/* returns {quotient, remainder} */
std::pair<FieldPoly, FieldPoly> divmod(FiniteField const & F, FieldPoly a,
                                       FieldPoly const & b);
FieldPoly gcd(FiniteField const & F, FieldPoly a, FieldPoly b);
FieldPoly make_monic(FiniteField const & F, FieldPoly f);
bool is_squarefree(FiniteField const & F, FieldPoly const & f);
std::vector<FieldElement> roots(FiniteField const & F, FieldPoly const & f);
} // namespace field_poly

/* The embedding of F_{p^e} into F_{p^(e r)}. */
struct FieldEmbedding
{
    FieldPtr source;
    FieldPtr target;
    std::vector<FieldElement> image;

    FieldElement operator()(FieldElement x) const { return image[x.index]; }
    FieldPoly operator()(FieldPoly const & f) const;
};

FieldEmbedding embed_in_extension(FieldPtr const & base, unsigned r);

} // namespace genus3

#endif
