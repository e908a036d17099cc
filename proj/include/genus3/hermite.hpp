#ifndef GENUS3_HERMITE_HPP
#define GENUS3_HERMITE_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genus3/qorder.hpp"

namespace genus3 {

template <std::size_t N>
using OrderVector = std::array<OrderElement, N>;

template <std::size_t N>
using OrderMatrix = std::array<OrderVector<N>, N>;

/*
 * A hermitian form of rank N over R_d with Gram matrix M_ij = H(e_i, e_j),
 * H linear in the first argument. Stored in full; M_ji = conj(M_ij).
 */
template <std::size_t N>
class HermitianForm
{
  public:
    /* Throws InvalidDiscriminant, MixedDiscriminants, or InputError when
       the matrix is not hermitian. */
    explicit HermitianForm(OrderMatrix<N> gram);

    /* Diagonal plus the strictly lower entries H(e_i, e_j), i > j, in the
       order (1,0), (2,0), (2,1). */
    static HermitianForm from_entries(std::int64_t d,
                                      std::array<std::int64_t, N> const & diagonal,
                                      std::vector<OrderElement> const & lower);

    std::int64_t d() const { return gram_[0][0].d; }
    OrderMatrix<N> const & gram() const { return gram_; }
    OrderElement const & entry(int i, int j) const { return gram_[i][j]; }
    std::int64_t diagonal(int i) const { return gram_[i][i].u; }
    std::vector<OrderElement> lower_entries() const;

    /* Exact determinant (a rational integer). */
    std::int64_t disc() const;
    bool is_positive_definite() const;

    /* H(x, y) and H(x) = H(x, x). */
    OrderElement pairing(OrderVector<N> const & x, OrderVector<N> const & y) const;
    std::int64_t value(OrderVector<N> const & x) const;

    /* Gram matrix of the basis given by the rows of U: U M U^*. */
    HermitianForm transform(OrderMatrix<N> const & U) const;

    /* The integral quadratic form 2 H on Z^(2N), basis e_0, w e_0, e_1, ... */
    std::array<std::array<std::int64_t, 2 * N>, 2 * N> real_gram() const;

    bool operator==(HermitianForm const &) const = default;

  private:
    OrderMatrix<N> gram_;
};

using HermitianForm2 = HermitianForm<2>;
using HermitianForm3 = HermitianForm<3>;

template <std::size_t N>
struct ShortVector
{
    OrderVector<N> x;
    std::int64_t value;
};

/* All nonzero x with H(x) <= bound (both x and -x). Throws
   NotPositiveDefinite. */
template <std::size_t N>
std::vector<ShortVector<N>> short_vectors(HermitianForm<N> const & f, std::int64_t bound);

template <std::size_t N>
std::int64_t minimum(HermitianForm<N> const & f);

template <std::size_t N>
std::optional<OrderVector<N>> represents_one(HermitianForm<N> const & f);

/* Rv is an orthogonal summand of the form. */
template <std::size_t N>
bool spans_orthogonal_summand(HermitianForm<N> const & f, OrderVector<N> const & v);

struct IndecomposabilityVerdict
{
    bool indecomposable = false;
    /* false when h(d) > 1: summands need not be free, so only free rank-1
       summands were searched */
    bool complete = true;
    /* for a decomposable form, a vector spanning a summand */
    std::vector<OrderElement> witness;
};

template <std::size_t N>
IndecomposabilityVerdict is_indecomposable(HermitianForm<N> const & f);

struct UnimodularMatrix2
{
    OrderMatrix<2> rows;
};

/* A second row making {v, w} a basis of R^2. Throws UnsupportedCase when
   none is found (non-euclidean order and brute force exhausted) and
   InputError when v is not primitive. */
OrderVector<2> complete_basis(OrderVector<2> const & v);

struct Reduction2
{
    HermitianForm2 form;
    /* form = f.transform(basis) */
    OrderMatrix<2> basis;
};

/*
 * The canonical reduced representative: lambda = min of f, mu >= lambda,
 * alpha = H(e2, e1) with N(alpha) <= c lambda^2 and, among all bases whose
 * first vector is a minimal vector, the smallest (N(alpha), u, v).
 * Throws NotPositiveDefinite.
 */
Reduction2 reduce2(HermitianForm2 const & f);

struct ReducedClass
{
    HermitianForm2 form;
    IndecomposabilityVerdict indecomposability;
};

/* One representative per class of positive definite rank-2 forms of the
   given discriminant. Throws IncompleteForDiscriminant when the covering
   radius of R_d is >= 1. */
std::vector<ReducedClass> enumerate_reduced2(std::int64_t d, std::int64_t disc);

struct SearchResult3
{
    std::vector<HermitianForm3> forms;
    /* false when stopped by the limit */
    bool exhausted = true;
    /* false when h(d) > 1 */
    bool indecomposability_certified = true;
};

/*
 * Unimodular positive definite rank-3 forms not representing 1, with
 * 2 <= lambda_1 <= lambda_2 <= lambda_3 <= entry_bound and off-diagonal
 * norms <= entry_bound. limit = 0 means no limit.
 */
SearchResult3 search_unimodular_indecomposable3(std::int64_t d, std::int64_t entry_bound,
                                                std::size_t limit = 0);

/* Existence of an indecomposable unimodular form of rank 2 or 3 over
   R_d; false exactly for the exceptional discriminants. */
bool hoffmann_exists(int rank, std::int64_t d);

std::string to_string(OrderElement const & x);

template <std::size_t N>
std::string to_string(HermitianForm<N> const & f);

extern template class HermitianForm<2>;
extern template class HermitianForm<3>;

} // namespace genus3

#endif
