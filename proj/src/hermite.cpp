#include "genus3/hermite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

template <std::size_t N>
OrderElement det_sub(OrderMatrix<N> const & m, std::array<int, N> const & rows,
                     std::array<int, N> const & cols, int k)
{
    /* determinant of the k x k submatrix on rows[0..k) x cols[0..k) */
    std::int64_t d = m[0][0].d;
    if (k == 0)
        return order_one(d);
    if (k == 1)
        return m[rows[0]][cols[0]];
    OrderElement acc = order_zero(d);
    for (int j = 0; j < k; ++j) {
        std::array<int, N> sub_rows{}, sub_cols{};
        for (int i = 1; i < k; ++i)
            sub_rows[i - 1] = rows[i];
        for (int i = 0, c = 0; i < k; ++i)
            if (i != j)
                sub_cols[c++] = cols[i];
        OrderElement term = m[rows[0]][cols[j]] * det_sub<N>(m, sub_rows, sub_cols, k - 1);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

template <std::size_t N>
std::int64_t leading_minor(OrderMatrix<N> const & m, int k)
{
    std::array<int, N> idx{};
    for (int i = 0; i < int(N); ++i)
        idx[i] = i;
    OrderElement r = det_sub<N>(m, idx, idx, k);
    if (r.v != 0)
        throw InvariantViolation("hermitian minor is not rational");
    return r.u;
}


} // namespace

template <std::size_t N>
HermitianForm<N>::HermitianForm(OrderMatrix<N> gram)
    : gram_(gram)
{
    std::int64_t d = gram_[0][0].d;
    QuadOrder::make(d);
    for (int i = 0; i < int(N); ++i)
        for (int j = 0; j < int(N); ++j) {
            if (gram_[i][j].d != d)
                throw MixedDiscriminants("form entries over different orders");
            if (!(gram_[j][i] == conj(gram_[i][j])))
                throw InputError("matrix is not hermitian");
        }
}

template <std::size_t N>
HermitianForm<N> HermitianForm<N>::from_entries(std::int64_t d,
                                                std::array<std::int64_t, N> const & diagonal,
                                                std::vector<OrderElement> const & lower)
{
    if (static_cast<int>(lower.size()) != int(N * (N - 1) / 2))
        throw InputError("wrong number of off-diagonal entries");
    OrderMatrix<N> m{};
    std::size_t k = 0;
    for (int i = 0; i < int(N); ++i) {
        m[i][i] = from_int(d, diagonal[i]);
        for (int j = 0; j < i; ++j) {
            OrderElement a = lower[k++];
            if (a.d != d)
                throw MixedDiscriminants("off-diagonal entry over a different order");
            m[i][j] = a;
            m[j][i] = conj(a);
        }
    }
    return HermitianForm(m);
}

template <std::size_t N>
std::vector<OrderElement> HermitianForm<N>::lower_entries() const
{
    std::vector<OrderElement> out;
    for (int i = 0; i < int(N); ++i)
        for (int j = 0; j < i; ++j)
            out.push_back(gram_[i][j]);
    return out;
}

template <std::size_t N>
std::int64_t HermitianForm<N>::disc() const
{
    return leading_minor<N>(gram_, int(N));
}

template <std::size_t N>
bool HermitianForm<N>::is_positive_definite() const
{
    for (int k = 1; k <= int(N); ++k)
        if (leading_minor<N>(gram_, k) <= 0)
            return false;
    return true;
}

template <std::size_t N>
OrderElement HermitianForm<N>::pairing(OrderVector<N> const & x, OrderVector<N> const & y) const
{
    OrderElement acc = order_zero(d());
    for (int i = 0; i < int(N); ++i)
        for (int j = 0; j < int(N); ++j)
            acc = acc + x[i] * gram_[i][j] * conj(y[j]);
    return acc;
}

template <std::size_t N>
std::int64_t HermitianForm<N>::value(OrderVector<N> const & x) const
{
    OrderElement r = pairing(x, x);
    if (r.v != 0)
        throw InvariantViolation("hermitian value is not rational");
    return r.u;
}

template <std::size_t N>
HermitianForm<N> HermitianForm<N>::transform(OrderMatrix<N> const & U) const
{
    OrderMatrix<N> m{};
    for (int k = 0; k < int(N); ++k)
        for (int l = 0; l < int(N); ++l)
            m[k][l] = pairing(U[k], U[l]);
    return HermitianForm(m);
}

template <std::size_t N>
std::array<std::array<std::int64_t, 2 * N>, 2 * N> HermitianForm<N>::real_gram() const
{
    std::int64_t dd = d();
    auto basis = [&](int k) {
        OrderVector<N> x;
        x.fill(order_zero(dd));
        x[k / 2] = (k % 2 == 0) ? order_one(dd) : omega(dd);
        return x;
    };
    std::array<std::array<std::int64_t, 2 * N>, 2 * N> g{};
    for (int k = 0; k < int(2 * N); ++k) {
        auto bk = basis(k);
        g[k][k] = 2 * value(bk);
        for (int l = 0; l < k; ++l) {
            auto bl = basis(l);
            OrderVector<N> s;
            for (int i = 0; i < int(N); ++i)
                s[i] = bk[i] + bl[i];
            g[k][l] = g[l][k] = value(s) - value(bk) - value(bl);
        }
    }
    return g;
}

template <std::size_t N>
std::vector<ShortVector<N>> short_vectors(HermitianForm<N> const & f, std::int64_t bound)
{
    if (!f.is_positive_definite())
        throw NotPositiveDefinite(to_string(f) + " is not positive definite");
    constexpr int n = int(2 * N);
    std::vector<ShortVector<N>> out;
    if (bound <= 0)
        return out;
    auto g = f.real_gram();
    /* H(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2 */
    long double q[n][n];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            q[i][j] = g[i][j] / 2.0L;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for (int k = i + 1; k < n; ++k)
            for (int l = k; l < n; ++l)
                q[k][l] -= q[k][i] * q[i][l];
    }
    long double const slack = 1e-9L * (bound + 1);
    std::int64_t dd = f.d();
    std::array<std::int64_t, n> x{};
    std::function<void(int, long double)> rec = [&](int i, long double remaining) {
        long double c = 0;
        for (int j = i + 1; j < n; ++j)
            c -= q[i][j] * x[j];
        long double r = std::sqrt(std::max(0.0L, (remaining + slack) / q[i][i]));
        auto lo = static_cast<std::int64_t>(std::ceil(c - r));
        auto hi = static_cast<std::int64_t>(std::floor(c + r));
        for (std::int64_t xi = lo; xi <= hi; ++xi) {
            x[i] = xi;
            long double t = xi - c;
            long double rest = remaining - q[i][i] * t * t;
            if (rest < -slack)
                continue;
            if (i > 0) {
                rec(i - 1, rest);
                continue;
            }
            OrderVector<N> v;
            bool zero = true;
            for (int k = 0; k < int(N); ++k) {
                v[k] = OrderElement{ dd, x[2 * k], x[2 * k + 1] };
                zero = zero && v[k].is_zero();
            }
            if (zero)
                continue;
            std::int64_t val = f.value(v);
            if (val <= bound)
                out.push_back({ v, val });
        }
        x[i] = 0;
    };
    rec(n - 1, static_cast<long double>(bound));
    return out;
}

template <std::size_t N>
std::int64_t minimum(HermitianForm<N> const & f)
{
    std::int64_t b = f.diagonal(0);
    for (int i = 1; i < int(N); ++i)
        b = std::min(b, f.diagonal(i));
    auto sv = short_vectors(f, b);
    std::int64_t m = b;
    for (auto const & s : sv)
        m = std::min(m, s.value);
    return m;
}

template <std::size_t N>
std::optional<OrderVector<N>> represents_one(HermitianForm<N> const & f)
{
    auto sv = short_vectors(f, 1);
    if (sv.empty())
        return std::nullopt;
    std::sort(sv.begin(), sv.end(), [](auto const & a, auto const & b) {
        for (int i = 0; i < int(N); ++i) {
            if (a.x[i] == b.x[i])
                continue;
            return std::pair(a.x[i].u, a.x[i].v) > std::pair(b.x[i].u, b.x[i].v);
        }
        return false;
    });
    return sv.front().x;
}

template <std::size_t N>
bool spans_orthogonal_summand(HermitianForm<N> const & f, OrderVector<N> const & v)
{
    std::int64_t h = f.value(v);
    if (h <= 0)
        return false;
    for (int i = 0; i < int(N); ++i) {
        OrderVector<N> e;
        e.fill(order_zero(f.d()));
        e[i] = order_one(f.d());
        if (!exact_div(f.pairing(e, v), h))
            return false;
    }
    return true;
}

template <std::size_t N>
IndecomposabilityVerdict is_indecomposable(HermitianForm<N> const & f)
{
    IndecomposabilityVerdict verdict;
    verdict.complete = class_number(f.d()) == 1;
    /* a free rank-1 summand Rv has H(v) dividing the discriminant */
    std::int64_t D = f.disc();
    auto sv = short_vectors(f, D);
    std::sort(sv.begin(), sv.end(), [](auto const & a, auto const & b) {
        return a.value < b.value;
    });
    for (auto const & s : sv) {
        if (D % s.value != 0)
            continue;
        if (spans_orthogonal_summand(f, s.x)) {
            verdict.indecomposable = false;
            verdict.witness.assign(s.x.begin(), s.x.end());
            return verdict;
        }
    }
    verdict.indecomposable = true;
    return verdict;
}

OrderVector<2> complete_basis(OrderVector<2> const & v)
{
    std::int64_t d = v[0].d;
    if (v[0].is_zero() && v[1].is_zero())
        throw InputError("zero vector has no basis completion");
    auto us = units(d);
    auto is_unit = [&](OrderElement const & g) { return norm(g) == 1; };
    if (covering_radius_sq(d) < 1) {
        /* r_i = s_i a + t_i b, euclidean remainder sequence */
        OrderElement r0 = v[0], r1 = v[1];
        OrderElement s0 = order_one(d), t0 = order_zero(d);
        OrderElement s1 = order_zero(d), t1 = order_one(d);
        while (!r1.is_zero()) {
            OrderElement num = r0 * conj(r1);
            OrderElement q = closest_element(d, quotient_point(num, norm(r1)));
            OrderElement r2 = r0 - q * r1;
            OrderElement s2 = s0 - q * s1, t2 = t0 - q * t1;
            r0 = r1, s0 = s1, t0 = t1;
            r1 = r2, s1 = s2, t1 = t2;
        }
        if (!is_unit(r0))
            throw InputError("vector is not primitive");
        OrderElement gi = conj(r0);
        /* a (s g^-1) - b (-t g^-1) = 1 */
        return { -(t0 * gi), s0 * gi };
    }
    std::int64_t bound = 1;
    for (std::int64_t n = 0; n <= 400; ++n) {
        for (auto const & c : elements_of_norm(d, n)) {
            for (auto const & u : us) {
                /* a e - b c = u */
                if (!v[0].is_zero()) {
                    if (auto e = exact_div(u + v[1] * c, v[0]))
                        return { c, *e };
                } else if (is_unit(v[1])) {
                    return { -(u * conj(v[1])), order_zero(d) };
                }
            }
        }
        bound = n;
    }
    (void)bound;
    throw UnsupportedCase("no basis completion found over R_" + std::to_string(d));
}

namespace {

OrderMatrix<2> multiply(OrderMatrix<2> const & a, OrderMatrix<2> const & b)
{
    OrderMatrix<2> c;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return c;
}

/* Gauss-style size reduction: keeps the entries small before the exact
   minimum search. The first diagonal entry strictly decreases on each swap. */
OrderMatrix<2> prereduce2(HermitianForm2 const & f)
{
    std::int64_t d = f.d();
    auto one = order_one(d), zero = order_zero(d);
    OrderVector<2> x{ one, zero }, w{ zero, one };
    if (f.value(w) < f.value(x))
        std::swap(x, w);
    for (;;) {
        std::int64_t lambda = f.value(x);
        auto t = closest_element(d, quotient_point(-f.pairing(w, x), lambda));
        w = OrderVector<2>{ w[0] + t * x[0], w[1] + t * x[1] };
        if (f.value(w) >= lambda)
            break;
        std::swap(x, w);
    }
    return { x, w };
}

} // namespace

Reduction2 reduce2(HermitianForm2 const & f0)
{
    if (!f0.is_positive_definite())
        throw NotPositiveDefinite(to_string(f0) + " is not positive definite");
    auto pre = prereduce2(f0);
    HermitianForm2 f = f0.transform(pre);
    std::int64_t d = f.d();
    std::int64_t D = f.disc();
    std::int64_t lambda = minimum(f);
    auto us = units(d);
    struct Best
    {
        std::tuple<std::int64_t, std::int64_t, std::int64_t> key;
        OrderMatrix<2> basis;
    };
    std::optional<Best> best;
    for (auto const & s : short_vectors(f, lambda)) {
        if (s.value != lambda)
            continue;
        OrderVector<2> w;
        try {
            w = complete_basis(s.x);
        } catch (InputError const &) {
            continue;
        }
        OrderElement a0 = f.pairing(w, s.x);
        for (auto const & t : closest_elements(d, quotient_point(-a0, lambda))) {
            OrderVector<2> w1{ w[0] + t * s.x[0], w[1] + t * s.x[1] };
            for (auto const & eps : us) {
                OrderElement a = eps * (a0 + lambda * t);
                auto key = std::tuple(norm(a), a.u, a.v);
                if (!best || key < best->key)
                    best = Best{ key, { s.x, OrderVector<2>{ eps * w1[0], eps * w1[1] } } };
            }
        }
    }
    if (!best)
        throw UnsupportedCase("no minimal vector of " + to_string(f)
                              + " extends to a basis");
    auto basis = multiply(best->basis, pre);
    HermitianForm2 g = f0.transform(basis);
    auto [na, au, av] = best->key;
    if (g.diagonal(0) != lambda || g.entry(1, 0) != OrderElement{ d, au, av }
        || g.disc() != D || g.diagonal(1) * lambda != D + na)
        throw InvariantViolation("reduction of " + to_string(f0) + " is inconsistent");
    return { g, basis };
}

std::vector<ReducedClass> enumerate_reduced2(std::int64_t d, std::int64_t disc)
{
    Rational c = covering_radius_sq(d);
    if (c >= 1)
        throw IncompleteForDiscriminant("covering radius of R_" + std::to_string(d)
                                        + " is not below 1");
    if (disc < 1)
        throw InputError("discriminant must be positive");
    std::map<std::tuple<std::int64_t, std::int64_t, std::int64_t, std::int64_t>, HermitianForm2> classes;
    /* lambda^2 <= lambda mu = disc + N(alpha) <= disc + c lambda^2 */
    for (std::int64_t lambda = 1; (1 - c) * lambda * lambda <= disc; ++lambda) {
        Rational mu_max = (disc + c * lambda * lambda) / lambda;
        for (std::int64_t mu = lambda; mu <= floor_of(mu_max); ++mu) {
            for (auto const & alpha : elements_of_norm(d, lambda * mu - disc)) {
                /* alpha / lambda in the closed cell around 0 */
                auto z = quotient_point(alpha, lambda);
                auto near = closest_elements(d, z);
                if (std::find(near.begin(), near.end(), order_zero(d)) == near.end())
                    continue;
                auto f = HermitianForm2::from_entries(d, { lambda, mu }, { alpha });
                auto g = reduce2(f).form;
                auto a = g.entry(1, 0);
                classes.emplace(std::tuple(g.diagonal(0), g.diagonal(1), a.u, a.v), g);
            }
        }
    }
    std::vector<ReducedClass> out;
    for (auto const & [key, g] : classes)
        out.push_back({ g, is_indecomposable(g) });
    return out;
}

SearchResult3 search_unimodular_indecomposable3(std::int64_t d, std::int64_t entry_bound,
                                                std::size_t limit)
{
    QuadOrder::make(d);
    if (entry_bound < 1)
        throw InputError("entry bound must be positive");
    SearchResult3 result;
    result.indecomposability_certified = class_number(d) == 1;
    std::vector<OrderElement> elems;
    for (std::int64_t n = 0; n <= entry_bound; ++n)
        for (auto const & x : elements_of_norm(d, n))
            elems.push_back(x);
    for (std::int64_t l1 = 2; l1 <= entry_bound; ++l1)
        for (std::int64_t l2 = l1; l2 <= entry_bound; ++l2)
            for (std::int64_t l3 = l2; l3 <= entry_bound; ++l3)
                for (auto const & h21 : elems) {
                    std::int64_t n21 = norm(h21);
                    if (n21 >= l1 * l2)
                        continue;
                    for (auto const & h31 : elems) {
                        std::int64_t n31 = norm(h31);
                        if (n31 >= l1 * l3)
                            continue;
                        for (auto const & h32 : elems) {
                            std::int64_t n32 = norm(h32);
                            if (n32 >= l2 * l3)
                                continue;
                            /* det = l1 l2 l3 + Tr(h12 h23 h31) - sum l_k N(h_ij) */
                            std::int64_t tr = trace(conj(h21) * conj(h32) * h31);
                            std::int64_t det = l1 * l2 * l3 + tr - l1 * n32 - l2 * n31 - l3 * n21;
                            if (det != 1)
                                continue;
                            auto f = HermitianForm3::from_entries(d, { l1, l2, l3 }, { h21, h31, h32 });
                            if (!f.is_positive_definite() || represents_one(f))
                                continue;
                            result.forms.push_back(f);
                            if (limit != 0 && result.forms.size() >= limit) {
                                result.exhausted = false;
                                return result;
                            }
                        }
                    }
                }
    return result;
}

bool hoffmann_exists(int rank, std::int64_t d)
{
    QuadOrder::make(d);
    if (rank == 2)
        return d != -3 && d != -4 && d != -7;
    if (rank == 3)
        return d != -3 && d != -4 && d != -8 && d != -11;
    throw InputError("rank must be 2 or 3");
}

std::string to_string(OrderElement const & x)
{
    std::ostringstream o;
    if (x.v == 0) {
        o << x.u;
        return o.str();
    }
    if (x.u != 0)
        o << x.u << (x.v < 0 ? "-" : "+");
    else if (x.v < 0)
        o << "-";
    std::int64_t a = x.v < 0 ? -x.v : x.v;
    if (a != 1)
        o << a;
    o << "w";
    return o.str();
}

template <std::size_t N>
std::string to_string(HermitianForm<N> const & f)
{
    std::ostringstream o;
    o << "[";
    for (int i = 0; i < int(N); ++i) {
        o << (i ? ", [" : "[");
        for (int j = 0; j < int(N); ++j)
            o << (j ? ", " : "") << to_string(f.entry(i, j));
        o << "]";
    }
    o << "] over R_" << f.d();
    return o.str();
}

template class HermitianForm<2>;
template class HermitianForm<3>;

#define GENUS3_INSTANTIATE(N)                                                  \
    template std::vector<ShortVector<N>> short_vectors(HermitianForm<N> const &, \
                                                       std::int64_t);         \
    template std::int64_t minimum(HermitianForm<N> const &);                  \
    template std::optional<OrderVector<N>> represents_one(HermitianForm<N> const &); \
    template bool spans_orthogonal_summand(HermitianForm<N> const &,          \
                                           OrderVector<N> const &);           \
    template IndecomposabilityVerdict is_indecomposable(HermitianForm<N> const &); \
    template std::string to_string(HermitianForm<N> const &);

GENUS3_INSTANTIATE(2)
GENUS3_INSTANTIATE(3)

#undef GENUS3_INSTANTIATE

} // namespace genus3
