#include "genus3/weil.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "genus3/error.hpp"

namespace genus3 {

namespace {

using RatPoly = std::vector<Rational>;

void trim(RatPoly & f)
{
    while (!f.empty() && sgn(f.back()) == 0)
        f.pop_back();
}

int deg(RatPoly const & f)
{
    return static_cast<int>(f.size()) - 1;
}

RatPoly derivative(RatPoly const & f)
{
    RatPoly r;
    for (std::size_t i = 1; i < f.size(); ++i)
        r.push_back(f[i] * static_cast<long>(i));
    trim(r);
    return r;
}

std::pair<RatPoly, RatPoly> divmod(RatPoly a, RatPoly const & b)
{
    trim(a);
    RatPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] -= c * b[i];
        a.pop_back(); /* leading term cancels exactly */
        trim(a);
    }
    trim(q);
    return { q, a };
}

RatPoly gcd(RatPoly a, RatPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        RatPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

RatPoly squarefree_part(RatPoly const & f)
{
    RatPoly d = derivative(f);
    if (d.empty())
        return f;
    return divmod(f, gcd(f, d)).first;
}

Rational eval(RatPoly const & f, Rational const & x)
{
    Rational r = 0;
    for (std::size_t i = f.size(); i-- > 0;)
        r = r * x + f[i];
    return r;
}

std::vector<RatPoly> sturm_chain(RatPoly const & f)
{
    std::vector<RatPoly> chain{ f, derivative(f) };
    while (!chain.back().empty()) {
        RatPoly r = divmod(chain[chain.size() - 2], chain.back()).second;
        for (auto & c : r)
            c = -c;
        if (r.empty())
            break;
        chain.push_back(std::move(r));
    }
    if (chain.back().empty())
        chain.pop_back();
    return chain;
}

int variations(std::vector<int> const & signs)
{
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0)
            continue;
        if (last != 0 && s != last)
            ++v;
        last = s;
    }
    return v;
}

int variations_at(std::vector<RatPoly> const & chain, Rational const & x)
{
    std::vector<int> s;
    for (auto const & p : chain)
        s.push_back(sgn(eval(p, x)));
    return variations(s);
}

/* sign at +infinity (dir=1) or -infinity (dir=-1) */
int variations_at_infinity(std::vector<RatPoly> const & chain, int dir)
{
    std::vector<int> s;
    for (auto const & p : chain) {
        int lead = sgn(p.back());
        s.push_back((dir < 0 && deg(p) % 2 == 1) ? -lead : lead);
    }
    return variations(s);
}

/* number of distinct real roots of a squarefree polynomial */
int count_real_roots(RatPoly const & f)
{
    if (deg(f) <= 0)
        return 0;
    auto chain = sturm_chain(f);
    return variations_at_infinity(chain, -1) - variations_at_infinity(chain, 1);
}

/* distinct roots of a squarefree polynomial in (a, +infinity) */
int count_roots_above(RatPoly f, Rational const & a)
{
    if (deg(f) <= 0)
        return 0;
    if (sgn(eval(f, a)) == 0)
        f = divmod(f, RatPoly{ -a, 1 }).first;
    if (deg(f) <= 0)
        return 0;
    auto chain = sturm_chain(f);
    return variations_at(chain, a) - variations_at_infinity(chain, 1);
}

RatPoly to_rat(std::span<const BigInt> c)
{
    RatPoly r;
    for (auto const & x : c)
        r.emplace_back(x);
    trim(r);
    return r;
}

/* power sums P_0..P_kmax of the roots of a monic integer polynomial */
std::vector<BigInt> power_sums(std::span<const BigInt> c, int kmax)
{
    int g = static_cast<int>(c.size()) - 1;
    std::vector<BigInt> P(kmax + 1);
    P[0] = g;
    for (int k = 1; k <= kmax; ++k) {
        /* P_k + c_{g-1} P_{k-1} + ... = 0, with k c_{g-k} when k <= g */
        BigInt s = 0;
        for (int i = 1; i <= std::min(k - 1, g); ++i)
            s += c[g - i] * P[k - i];
        if (k <= g)
            s += k * c[g - k];
        P[k] = -s;
    }
    return P;
}

} // namespace

WeilRange weil_range(std::span<const BigInt> coefficients, std::int64_t q)
{
    RatPoly h = to_rat(coefficients);
    if (deg(h) < 1)
        return WeilRange::NotRealRooted;
    RatPoly hsf = squarefree_part(h);
    if (count_real_roots(hsf) != deg(hsf))
        return WeilRange::NotRealRooted;
    /* H(s) with roots x_i^2: even part of h(t) h(-t) */
    RatPoly hneg = h;
    for (std::size_t i = 1; i < hneg.size(); i += 2)
        hneg[i] = -hneg[i];
    RatPoly prod(h.size() + hneg.size() - 1, Rational(0));
    for (std::size_t i = 0; i < h.size(); ++i)
        for (std::size_t j = 0; j < hneg.size(); ++j)
            prod[i + j] += h[i] * hneg[j];
    RatPoly H;
    for (std::size_t i = 0; i < prod.size(); i += 2)
        H.push_back(prod[i]);
    trim(H);
    RatPoly Hsf = squarefree_part(H);
    if (count_roots_above(Hsf, Rational(4 * q)) != 0)
        return WeilRange::OutOfRange;
    return WeilRange::Ok;
}

RealWeilPoly::RealWeilPoly(std::vector<BigInt> coefficients, std::int64_t q)
    : coefficients_(std::move(coefficients))
    , q_(q)
{
    if (coefficients_.size() < 2 || coefficients_.back() != 1)
        throw InputError("a real Weil polynomial must be monic of degree >= 1");
    if (q < 2)
        throw InputError("q must be at least 2");
    switch (weil_range(coefficients_, q)) {
    case WeilRange::Ok:
        break;
    case WeilRange::NotRealRooted:
        throw RootOutOfWeilRange(to_string() + " has non-real roots");
    case WeilRange::OutOfRange:
        throw RootOutOfWeilRange(to_string() + " has a root outside [-2 sqrt q, 2 sqrt q]");
    }
}

std::optional<std::vector<std::int64_t>> RealWeilPoly::integer_roots() const
{
    /* integer roots divide the constant term and satisfy x^2 <= 4q */
    std::int64_t bound = static_cast<std::int64_t>(isqrt(std::uint64_t(4 * q_)));
    std::vector<std::int64_t> roots;
    std::vector<BigInt> f = coefficients_;
    for (std::int64_t x = bound; x >= -bound && f.size() > 1;) {
        BigInt v = 0;
        for (std::size_t i = f.size(); i-- > 0;)
            v = v * x + f[i];
        if (v != 0) {
            --x;
            continue;
        }
        /* synthetic division by (t - x) */
        std::vector<BigInt> g(f.size() - 1);
        BigInt carry = 0;
        for (std::size_t i = f.size(); i-- > 1;) {
            carry = carry * x + f[i];
            g[i - 1] = carry;
        }
        f = std::move(g);
        roots.push_back(x);
    }
    if (f.size() != 1)
        return std::nullopt;
    return roots;
}

std::string RealWeilPoly::to_string() const
{
    std::ostringstream o;
    bool first = true;
    for (std::size_t i = coefficients_.size(); i-- > 0;) {
        BigInt c = coefficients_[i];
        if (c == 0)
            continue;
        if (first) {
            if (c < 0)
                o << "-";
        } else {
            o << (c < 0 ? " - " : " + ");
        }
        BigInt a = abs(c);
        if (i == 0 || a != 1) {
            o << a;
            if (i > 0)
                o << "*";
        }
        if (i >= 1)
            o << "t";
        if (i >= 2)
            o << "^" << i;
        first = false;
    }
    if (first)
        o << "0";
    return o.str();
}

RealWeilPoly type_to_poly(std::span<const std::int64_t> xs, std::int64_t q)
{
    std::vector<BigInt> h{ 1 };
    for (std::int64_t x : xs) {
        if (static_cast<__int128>(x) * x > static_cast<__int128>(4) * q)
            throw RootOutOfWeilRange("|" + std::to_string(x)
                                     + "| exceeds floor(2 sqrt q)");
        std::vector<BigInt> next(h.size() + 1, 0);
        for (std::size_t i = 0; i < h.size(); ++i) {
            next[i + 1] += h[i];
            next[i] -= h[i] * static_cast<long>(x);
        }
        h = std::move(next);
    }
    return RealWeilPoly(std::move(h), q);
}

RealWeilPoly quadratic_twist(RealWeilPoly const & h)
{
    std::vector<BigInt> c = h.coefficients();
    int g = h.genus();
    for (int i = 0; i <= g; ++i)
        if ((g - i) % 2 == 1)
            c[i] = -c[i];
    return RealWeilPoly(std::move(c), h.q());
}

std::vector<BigInt> counts_from_coefficients(std::span<const BigInt> coefficients,
                                             std::int64_t q, int rmax)
{
    if (rmax < 1)
        throw InputError("rmax must be positive");
    if (coefficients.empty() || coefficients.back() != 1)
        throw InputError("polynomial must be monic");
    BigInt Q = static_cast<long>(q);
    /* s_r(x) as a polynomial in x: s_0 = 2, s_1 = -x, s_r = -x s_{r-1} - q s_{r-2} */
    std::vector<std::vector<BigInt>> s(rmax + 1);
    s[0] = { 2 };
    s[1] = { 0, -1 };
    for (int r = 2; r <= rmax; ++r) {
        std::vector<BigInt> t(r + 1, 0);
        for (std::size_t k = 0; k < s[r - 1].size(); ++k)
            t[k + 1] -= s[r - 1][k];
        for (std::size_t k = 0; k < s[r - 2].size(); ++k)
            t[k] -= Q * s[r - 2][k];
        s[r] = std::move(t);
    }
    std::vector<BigInt> P = power_sums(coefficients, rmax);
    std::vector<BigInt> counts;
    BigInt qr = 1;
    for (int r = 1; r <= rmax; ++r) {
        qr *= Q;
        BigInt sum = 0;
        for (std::size_t k = 0; k < s[r].size(); ++k)
            sum += s[r][k] * P[k];
        counts.push_back(qr + 1 - sum);
    }
    return counts;
}

std::vector<BigInt> counts_from_type(RealWeilPoly const & h, int rmax)
{
    return counts_from_coefficients(h.coefficients(), h.q(), rmax);
}

std::string Violation::describe() const
{
    std::ostringstream o;
    switch (kind) {
    case Kind::NotRealRooted:
        o << "polynomial has non-real roots";
        break;
    case Kind::RootOutOfRange:
        o << "a root lies outside [-2 sqrt q, 2 sqrt q]";
        break;
    case Kind::NegativeCount:
        o << "N_" << r << " = " << n_r << " < 0";
        break;
    case Kind::SubfieldExceeds:
        o << "N_" << r << " = " << n_r << " < N_" << s << " = " << n_s;
        break;
    }
    return o.str();
}

AdmissibilityVerdict admissible(std::span<const BigInt> coefficients,
                                std::int64_t q, int rmax)
{
    AdmissibilityVerdict v;
    switch (weil_range(coefficients, q)) {
    case WeilRange::Ok:
        break;
    case WeilRange::NotRealRooted:
        v.violation = Violation{ Violation::Kind::NotRealRooted, 0, 0, 0, 0 };
        return v;
    case WeilRange::OutOfRange:
        v.violation = Violation{ Violation::Kind::RootOutOfRange, 0, 0, 0, 0 };
        return v;
    }
    v.counts = counts_from_coefficients(coefficients, q, rmax);
    for (int r = 1; r <= rmax; ++r) {
        BigInt const & nr = v.counts[r - 1];
        if (nr < 0) {
            v.violation = Violation{ Violation::Kind::NegativeCount, r, 0, nr, 0 };
            return v;
        }
        for (int s = 1; s < r; ++s) {
            if (r % s == 0 && v.counts[s - 1] > nr) {
                v.violation = Violation{ Violation::Kind::SubfieldExceeds, r, s,
                                         nr, v.counts[s - 1] };
                return v;
            }
        }
    }
    v.admissible = true;
    return v;
}

AdmissibilityVerdict admissible(RealWeilPoly const & h, int rmax)
{
    return admissible(h.coefficients(), h.q(), rmax);
}

bool elliptic_trace_exists(PrimePower const & pp, std::int64_t t)
{
    auto q = static_cast<__int128>(pp.q);
    if (static_cast<__int128>(t) * t > 4 * q)
        return false;
    auto p = static_cast<std::int64_t>(pp.p);
    if (t % p != 0)
        return true;
    std::int64_t at = t < 0 ? -t : t;
    bool even = pp.e % 2 == 0;
    if (even) {
        auto root = static_cast<std::int64_t>(isqrt(pp.q));
        if (at == 2 * root)
            return true;
        if (at == root && pp.p % 3 != 1)
            return true;
    } else if ((pp.p == 2 || pp.p == 3)
               && at == checked_pow(p, (pp.e + 1) / 2)) {
        return true;
    }
    if (t == 0 && (!even || pp.p % 4 != 1))
        return true;
    return false;
}

} // namespace genus3
