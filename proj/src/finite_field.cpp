#include "genus3/finite_field.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "genus3/arith.hpp"
#include "genus3/error.hpp"

namespace genus3 {

namespace fp_poly {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly & f)
{
    while (!f.empty() && f.back() == 0)
        f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    std::uint64_t r = 1, b = a % p;
    for (std::uint64_t e = p - 2; e; e >>= 1) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
    }
    return static_cast<std::uint32_t>(r);
}

Poly mod(Poly a, Poly const & f, std::uint32_t p)
{
    trim(a);
    std::size_t n = f.size() - 1;
    std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > n) {
        std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t i = 0; i <= n; ++i)
            a[shift + i] = static_cast<std::uint32_t>(
                    (a[shift + i] + p - c * f[i] % p) % p);
        trim(a);
    }
    return a;
}

Poly mulmod(Poly const & a, Poly const & b, Poly const & f, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>(
                    (r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    return mod(std::move(r), f, p);
}

Poly powmod(Poly b, std::uint64_t e, Poly const & f, std::uint32_t p)
{
    Poly r{ 1 };
    r = mod(r, f, p);
    for (; e; e >>= 1) {
        if (e & 1)
            r = mulmod(r, b, f, p);
        b = mulmod(b, b, f, p);
    }
    return r;
}

Poly gcd(Poly a, Poly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<unsigned> prime_divisors(std::uint64_t n)
{
    std::vector<unsigned> r;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            r.push_back(static_cast<unsigned>(d));
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        r.push_back(static_cast<unsigned>(n));
    return r;
}

} // namespace

bool is_irreducible(std::vector<std::uint32_t> const & f_in, std::uint32_t p)
{
    Poly f = f_in;
    trim(f);
    if (f.size() < 2)
        return false;
    std::size_t n = f.size() - 1;
    if (n == 1)
        return true;
    if (n <= 3) {
        /* a reducible cubic or quadratic has a linear factor */
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = f.size(); i-- > 0;)
                v = (v * x + f[i]) % p;
            if (v == 0)
                return false;
        }
        return true;
    }
    /* Rabin's test */
    Poly x{ 0, 1 };
    auto x_pow_p_pow = [&](std::size_t k) {
        Poly h = mod(x, f, p);
        for (std::size_t i = 0; i < k; ++i)
            h = powmod(h, p, f, p);
        return h;
    };
    auto minus_x = [&](Poly h) {
        h.resize(std::max<std::size_t>(h.size(), 2), 0);
        h[1] = (h[1] + p - 1) % p;
        trim(h);
        return h;
    };
    if (!minus_x(x_pow_p_pow(n)).empty())
        return false;
    for (unsigned r : prime_divisors(n)) {
        Poly g = gcd(f, minus_x(x_pow_p_pow(n / r)), p);
        if (g.size() != 1)
            return false;
    }
    return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned e)
{
    std::uint64_t count = 1;
    for (unsigned i = 0; i < e; ++i)
        count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
        Poly f(e + 1, 0);
        std::uint64_t t = k;
        for (unsigned i = 0; i < e; ++i) {
            f[i] = static_cast<std::uint32_t>(t % p);
            t /= p;
        }
        f[e] = 1;
        if (is_irreducible(f, p))
            return f;
    }
    throw InvariantViolation("no irreducible polynomial found");
}

} // namespace fp_poly

namespace {

std::vector<std::uint32_t> default_modulus(std::uint32_t p, unsigned e)
{
    if (!is_prime(p) || e == 0)
        return {};
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e; ++i) {
        q *= p;
        if (q > FiniteField::max_order)
            throw FieldTooLarge("field order exceeds 2^20");
    }
    return fp_poly::smallest_irreducible(p, e);
}

} // namespace

FiniteField::FiniteField(std::uint32_t p, unsigned e)
    : FiniteField(p, default_modulus(p, e))
{
}

FiniteField::FiniteField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p)
    , e_(0)
    , q_(1)
    , modulus_(std::move(modulus))
{
    if (!is_prime(p))
        throw InputError("field characteristic " + std::to_string(p)
                         + " is not prime");
    if (modulus_.size() < 2)
        throw InputError("field modulus must have degree >= 1");
    for (auto & c : modulus_)
        c %= p;
    if (modulus_.back() != 1)
        throw InputError("field modulus must be monic");
    e_ = static_cast<unsigned>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (unsigned i = 0; i < e_; ++i) {
        q *= p;
        if (q > max_order)
            throw FieldTooLarge("field order exceeds 2^20");
    }
    q_ = static_cast<std::uint32_t>(q);
    if (!fp_poly::is_irreducible(modulus_, p))
        throw ReducibleModulus("modulus is reducible over F_"
                               + std::to_string(p));
    pow_p_.resize(e_ + 1);
    pow_p_[0] = 1;
    for (unsigned i = 1; i <= e_; ++i)
        pow_p_[i] = pow_p_[i - 1] * p_;
    build_tables();
}

void FiniteField::build_tables()
{
    auto to_poly = [this](std::uint32_t idx) {
        std::vector<std::uint32_t> c(e_, 0);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = idx % p_;
            idx /= p_;
        }
        return c;
    };
    auto from_poly = [this](std::vector<std::uint32_t> const & c) {
        std::uint32_t idx = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            idx = idx * p_ + c[i];
        return idx;
    };
    auto slow_mul = [&](std::uint32_t a, std::uint32_t b) {
        return from_poly(fp_poly::mulmod(to_poly(a), to_poly(b), modulus_, p_));
    };
    auto slow_pow = [&](std::uint32_t a, std::uint64_t k) {
        std::uint32_t r = 1;
        for (; k; k >>= 1) {
            if (k & 1)
                r = slow_mul(r, a);
            a = slow_mul(a, a);
        }
        return r;
    };

    std::uint32_t n = q_ - 1;
    std::vector<std::uint32_t> primes;
    {
        std::uint32_t t = n;
        for (std::uint32_t d = 2; d * d <= t; ++d) {
            if (t % d == 0) {
                primes.push_back(d);
                while (t % d == 0)
                    t /= d;
            }
        }
        if (t > 1)
            primes.push_back(t);
    }
    std::uint32_t g = 1;
    for (std::uint32_t c = 1; c < q_; ++c) {
        bool primitive = true;
        for (auto l : primes) {
            if (slow_pow(c, n / l) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            g = c;
            break;
        }
    }
    exp_.assign(n, 0);
    log_.assign(q_, 0);
    std::uint32_t cur = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        exp_[i] = cur;
        log_[cur] = i;
        cur = slow_mul(cur, g);
    }
    if (cur != 1)
        throw InvariantViolation("primitive element search failed");
    if (n == 1)
        exp_.push_back(1); /* F_2: keep primitive_element() valid */
}

FieldElement FiniteField::generator() const
{
    std::vector<std::int64_t> c{ 0, 1 };
    return from_coefficients(c);
}

FieldElement FiniteField::from_int(std::int64_t n) const
{
    std::int64_t r = n % static_cast<std::int64_t>(p_);
    if (r < 0)
        r += p_;
    return { static_cast<std::uint32_t>(r) };
}

FieldElement FiniteField::from_coefficients(std::span<const std::int64_t> c) const
{
    std::vector<std::uint32_t> poly(c.size());
    for (std::size_t i = 0; i < c.size(); ++i)
        poly[i] = from_int(c[i]).index;
    if (poly.size() > e_)
        poly = fp_poly::mulmod(poly, { 1 }, modulus_, p_);
    std::uint32_t idx = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
        idx = idx * p_ + poly[i];
    return { idx };
}

std::vector<std::uint32_t> FiniteField::coefficients(FieldElement x) const
{
    std::vector<std::uint32_t> c(e_);
    std::uint32_t idx = x.index;
    for (unsigned i = 0; i < e_; ++i) {
        c[i] = idx % p_;
        idx /= p_;
    }
    return c;
}

FieldElement FiniteField::add(FieldElement a, FieldElement b) const
{
    if (p_ == 2)
        return { a.index ^ b.index };
    if (e_ == 1) {
        std::uint32_t s = a.index + b.index;
        return { s >= p_ ? s - p_ : s };
    }
    std::uint32_t r = 0, x = a.index, y = b.index;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t s = x % p_ + y % p_;
        if (s >= p_)
            s -= p_;
        r += s * pow_p_[i];
        x /= p_;
        y /= p_;
    }
    return { r };
}

FieldElement FiniteField::neg(FieldElement a) const
{
    if (p_ == 2)
        return a;
    std::uint32_t r = 0, x = a.index;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint32_t d = x % p_;
        r += (d == 0 ? 0 : p_ - d) * pow_p_[i];
        x /= p_;
    }
    return { r };
}

FieldElement FiniteField::sub(FieldElement a, FieldElement b) const
{
    return add(a, neg(b));
}

FieldElement FiniteField::inv(FieldElement a) const
{
    if (a.index == 0)
        throw DivisionByZero("inverse of zero in F_" + std::to_string(q_));
    std::uint32_t l = log_[a.index];
    return { exp_[l == 0 ? 0 : q_ - 1 - l] };
}

FieldElement FiniteField::div(FieldElement a, FieldElement b) const
{
    return mul(a, inv(b));
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t k) const
{
    if (a.index == 0)
        return { k == 0 ? 1u : 0u };
    unsigned __int128 l = static_cast<unsigned __int128>(log_[a.index]) * k;
    return { exp_[static_cast<std::uint32_t>(l % (q_ - 1))] };
}

bool FiniteField::is_square(FieldElement a) const
{
    if (a.index == 0 || p_ == 2)
        return true;
    return log_[a.index] % 2 == 0;
}

int FiniteField::quadratic_character(FieldElement a) const
{
    if (a.index == 0)
        return 0;
    if (p_ == 2)
        return 1;
    return log_[a.index] % 2 == 0 ? 1 : -1;
}

std::uint32_t FiniteField::absolute_trace(FieldElement a) const
{
    FieldElement t = zero();
    FieldElement cur = a;
    for (unsigned i = 0; i < e_; ++i) {
        t = add(t, cur);
        cur = frobenius(cur);
    }
    if (t.index >= p_)
        throw InvariantViolation("absolute trace not in the prime field");
    return t.index;
}

std::vector<FieldElement> FiniteField::elements() const
{
    std::vector<FieldElement> r(q_);
    for (std::uint32_t i = 0; i < q_; ++i)
        r[i] = { i };
    return r;
}

namespace field_poly {

void trim(FieldPoly & f)
{
    while (!f.empty() && f.back().index == 0)
        f.pop_back();
}

int degree(FieldPoly const & f)
{
    FieldPoly g = f;
    trim(g);
    return static_cast<int>(g.size()) - 1;
}

FieldElement eval(FiniteField const & F, FieldPoly const & f, FieldElement x)
{
    FieldElement r = F.zero();
    for (std::size_t i = f.size(); i-- > 0;)
        r = F.add(F.mul(r, x), f[i]);
    return r;
}

FieldPoly mul(FiniteField const & F, FieldPoly const & a, FieldPoly const & b)
{
    if (a.empty() || b.empty())
        return {};
    FieldPoly r(a.size() + b.size() - 1, F.zero());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
    trim(r);
    return r;
}

FieldPoly derivative(FiniteField const & F, FieldPoly const & f)
{
    FieldPoly r;
    for (std::size_t i = 1; i < f.size(); ++i)
        r.push_back(F.mul(F.from_int(static_cast<std::int64_t>(i)), f[i]));
    trim(r);
    return r;
}

std::pair<FieldPoly, FieldPoly> divmod(FiniteField const & F, FieldPoly a,
                                       FieldPoly const & b_in)
{
    FieldPoly b = b_in;
    trim(b);
    trim(a);
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    FieldElement lead_inv = F.inv(b.back());
    FieldPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, F.zero());
    while (a.size() >= b.size() && !a.empty()) {
        FieldElement c = F.mul(a.back(), lead_inv);
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
        trim(a);
    }
    trim(q);
    return { q, a };
}

FieldPoly make_monic(FiniteField const & F, FieldPoly f)
{
    trim(f);
    if (f.empty())
        return f;
    FieldElement li = F.inv(f.back());
    for (auto & c : f)
        c = F.mul(c, li);
    return f;
}

FieldPoly gcd(FiniteField const & F, FieldPoly a, FieldPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        FieldPoly r = divmod(F, a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(F, a);
}

bool is_squarefree(FiniteField const & F, FieldPoly const & f)
{
    FieldPoly d = derivative(F, f);
    if (d.empty())
        return degree(f) <= 0;
    return degree(gcd(F, f, d)) == 0;
}

std::vector<FieldElement> roots(FiniteField const & F, FieldPoly const & f)
{
    std::vector<FieldElement> r;
    for (auto x : F.elements())
        if (eval(F, f, x).index == 0)
            r.push_back(x);
    return r;
}

} // namespace field_poly

FieldPoly FieldEmbedding::operator()(FieldPoly const & f) const
{
    FieldPoly r(f.size());
    for (std::size_t i = 0; i < f.size(); ++i)
        r[i] = image[f[i].index];
    return r;
}

FieldEmbedding embed_in_extension(FieldPtr const & base, unsigned r)
{
    FieldEmbedding emb;
    emb.source = base;
    if (r == 1) {
        emb.target = base;
        emb.image = base->elements();
        return emb;
    }
    std::uint64_t size = 1;
    for (unsigned i = 0; i < base->degree() * r; ++i) {
        size *= base->characteristic();
        if (size > FiniteField::max_order)
            throw FieldTooLarge("extension field order exceeds 2^20");
    }
    auto target = std::make_shared<FiniteField>(base->characteristic(),
                                                base->degree() * r);
    FieldPoly m;
    for (auto c : base->modulus())
        m.push_back(target->from_int(c));
    FieldElement beta{ 0 };
    bool found = false;
    for (auto x : target->elements()) {
        if (field_poly::eval(*target, m, x).index == 0) {
            beta = x;
            found = true;
            break;
        }
    }
    if (!found)
        throw InvariantViolation("base modulus has no root in the extension");
    std::vector<FieldElement> beta_pow(base->degree());
    beta_pow[0] = target->one();
    for (unsigned i = 1; i < base->degree(); ++i)
        beta_pow[i] = target->mul(beta_pow[i - 1], beta);
    emb.target = target;
    emb.image.resize(base->order());
    for (auto x : base->elements()) {
        auto c = base->coefficients(x);
        FieldElement y = target->zero();
        for (unsigned i = 0; i < c.size(); ++i)
            y = target->add(y, target->mul(target->from_int(c[i]), beta_pow[i]));
        emb.image[x.index] = y;
    }
    return emb;
}

} // namespace genus3
