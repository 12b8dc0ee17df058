#include "slce/field.hpp"

#include <sstream>
#include <stdexcept>

#include "slce/arith.hpp"

namespace slce {

namespace {

// Dense polynomials over GF(p), lowest degree first, no trailing zeros.
using Poly = std::vector<std::uint32_t>;

void trim(Poly & a)
{
    while (!a.empty() && a.back() == 0)
        a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p)
{
    return static_cast<std::uint32_t>(arith::powmod(a, p - 2, p));
}

Poly poly_mod(Poly a, Poly const & f, std::uint32_t p)
{
    trim(a);
    std::size_t const df = f.size() - 1;
    std::uint32_t const lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        std::uint64_t const c = std::uint64_t{a.back()} * lead_inv % p;
        std::size_t const shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - c * f[i] % p) % p);
        trim(a);
    }
    return a;
}

Poly poly_mulmod(Poly const & a, Poly const & b, Poly const & f, std::uint32_t p)
{
    if (a.empty() || b.empty())
        return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
    return poly_mod(std::move(r), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, Poly const & f, std::uint32_t p)
{
    Poly r{1};
    base = poly_mod(std::move(base), f, p);
    while (e != 0) {
        if (e & 1)
            r = poly_mulmod(r, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_sub(Poly a, Poly const & b, std::uint32_t p)
{
    if (a.size() < b.size())
        a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test for a monic f of degree m.
bool is_irreducible(Poly const & f, std::uint32_t p)
{
    unsigned const m = static_cast<unsigned>(f.size() - 1);
    Poly const x{0, 1};
    // frob[j] = x^(p^j) mod f
    std::vector<Poly> frob{poly_mod(x, f, p)};
    for (unsigned j = 1; j <= m; ++j)
        frob.push_back(poly_powmod(frob.back(), p, f, p));
    if (poly_sub(frob[m], poly_mod(x, f, p), p).size() != 0)
        return false;
    for (auto [r, e] : arith::factorize(m)) {
        Poly const d = poly_sub(frob[m / r], poly_mod(x, f, p), p);
        if (poly_gcd(f, d, p).size() != 1)
            return false;
    }
    return true;
}

// Tuple (c_0, ..., c_{m-1}) of the n-th element in the constant-term-first
// lexicographic order.
Poly lex_tuple(std::uint64_t n, unsigned m, std::uint32_t p)
{
    Poly c(m, 0);
    for (unsigned i = 0; i < m; ++i) {
        c[m - 1 - i] = static_cast<std::uint32_t>(n % p);
        n /= p;
    }
    return c;
}

std::string poly_string(Poly const & c)
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] == 0)
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0 || c[i] != 1)
            os << c[i];
        if (i >= 1)
            os << 'x';
        if (i >= 2)
            os << '^' << i;
    }
    if (first)
        os << '0';
    return os.str();
}

} // namespace

std::vector<std::uint32_t> FieldCtx::coords(FieldElt x) const
{
    std::vector<std::uint32_t> c(m_);
    std::uint32_t v = x.code;
    for (unsigned i = 0; i < m_; ++i) {
        c[i] = v % p_;
        v /= p_;
    }
    return c;
}

FieldElt FieldCtx::from_coords(std::span<std::uint32_t const> c) const
{
    if (c.size() > m_)
        throw std::invalid_argument("from_coords: too many coordinates");
    std::uint32_t code = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= p_)
            throw std::invalid_argument("from_coords: coordinate out of range");
        code = code * p_ + c[i];
    }
    return {code};
}

FieldElt FieldCtx::add(FieldElt a, FieldElt b) const
{
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t const d = (a.code % p_ + b.code % p_) % p_;
        out += d * scale;
        a.code /= p_;
        b.code /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElt FieldCtx::neg(FieldElt a) const
{
    std::uint32_t out = 0, scale = 1;
    for (unsigned i = 0; i < m_; ++i) {
        std::uint32_t const d = (p_ - a.code % p_) % p_;
        out += d * scale;
        a.code /= p_;
        scale *= p_;
    }
    return {out};
}

FieldElt FieldCtx::sub(FieldElt a, FieldElt b) const
{
    return add(a, neg(b));
}

FieldElt FieldCtx::mul(FieldElt a, FieldElt b) const
{
    if (a.code == 0 || b.code == 0)
        return {0};
    std::uint64_t const t = std::uint64_t{log_table_[a.code]} + log_table_[b.code];
    return pow_table_[t % order()];
}

FieldElt FieldCtx::inv(FieldElt a) const
{
    if (a.code == 0)
        throw std::domain_error("inverse of zero");
    return pow_table_[(order() - log_table_[a.code]) % order()];
}

FieldElt FieldCtx::from_int(std::int64_t n) const
{
    return {static_cast<std::uint32_t>(arith::mod_floor(n, p_))};
}

std::string FieldCtx::modulus_string() const
{
    return poly_string(modulus_);
}

std::string FieldCtx::elt_string(FieldElt x) const
{
    return poly_string(coords(x));
}

FieldCtx build_field(std::uint32_t p, unsigned m, std::uint64_t max_q)
{
    if (!arith::is_prime(p))
        throw std::invalid_argument("p must be prime");
    if (p == 2)
        throw std::invalid_argument("p must be odd");
    if (m == 0)
        throw std::invalid_argument("m must be positive");
    std::uint64_t q = 1;
    for (unsigned i = 0; i < m; ++i) {
        q *= p;
        if (q > max_q)
            throw std::invalid_argument("p^m exceeds the field size bound of " +
                                        std::to_string(max_q));
    }

    FieldCtx ctx;
    ctx.p_ = p;
    ctx.m_ = m;
    ctx.q_ = static_cast<std::uint32_t>(q);

    for (std::uint64_t n = 0;; ++n) {
        Poly f = lex_tuple(n, m, p);
        f.push_back(1);
        if (is_irreducible(f, p)) {
            ctx.modulus_ = std::move(f);
            break;
        }
    }

    std::uint64_t const order = q - 1;
    auto const prime_factors = arith::factorize(order);
    auto is_primitive = [&](Poly const & g) {
        for (auto [r, e] : prime_factors)
            if (poly_powmod(g, order / r, ctx.modulus_, p) == Poly{1})
                return false;
        return true;
    };

    Poly alpha;
    for (std::uint64_t n = 1; n < q; ++n) {
        // n = 0 is the zero tuple; start from the first nonzero one.
        Poly c = lex_tuple(n, m, p);
        trim(c);
        if (c.empty())
            continue;
        if (is_primitive(c)) {
            alpha = std::move(c);
            break;
        }
    }

    ctx.pow_table_.resize(order);
    ctx.log_table_.assign(q, 0);
    Poly cur{1};
    for (std::uint64_t t = 0; t < order; ++t) {
        FieldElt const e = ctx.from_coords(cur);
        ctx.pow_table_[t] = e;
        ctx.log_table_[e.code] = static_cast<std::uint32_t>(t);
        cur = poly_mulmod(cur, alpha, ctx.modulus_, p);
    }
    if (cur != Poly{1})
        throw std::logic_error("build_field: power table did not close");
    return ctx;
}

FieldElt power(FieldCtx const & ctx, std::int64_t t)
{
    auto const e = arith::mod_floor(t, ctx.order());
    return ctx.pow_alpha(static_cast<std::uint32_t>(e));
}

std::uint32_t dlog(FieldCtx const & ctx, FieldElt x)
{
    if (x.code == 0)
        throw std::domain_error("discrete log of zero");
    if (x.code >= ctx.q())
        throw std::invalid_argument("dlog: element out of range");
    return ctx.log_alpha(x);
}

std::uint32_t trace(FieldCtx const & ctx, FieldElt x)
{
    if (x.code == 0)
        return 0;
    std::uint64_t const e = ctx.log_alpha(x);
    std::uint64_t pj = 1; // p^j mod (q-1)
    FieldElt sum = ctx.zero();
    for (unsigned j = 0; j < ctx.m(); ++j) {
        sum = ctx.add(sum, ctx.pow_alpha(static_cast<std::uint32_t>(e * pj % ctx.order())));
        pj = pj * ctx.p() % ctx.order();
    }
    if (sum.code >= ctx.p())
        throw std::logic_error("trace: result not in the prime field");
    return sum.code;
}

} // namespace slce
