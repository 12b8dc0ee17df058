#include "slce/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "slce/arith.hpp"

namespace slce {

namespace {

using Words = std::vector<std::uint64_t>;

// dst ^= src * x^shift
void xor_shifted(Words & dst, Words const & src, std::size_t shift)
{
    std::size_t const ws = shift / 64, bs = shift % 64;
    std::size_t const need = src.size() + ws + (bs != 0 ? 1 : 0);
    if (dst.size() < need)
        dst.resize(need, 0);
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i)
            dst[i + ws] ^= src[i];
        return;
    }
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= src[i] << bs;
        dst[i + ws + 1] ^= src[i] >> (64 - bs);
    }
}

// 64 bits of `w` starting at bit `offset`; bits past the end read as zero.
std::uint64_t window(Words const & w, std::size_t offset)
{
    std::size_t const idx = offset / 64, sh = offset % 64;
    if (idx >= w.size())
        return 0;
    std::uint64_t r = w[idx] >> sh;
    if (sh != 0 && idx + 1 < w.size())
        r |= w[idx + 1] << (64 - sh);
    return r;
}

std::uint64_t spread_bits(std::uint32_t x)
{
    std::uint64_t r = x;
    r = (r | (r << 16)) & 0x0000FFFF0000FFFFull;
    r = (r | (r << 8)) & 0x00FF00FF00FF00FFull;
    r = (r | (r << 4)) & 0x0F0F0F0F0F0F0F0Full;
    r = (r | (r << 2)) & 0x3333333333333333ull;
    r = (r | (r << 1)) & 0x5555555555555555ull;
    return r;
}

std::uint32_t gather_even_bits(std::uint64_t x)
{
    x &= 0x5555555555555555ull;
    x = (x | (x >> 1)) & 0x3333333333333333ull;
    x = (x | (x >> 2)) & 0x0F0F0F0F0F0F0F0Full;
    x = (x | (x >> 4)) & 0x00FF00FF00FF00FFull;
    x = (x | (x >> 8)) & 0x0000FFFF0000FFFFull;
    x = (x | (x >> 16)) & 0x00000000FFFFFFFFull;
    return static_cast<std::uint32_t>(x);
}

Words pack_periodic(BitSeq const & seq, std::size_t n_terms, bool reverse)
{
    Words w((n_terms + 63) / 64, 0);
    std::size_t const v = seq.period();
    for (std::size_t i = 0; i < n_terms; ++i) {
        if (!seq.bits[i % v])
            continue;
        std::size_t const pos = reverse ? n_terms - 1 - i : i;
        w[pos / 64] |= std::uint64_t{1} << (pos % 64);
    }
    return w;
}

// Parity of sum_i c_i r[offset + i].
bool dot_window(Words const & c, Words const & r, std::size_t offset)
{
    std::uint64_t acc = 0;
    for (std::size_t w = 0; w < c.size(); ++w)
        acc ^= c[w] & window(r, offset + 64 * w);
    return std::popcount(acc) & 1;
}

void square_free(Gf2Poly const & f, unsigned scale, std::vector<std::pair<Gf2Poly, unsigned>> & out)
{
    if (f.degree() <= 0)
        return;
    Gf2Poly const df = f.derivative();
    if (df.is_zero()) {
        square_free(f.sqrt(), scale * 2, out);
        return;
    }
    Gf2Poly c = gcd(f, df);
    Gf2Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Gf2Poly y = gcd(w, c);
        Gf2Poly fac = w / y;
        if (fac.degree() > 0)
            out.emplace_back(fac, i * scale);
        w = std::move(y);
        c = c / w;
        ++i;
    }
    if (!c.is_one())
        square_free(c.sqrt(), scale * 2, out);
}

// Splits a square-free h into products of same-degree irreducibles.
std::vector<std::pair<Gf2Poly, unsigned>> distinct_degree(Gf2Poly h)
{
    std::vector<std::pair<Gf2Poly, unsigned>> out;
    Gf2Poly const x = Gf2Poly::monomial(1);
    Gf2Poly xp = x % h;
    for (unsigned i = 1; h.degree() >= 2 * static_cast<long>(i); ++i) {
        xp = mulmod(xp, xp, h);
        Gf2Poly g = gcd(h, xp + x);
        if (!g.is_one()) {
            h = h / g;
            xp = xp % h;
            out.emplace_back(std::move(g), i);
        }
    }
    if (h.degree() > 0) {
        unsigned const d = static_cast<unsigned>(h.degree());
        out.emplace_back(std::move(h), d);
    }
    return out;
}

// Cantor-Zassenhaus splitting with the absolute trace; trial elements are
// x, x^2, ... in turn, so the result is deterministic.
void equal_degree(Gf2Poly const & h, unsigned d, std::vector<Gf2Poly> & out)
{
    long const n = h.degree();
    if (n == static_cast<long>(d)) {
        out.push_back(h);
        return;
    }
    // The trace a + a^2 + ... + a^(2^(d-1)) is GF(2)-linear in a, so if no
    // monomial x^i (i < n) splits h, nothing does.
    for (long i = 1; i < n; ++i) {
        Gf2Poly const a = Gf2Poly::monomial(static_cast<std::size_t>(i)) % h;
        Gf2Poly t = a, cur = a;
        for (unsigned j = 1; j < d; ++j) {
            cur = mulmod(cur, cur, h);
            t += cur;
        }
        Gf2Poly g = gcd(h, t);
        if (g.degree() > 0 && g.degree() < n) {
            equal_degree(g, d, out);
            equal_degree(h / g, d, out);
            return;
        }
    }
    throw std::logic_error("equal_degree: no splitting element found");
}

} // namespace

Gf2Poly Gf2Poly::monomial(std::size_t n)
{
    Gf2Poly r;
    r.set_coeff(n, true);
    return r;
}

Gf2Poly Gf2Poly::x_pow_plus_one(std::size_t n)
{
    Gf2Poly r = monomial(n);
    r += from_uint(1);
    return r;
}

Gf2Poly Gf2Poly::from_uint(std::uint64_t bits)
{
    Gf2Poly r;
    if (bits != 0)
        r.words_.push_back(bits);
    return r;
}

Gf2Poly Gf2Poly::from_exponents(std::vector<std::size_t> const & exps)
{
    Gf2Poly r;
    for (auto e : exps)
        r.set_coeff(e, !r.coeff(e));
    return r;
}

Gf2Poly Gf2Poly::parse(std::string const & text)
{
    Gf2Poly r;
    std::string term;
    auto flush = [&] {
        if (term.empty())
            throw std::invalid_argument("parse: empty term in \"" + text + "\"");
        std::size_t e = 0;
        if (term == "1")
            e = 0;
        else if (term == "x")
            e = 1;
        else if (term.size() > 2 && term[0] == 'x' && term[1] == '^')
            e = std::stoul(term.substr(2));
        else if (term != "0")
            throw std::invalid_argument("parse: bad term \"" + term + "\"");
        if (term != "0")
            r.set_coeff(e, !r.coeff(e));
        term.clear();
    };
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch)))
            continue;
        if (ch == '+')
            flush();
        else
            term.push_back(ch);
    }
    flush();
    return r;
}

long Gf2Poly::degree() const
{
    if (words_.empty())
        return zero_degree;
    return static_cast<long>(64 * (words_.size() - 1) + 63 - std::countl_zero(words_.back()));
}

bool Gf2Poly::coeff(std::size_t i) const
{
    return i / 64 < words_.size() && ((words_[i / 64] >> (i % 64)) & 1);
}

void Gf2Poly::set_coeff(std::size_t i, bool value)
{
    if (i / 64 >= words_.size()) {
        if (!value)
            return;
        words_.resize(i / 64 + 1, 0);
    }
    if (value)
        words_[i / 64] |= std::uint64_t{1} << (i % 64);
    else
        words_[i / 64] &= ~(std::uint64_t{1} << (i % 64));
    trim();
}

std::size_t Gf2Poly::weight() const
{
    std::size_t w = 0;
    for (auto x : words_)
        w += static_cast<std::size_t>(std::popcount(x));
    return w;
}

void Gf2Poly::trim()
{
    while (!words_.empty() && words_.back() == 0)
        words_.pop_back();
}

Gf2Poly & Gf2Poly::operator+=(Gf2Poly const & o)
{
    if (words_.size() < o.words_.size())
        words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i)
        words_[i] ^= o.words_[i];
    trim();
    return *this;
}

Gf2Poly operator*(Gf2Poly const & a, Gf2Poly const & b)
{
    Gf2Poly r;
    if (a.is_zero() || b.is_zero())
        return r;
    Gf2Poly const & sparse = a.weight() <= b.weight() ? a : b;
    Gf2Poly const & dense = &sparse == &a ? b : a;
    r.words_.assign((static_cast<std::size_t>(a.degree() + b.degree()) / 64) + 2, 0);
    for (std::size_t w = 0; w < sparse.words_.size(); ++w) {
        std::uint64_t bits = sparse.words_[w];
        while (bits != 0) {
            std::size_t const i = 64 * w + static_cast<std::size_t>(std::countr_zero(bits));
            bits &= bits - 1;
            xor_shifted(r.words_, dense.words_, i);
        }
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::shifted(std::size_t n) const
{
    Gf2Poly r;
    if (is_zero())
        return r;
    xor_shifted(r.words_, words_, n);
    r.trim();
    return r;
}

std::pair<Gf2Poly, Gf2Poly> Gf2Poly::divmod(Gf2Poly const & d) const
{
    if (d.is_zero())
        throw std::domain_error("division by the zero polynomial");
    Gf2Poly quot, rem = *this;
    long const dd = d.degree();
    long dr = rem.degree();
    if (dr >= dd)
        quot.words_.assign(static_cast<std::size_t>(dr - dd) / 64 + 1, 0);
    while (dr >= dd) {
        std::size_t const s = static_cast<std::size_t>(dr - dd);
        quot.words_[s / 64] |= std::uint64_t{1} << (s % 64);
        xor_shifted(rem.words_, d.words_, s);
        rem.trim();
        dr = rem.degree();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
}

Gf2Poly operator%(Gf2Poly const & a, Gf2Poly const & d)
{
    return a.divmod(d).second;
}

Gf2Poly operator/(Gf2Poly const & a, Gf2Poly const & d)
{
    return a.divmod(d).first;
}

Gf2Poly Gf2Poly::derivative() const
{
    // Odd-degree terms survive, shifted down by one.
    Gf2Poly r;
    r.words_.resize(words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t const odd = words_[w] & 0xAAAAAAAAAAAAAAAAull;
        r.words_[w] |= odd >> 1;
        if (w > 0)
            r.words_[w - 1] |= odd << 63;
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::square() const
{
    Gf2Poly r;
    r.words_.resize(2 * words_.size(), 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        r.words_[2 * w] = spread_bits(static_cast<std::uint32_t>(words_[w]));
        r.words_[2 * w + 1] = spread_bits(static_cast<std::uint32_t>(words_[w] >> 32));
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::sqrt() const
{
    if (!derivative().is_zero())
        throw std::domain_error("sqrt: polynomial is not a square");
    Gf2Poly r;
    r.words_.resize((words_.size() + 1) / 2, 0);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        std::uint64_t const half = gather_even_bits(words_[w]);
        r.words_[w / 2] |= half << (32 * (w % 2));
    }
    r.trim();
    return r;
}

Gf2Poly Gf2Poly::reversed() const
{
    Gf2Poly r;
    long const d = degree();
    for (long i = 0; i <= d; ++i)
        if (coeff(static_cast<std::size_t>(i)))
            r.set_coeff(static_cast<std::size_t>(d - i), true);
    return r;
}

std::string Gf2Poly::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (!coeff(static_cast<std::size_t>(i)))
            continue;
        if (!first)
            os << '+';
        first = false;
        if (i == 0)
            os << '1';
        else if (i == 1)
            os << 'x';
        else
            os << "x^" << i;
    }
    return os.str();
}

std::strong_ordering operator<=>(Gf2Poly const & a, Gf2Poly const & b)
{
    if (auto c = a.degree() <=> b.degree(); c != 0)
        return c;
    for (std::size_t w = a.words_.size(); w-- > 0;)
        if (auto c = a.words_[w] <=> b.words_[w]; c != 0)
            return c;
    return std::strong_ordering::equal;
}

Gf2Poly mulmod(Gf2Poly const & a, Gf2Poly const & b, Gf2Poly const & m)
{
    if (&a == &b)
        return a.square() % m;
    return (a * b) % m;
}

Gf2Poly powmod(Gf2Poly const & base, std::uint64_t exp, Gf2Poly const & m)
{
    Gf2Poly r = Gf2Poly::from_uint(1) % m;
    Gf2Poly b = base % m;
    while (exp != 0) {
        if (exp & 1)
            r = mulmod(r, b, m);
        b = b.square() % m;
        exp >>= 1;
    }
    return r;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b)
{
    if (a.is_zero() && b.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

bool divides(Gf2Poly const & d, Gf2Poly const & f)
{
    return (f % d).is_zero();
}

bool is_irreducible(Gf2Poly const & f)
{
    long const n = f.degree();
    if (n <= 0)
        return false;
    Gf2Poly const x = Gf2Poly::monomial(1) % f;
    std::vector<Gf2Poly> frob{x}; // frob[j] = x^(2^j) mod f
    for (long j = 1; j <= n; ++j)
        frob.push_back(frob.back().square() % f);
    if (frob[static_cast<std::size_t>(n)] != x)
        return false;
    for (auto [r, e] : arith::factorize(static_cast<std::uint64_t>(n)))
        if (!gcd(f, frob[static_cast<std::size_t>(n) / r] + x).is_one())
            return false;
    return true;
}

FactorList factor(Gf2Poly const & f)
{
    if (f.degree() < 1)
        throw std::invalid_argument("factor: input must have degree at least 1");
    std::vector<std::pair<Gf2Poly, unsigned>> parts;
    square_free(f, 1, parts);

    std::map<Gf2Poly, unsigned> merged;
    for (auto const & [part, mult] : parts) {
        for (auto const & [block, d] : distinct_degree(part)) {
            std::vector<Gf2Poly> irreducibles;
            equal_degree(block, d, irreducibles);
            for (auto & g : irreducibles)
                merged[g] += mult;
        }
    }
    return {merged.begin(), merged.end()};
}

Gf2Poly expand(FactorList const & factors)
{
    Gf2Poly r = Gf2Poly::from_uint(1);
    for (auto const & [g, e] : factors)
        for (unsigned i = 0; i < e; ++i)
            r = r * g;
    return r;
}

std::string format_factors(FactorList const & factors)
{
    if (factors.empty())
        return "1";
    std::ostringstream os;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i != 0)
            os << ' ';
        os << '(' << factors[i].first.to_string() << ')';
        if (factors[i].second != 1)
            os << '^' << factors[i].second;
    }
    return os.str();
}

FactorList parse_factors(std::string const & text)
{
    FactorList out;
    std::size_t i = 0;
    auto skip_space = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    skip_space();
    if (text.substr(i) == "1")
        return out;
    while (i < text.size()) {
        if (text[i] != '(')
            throw std::invalid_argument("parse_factors: expected '(' in \"" + text + "\"");
        std::size_t const close = text.find(')', i);
        if (close == std::string::npos)
            throw std::invalid_argument("parse_factors: unbalanced '(' in \"" + text + "\"");
        Gf2Poly const g = Gf2Poly::parse(text.substr(i + 1, close - i - 1));
        i = close + 1;
        unsigned mult = 1;
        if (i < text.size() && text[i] == '^') {
            std::size_t used = 0;
            mult = static_cast<unsigned>(std::stoul(text.substr(i + 1), &used));
            i += 1 + used;
        }
        out.emplace_back(g, mult);
        skip_space();
    }
    return out;
}

Gf2Poly poly_from_seq(BitSeq const & seq)
{
    Gf2Poly r;
    for (std::size_t t = seq.period(); t-- > 0;)
        if (seq.bits[t])
            r.set_coeff(t, true);
    return r;
}

std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t k)
{
    if (k == 0 || k % 2 == 0)
        throw std::invalid_argument("cyclotomic_cosets: k must be odd");
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(k, false);
    for (std::uint32_t start = 0; start < k; ++start) {
        if (seen[start])
            continue;
        std::vector<std::uint32_t> coset;
        std::uint32_t j = start;
        do {
            seen[j] = true;
            coset.push_back(j);
            j = static_cast<std::uint32_t>(2ull * j % k);
        } while (j != start);
        out.push_back(std::move(coset));
    }
    return out;
}

Gf2Poly cyclotomic_gf2(std::uint32_t k)
{
    if (k == 0)
        throw std::invalid_argument("cyclotomic_gf2: k must be positive");
    Gf2Poly r = Gf2Poly::x_pow_plus_one(k);
    for (auto d : arith::divisors(k))
        if (d < k)
            r = r / cyclotomic_gf2(static_cast<std::uint32_t>(d));
    return r;
}

std::vector<Gf2Poly> minimal_polys_of_order(std::uint32_t k)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("minimal_polys_of_order: k must be odd and at least 3");
    auto const f = static_cast<unsigned>(arith::mult_order(2, k));
    std::vector<Gf2Poly> out;
    equal_degree(cyclotomic_gf2(k), f, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t linear_complexity(BitSeq const & seq)
{
    Gf2Poly const s = poly_from_seq(seq);
    if (s.is_zero())
        return 0;
    std::size_t const v = seq.period();
    return v - static_cast<std::size_t>(gcd(Gf2Poly::x_pow_plus_one(v), s).degree());
}

LfsrSynthesis berlekamp_massey(BitSeq const & seq, std::size_t n_terms)
{
    if (seq.period() == 0 || n_terms < 2 * seq.period())
        throw std::invalid_argument("berlekamp_massey: need at least two periods of terms");
    // rev[j] = s[n-1-j], so s[N-i] = rev[(n-1-N) + i] and each discrepancy
    // is a word-parallel dot product.
    Words const rev = pack_periodic(seq, n_terms, true);

    Gf2Poly c = Gf2Poly::from_uint(1), b = Gf2Poly::from_uint(1);
    std::size_t len = 0, gap = 1;
    for (std::size_t n = 0; n < n_terms; ++n) {
        bool const discrepancy = dot_window(c.words(), rev, n_terms - 1 - n);
        if (!discrepancy) {
            ++gap;
        } else if (2 * len <= n) {
            Gf2Poly prev = c;
            c += b.shifted(gap);
            len = n + 1 - len;
            b = std::move(prev);
            gap = 1;
        } else {
            c += b.shifted(gap);
            ++gap;
        }
    }
    return {len, std::move(c)};
}

bool lfsr_reproduces(BitSeq const & seq, LfsrSynthesis const & lfsr, std::size_t n_terms)
{
    if (seq.period() == 0 || lfsr.connection.degree() > static_cast<long>(lfsr.length) ||
        !lfsr.connection.coeff(0))
        return false;
    Words const rev = pack_periodic(seq, n_terms, true);
    for (std::size_t n = lfsr.length; n < n_terms; ++n)
        if (dot_window(lfsr.connection.words(), rev, n_terms - 1 - n))
            return false;
    return true;
}

} // namespace slce
