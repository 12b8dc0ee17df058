#include "slce/cyclo.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>

#include "slce/arith.hpp"

namespace slce {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic divisor; throws if the remainder is nonzero.
IntPoly exact_div_monic(IntPoly a, IntPoly const & d)
{
    std::size_t const dd = d.size() - 1;
    if (a.size() < d.size())
        throw std::logic_error("exact_div_monic: dividend degree too small");
    IntPoly quot(a.size() - dd, 0);
    for (std::size_t i = a.size(); i-- > dd;) {
        std::int64_t const c = a[i];
        quot[i - dd] = c;
        if (c == 0)
            continue;
        for (std::size_t j = 0; j <= dd; ++j)
            a[i - dd + j] -= c * d[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (a[i] != 0)
            throw std::logic_error("exact_div_monic: nonzero remainder");
    return quot;
}

void check_same_ring(CycInt const & a, CycInt const & b)
{
    if (a.k() != b.k())
        throw std::invalid_argument("cyclotomic integers with different k");
}

void check_character_order(FieldCtx const & ctx, std::uint32_t k)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("character order k must be odd and at least 3");
    if (ctx.order() % k != 0)
        throw std::invalid_argument("character order k must divide q-1");
}

std::uint32_t exp_mod(std::uint64_t e, std::uint32_t k)
{
    return static_cast<std::uint32_t>(e % k);
}

} // namespace

std::vector<std::int64_t> const & cyclotomic_int(std::uint32_t k)
{
    static std::recursive_mutex mutex;
    static std::map<std::uint32_t, IntPoly> cache;
    if (k == 0)
        throw std::invalid_argument("cyclotomic_int: k must be positive");
    std::lock_guard lock(mutex);
    if (auto it = cache.find(k); it != cache.end())
        return it->second;
    IntPoly r(k + 1, 0);
    r[0] = -1;
    r[k] = 1;
    for (auto d : arith::divisors(k))
        if (d < k)
            r = exact_div_monic(std::move(r), cyclotomic_int(static_cast<std::uint32_t>(d)));
    return cache.emplace(k, std::move(r)).first->second;
}

CyclotomicRing::CyclotomicRing(std::uint32_t k) : k_(k), modulus_(cyclotomic_int(k)) {}

std::shared_ptr<CyclotomicRing const> CyclotomicRing::make(std::uint32_t k)
{
    static std::mutex mutex;
    static std::map<std::uint32_t, std::shared_ptr<CyclotomicRing const>> cache;
    if (k < 1)
        throw std::invalid_argument("CyclotomicRing: k must be positive");
    std::lock_guard lock(mutex);
    auto & slot = cache[k];
    if (!slot)
        slot = std::shared_ptr<CyclotomicRing const>(new CyclotomicRing(k));
    return slot;
}

std::vector<std::int64_t> CyclotomicRing::reduce(std::vector<std::int64_t> c) const
{
    if (c.size() > k_) {
        for (std::size_t i = k_; i < c.size(); ++i)
            c[i % k_] += c[i];
        c.resize(k_);
    }
    std::size_t const n = phi();
    for (std::size_t i = c.size(); i-- > n;) {
        std::int64_t const lead = c[i];
        if (lead == 0)
            continue;
        for (std::size_t j = 0; j <= n; ++j)
            c[i - n + j] -= lead * modulus_[j];
    }
    c.resize(n, 0);
    return c;
}

CycInt::CycInt(RingPtr ring) : ring_(std::move(ring)), coeffs_(ring_->phi(), 0) {}

CycInt::CycInt(RingPtr ring, std::vector<std::int64_t> coeffs) : ring_(std::move(ring))
{
    coeffs_ = ring_->reduce(std::move(coeffs));
}

CycInt CycInt::from_int(RingPtr ring, std::int64_t n)
{
    CycInt r(std::move(ring));
    r.coeffs_[0] = n;
    return r;
}

CycInt CycInt::zeta_power(RingPtr ring, std::int64_t j)
{
    std::vector<std::int64_t> c(ring->k(), 0);
    c[static_cast<std::size_t>(arith::mod_floor(j, ring->k()))] = 1;
    return CycInt(std::move(ring), std::move(c));
}

CycInt CycInt::from_exponent_counts(RingPtr ring, std::vector<std::int64_t> counts)
{
    return CycInt(std::move(ring), std::move(counts));
}

bool CycInt::is_rational_integer() const
{
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](std::int64_t c) { return c == 0; });
}

std::complex<double> CycInt::embed(std::int64_t j) const
{
    long double re = 0, im = 0;
    long double const step = 2 * std::numbers::pi_v<long double> / k();
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0)
            continue;
        long double const angle = step * static_cast<long double>(arith::mod_floor(
                                              static_cast<std::int64_t>(i) * j, k()));
        re += coeffs_[i] * std::cos(angle);
        im += coeffs_[i] * std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::int64_t CycInt::sum_of_coeffs() const
{
    std::int64_t s = 0;
    for (auto c : coeffs_)
        s += c;
    return s;
}

CycInt & CycInt::operator+=(CycInt const & o)
{
    check_same_ring(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    return *this;
}

CycInt & CycInt::operator-=(CycInt const & o)
{
    check_same_ring(*this, o);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    return *this;
}

CycInt operator*(std::int64_t s, CycInt a)
{
    for (auto & c : a.coeffs_)
        c *= s;
    return a;
}

bool operator==(CycInt const & a, CycInt const & b)
{
    return a.k() == b.k() && a.coeffs_ == b.coeffs_;
}

CycInt cyc_mul(CycInt const & a, CycInt const & b)
{
    if (a.k() != b.k())
        throw std::invalid_argument("cyc_mul: mismatched k");
    auto const ca = a.coeffs(), cb = b.coeffs();
    std::vector<std::int64_t> prod(ca.size() + cb.size() - 1, 0);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        if (ca[i] == 0)
            continue;
        for (std::size_t j = 0; j < cb.size(); ++j)
            prod[i + j] += ca[i] * cb[j];
    }
    return CycInt(a.ring(), std::move(prod));
}

CycInt cyc_conj(CycInt const & a)
{
    std::uint32_t const k = a.k();
    std::vector<std::int64_t> c(k, 0);
    auto const ca = a.coeffs();
    for (std::size_t i = 0; i < ca.size(); ++i)
        c[(k - i % k) % k] += ca[i];
    return CycInt(a.ring(), std::move(c));
}

CycInt jacobi_K(FieldCtx const & ctx, std::uint32_t k)
{
    check_character_order(ctx, k);
    std::uint32_t const shift = exp_mod(dlog(ctx, ctx.from_int(4)), k);
    std::vector<std::int64_t> counts(k, 0);
    for (std::uint32_t i = 1; i + 1 < ctx.q(); ++i) {
        FieldElt const y = ctx.sub(ctx.one(), ctx.pow_alpha(i));
        std::uint64_t const e = std::uint64_t{i} + ctx.log_alpha(y) + shift;
        ++counts[exp_mod(e, k)];
    }
    return CycInt::from_exponent_counts(CyclotomicRing::make(k), std::move(counts));
}

CycInt jacobi_with_rho(FieldCtx const & ctx, std::uint32_t k)
{
    check_character_order(ctx, k);
    std::vector<std::int64_t> counts(k, 0);
    for (std::uint32_t i = 1; i + 1 < ctx.q(); ++i) {
        FieldElt const y = ctx.sub(ctx.one(), ctx.pow_alpha(i));
        counts[i % k] += (ctx.log_alpha(y) % 2 == 0) ? 1 : -1;
    }
    return CycInt::from_exponent_counts(CyclotomicRing::make(k), std::move(counts));
}

CycInt character_of_set(FieldCtx const & ctx, std::uint32_t k, std::span<FieldElt const> set)
{
    check_character_order(ctx, k);
    std::vector<std::int64_t> counts(k, 0);
    for (FieldElt x : set)
        if (x.code != 0)
            ++counts[ctx.log_alpha(x) % k];
    return CycInt::from_exponent_counts(CyclotomicRing::make(k), std::move(counts));
}

std::optional<CycInt> eq3_cofactor(CycInt const & k_value, std::int64_t q)
{
    // (K + q) / 2 must be integral, then divisible by 1 - zeta.
    CycInt const shifted = k_value + CycInt::from_int(k_value.ring(), q);
    std::vector<std::int64_t> w(shifted.coeffs().begin(), shifted.coeffs().end());
    for (auto & c : w) {
        if (c % 2 != 0)
            return std::nullopt;
        c /= 2;
    }

    // w(x) - w(1) = (1 - x) u0(x) and Phi(x) - Phi(1) = (1 - x) c(x), so
    // w = (1 - zeta)(u0 - n c) whenever w(1) = n Phi(1); the converse holds
    // because (1 - zeta) meets Z exactly in Phi(1) Z.
    auto div_one_minus_x = [](std::vector<std::int64_t> a) {
        std::int64_t value_at_one = 0;
        for (auto c : a)
            value_at_one += c;
        a[0] -= value_at_one;
        // a = (x - 1) b, solved from the top coefficient down.
        std::vector<std::int64_t> b(a.size() > 1 ? a.size() - 1 : 1, 0);
        std::int64_t carry = 0;
        for (std::size_t i = a.size(); i-- > 1;) {
            carry += a[i];
            b[i - 1] = -carry; // negated: divide by (1 - x)
        }
        return std::pair{b, value_at_one};
    };

    auto const & ring = k_value.ring();
    auto [u0, w_at_one] = div_one_minus_x(w);
    auto [c, phi_at_one] = div_one_minus_x(ring->modulus());
    if (phi_at_one == 0 || w_at_one % phi_at_one != 0)
        return std::nullopt;
    std::int64_t const n = w_at_one / phi_at_one;
    std::vector<std::int64_t> u(ring->phi(), 0);
    for (std::size_t i = 0; i < u0.size() && i < u.size(); ++i)
        u[i] += u0[i];
    for (std::size_t i = 0; i < c.size() && i < u.size(); ++i)
        u[i] -= n * c[i];
    CycInt result(ring, std::move(u));

    CycInt const two_one_minus_zeta =
        2 * (CycInt::from_int(ring, 1) - CycInt::zeta_power(ring, 1));
    if (!(cyc_mul(two_one_minus_zeta, result) == shifted))
        throw std::logic_error("eq3_cofactor: quotient failed verification");
    return result;
}

bool check_eq3(CycInt const & k_value, std::int64_t q)
{
    return eq3_cofactor(k_value, q).has_value();
}

CycInt half_k_plus_one(CycInt const & k_value)
{
    CycInt const s = k_value + CycInt::from_int(k_value.ring(), 1);
    std::vector<std::int64_t> c(s.coeffs().begin(), s.coeffs().end());
    for (auto & x : c) {
        if (x % 2 != 0)
            throw std::logic_error("K + 1 has an odd power-basis coordinate");
        x /= 2;
    }
    return CycInt(k_value.ring(), std::move(c));
}

std::vector<IdealFactor> ideal_factors(std::uint32_t k)
{
    auto const gs = minimal_polys_of_order(k); // validates k
    auto const f = static_cast<unsigned>(arith::mult_order(2, k));
    Gf2Poly const & g0 = gs.front();
    Gf2Poly const x = Gf2Poly::monomial(1);

    std::vector<IdealFactor> out;
    for (auto const & g : gs)
        out.push_back({k, g, f, {}});

    for (auto const & coset : cyclotomic_cosets(k)) {
        if (arith::gcd(coset.front(), k) != 1)
            continue;
        Gf2Poly const y = powmod(x, coset.front(), g0);
        for (auto & ideal : out) {
            if (!ideal.coset.empty())
                continue;
            Gf2Poly value; // Horner evaluation of g at y modulo g0
            for (long i = ideal.g.degree(); i >= 0; --i) {
                value = mulmod(value, y, g0);
                if (ideal.g.coeff(static_cast<std::size_t>(i)))
                    value += Gf2Poly::from_uint(1);
            }
            if (value.is_zero()) {
                ideal.coset = coset;
                std::sort(ideal.coset.begin(), ideal.coset.end());
                break;
            }
        }
    }
    for (auto const & ideal : out)
        if (ideal.coset.empty())
            throw std::logic_error("ideal_factors: factor without a coset");
    return out;
}

Gf2Poly reduce_mod_ideal(CycInt const & a, IdealFactor const & ideal)
{
    if (a.k() != ideal.k)
        throw std::invalid_argument("reduce_mod_ideal: mismatched k");
    Gf2Poly r;
    auto const c = a.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i] % 2 != 0)
            r.set_coeff(i, true);
    return r % ideal.g;
}

bool criterion_holds(CycInt const & k_value, IdealFactor const & ideal)
{
    // chi(-1) = 1 for odd k, so chi(D^c) = (K + 1) / 2 exactly.
    return reduce_mod_ideal(half_k_plus_one(k_value), ideal).is_zero();
}

bool criterion(FieldCtx const & ctx, std::uint32_t k, IdealFactor const & ideal)
{
    return criterion_holds(jacobi_K(ctx, k), ideal);
}

} // namespace slce
