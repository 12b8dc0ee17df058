#include "slce/gaussnum.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "slce/arith.hpp"

namespace slce {

ComplexVal gauss_sum(FieldCtx const & ctx, std::uint32_t n, std::uint32_t j)
{
    if (n == 0 || ctx.order() % n != 0)
        throw std::invalid_argument("gauss_sum: character order must divide q-1");
    if (j == 0 || j >= n)
        throw std::invalid_argument("gauss_sum: character index must lie in [1, n-1]");
    // Phase of each term as an exact fraction num / (n p).
    std::uint64_t const denom = std::uint64_t{n} * ctx.p();
    long double const step = 2 * std::numbers::pi_v<long double> / static_cast<long double>(denom);
    long double re = 0, im = 0;
    for (std::uint32_t t = 0; t < ctx.order(); ++t) {
        std::uint64_t const mult = std::uint64_t{j} * t % n;
        std::uint64_t const add = trace(ctx, ctx.pow_alpha(t));
        std::uint64_t const num = (mult * ctx.p() + add * n) % denom;
        long double const angle = step * static_cast<long double>(num);
        re += std::cos(angle);
        im += std::sin(angle);
    }
    return {static_cast<double>(re), static_cast<double>(im)};
}

std::vector<ComplexVal> gauss_sums_all(FieldCtx const & ctx)
{
    using cld = std::complex<long double>;
    std::uint32_t const v = ctx.order();
    long double const two_pi = 2 * std::numbers::pi_v<long double>;
    std::vector<cld> roots(v), additive(ctx.p());
    for (std::uint32_t u = 0; u < v; ++u)
        roots[u] = std::polar(1.0L, two_pi * u / v);
    for (std::uint32_t a = 0; a < ctx.p(); ++a)
        additive[a] = std::polar(1.0L, two_pi * a / ctx.p());
    std::vector<cld> add_at(v);
    for (std::uint32_t t = 0; t < v; ++t)
        add_at[t] = additive[trace(ctx, ctx.pow_alpha(t))];

    std::vector<ComplexVal> out(v);
    for (std::uint32_t j = 0; j < v; ++j) {
        cld acc = 0;
        std::uint32_t idx = 0;
        for (std::uint32_t t = 0; t < v; ++t) {
            acc += roots[idx] * add_at[t];
            idx += j;
            if (idx >= v)
                idx -= v;
        }
        out[j] = {static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    }
    return out;
}

IdentityReport check_identities(FieldCtx const & ctx, std::uint32_t k)
{
    return check_identities(ctx, jacobi_K(ctx, k));
}

IdentityReport check_identities(FieldCtx const & ctx, CycInt const & k_value)
{
    std::uint32_t const k = k_value.k();
    if (k < 3 || k % 2 == 0 || ctx.order() % k != 0)
        throw std::invalid_argument("check_identities: k must be odd, >= 3 and divide q-1");

    IdentityReport r;
    r.k = k;
    double const root_q = std::sqrt(static_cast<double>(ctx.q()));
    ComplexVal const g_rho = gauss_sum(ctx, 2, 1);
    r.g_chi = gauss_sum(ctx, k, 1);
    // chi rho (alpha^t) = exp(2 pi i t (k + 2) / (2k))
    ComplexVal const g_chi_rho = gauss_sum(ctx, 2 * k, (k + 2) % (2 * k));
    r.k_via_gauss = g_rho * r.g_chi / g_chi_rho;
    r.k_exact = k_value.embed(1);
    r.k_rel_error = std::abs(r.k_via_gauss - r.k_exact) / root_q;

    std::uint64_t const ord = arith::mult_order(ctx.p(), k);
    std::optional<std::uint64_t> t;
    for (std::uint64_t x = 1; x <= ord; ++x) {
        if (arith::powmod(ctx.p(), x, k) == k - 1) {
            t = x;
            break;
        }
    }
    r.pure_predicted = t.has_value();
    r.pure_observed = std::abs(r.g_chi.imag()) <= gauss_rel_tolerance * root_q;
    if (t) {
        std::uint64_t const s = ctx.m() / (2 * *t);
        // (p^t + 1) s / k, evaluated mod 2 without forming p^t.
        std::uint64_t const pt1_over_k = (arith::powmod(ctx.p(), *t, 2 * k) + 1) % (2 * k) == 0
                                             ? 0
                                             : 1; // parity of (p^t+1)/k
        std::uint64_t const exponent = (s - 1) + pt1_over_k * s;
        int const sign = exponent % 2 == 0 ? 1 : -1;
        r.pure_sign_expected = sign;
        double const expected = sign * root_q;
        r.pure_sign_ok = std::abs(r.g_chi - ComplexVal(expected, 0)) <= gauss_rel_tolerance * root_q;
    }
    return r;
}

} // namespace slce
