#include "slce/predict.hpp"

#include <sstream>
#include <stdexcept>

#include "slce/arith.hpp"

namespace slce {

namespace {

using arith::i64;
using arith::mod_floor;
using arith::u64;

int parity_sign(i64 exponent)
{
    return mod_floor(exponent, 2) == 0 ? 1 : -1;
}

void require_odd_k(u64 k)
{
    if (k < 3 || k % 2 == 0)
        throw std::invalid_argument("k must be odd and at least 3");
}

} // namespace

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::divides:
        return "divides";
    case Verdict::not_divides:
        return "not_divides";
    case Verdict::indeterminate:
        return "indeterminate";
    }
    return "indeterminate";
}

std::string Prediction::target() const
{
    std::ostringstream os;
    if (full_factor)
        os << "1+x+...+x^" << (k - 1);
    else
        os << "each minimal polynomial of an element of order " << k;
    return os.str();
}

u64 subgroup_index(u64 k, u64 p)
{
    if (k == 0 || arith::gcd(p, k) != 1)
        throw std::invalid_argument("subgroup_index: gcd(p, k) must be 1");
    return arith::euler_phi(k) / arith::mult_order(p, k);
}

PureCaseParams pure_case_params(u64 p, u64 m, u64 k)
{
    require_odd_k(k);
    if (arith::gcd(p, k) != 1)
        throw std::invalid_argument("pure_case_params: gcd(p, k) must be 1");
    PureCaseParams out{p, m, k, {}, {}};
    u64 const ord = arith::mult_order(p, k);
    for (u64 x = 1; x <= ord; ++x) {
        if (arith::powmod(p, x, k) == k - 1) {
            out.t = x;
            break;
        }
    }
    if (out.t && m % (2 * *out.t) == 0)
        out.s = m / (2 * *out.t);
    return out;
}

int pure_jacobi_sign(PureCaseParams const & pp)
{
    if (!pp.applicable())
        throw std::invalid_argument("pure_jacobi_sign: pure-case parameters not applicable");
    // Parity of (p^t + 1) / (2k): p^t + 1 is a multiple of 2k; it is an even
    // multiple exactly when 4k divides it.
    u64 const pt_plus_one = (arith::powmod(pp.p, *pp.t, 4 * pp.k) + 1) % (4 * pp.k);
    i64 const ratio_parity = pt_plus_one == 0 ? 0 : 1;
    i64 exponent = 1 + ratio_parity * static_cast<i64>(*pp.s);
    if (pp.p % 4 == 3)
        exponent += static_cast<i64>(pp.m / 2);
    return parity_sign(exponent);
}

Prediction predict_pure(u64 p, u64 m, u64 k)
{
    PureCaseParams const pp = pure_case_params(p, m, k);
    if (!pp.t)
        throw std::invalid_argument("predict_pure: no power of p is -1 modulo k");
    if (!pp.s)
        throw std::invalid_argument("predict_pure: m is not a multiple of 2t");
    u64 const t = *pp.t, s = *pp.s;

    Prediction out;
    out.p = p;
    out.m = m;
    out.k = k;
    out.regime = "pure";
    out.params = {{"t", static_cast<i64>(t)}, {"s", static_cast<i64>(s)},
                  {"p_mod_4", static_cast<i64>(p % 4)},
                  {"jacobi_sign", pure_jacobi_sign(pp)}};

    bool divides = false;
    std::ostringstream trace;
    trace << "p=" << p << " = " << p % 4 << " (mod 4), t=" << t << ", s=" << s << ": ";
    if (p % 4 == 1) {
        divides = s % 2 == 0;
        trace << (divides ? "s even" : "s odd");
    } else {
        bool const s_even = s % 2 == 0;
        bool const ts_odd = (t * s) % 2 == 1;
        divides = s_even || ts_odd;
        trace << (s_even ? "s even" : ts_odd ? "ts odd" : "s odd and ts even");
    }
    out.verdict = divides ? Verdict::divides : Verdict::not_divides;
    trace << " -> " << to_string(out.verdict);
    out.condition_trace = trace.str();
    return out;
}

u64 class_number(u64 l)
{
    if (l % 4 != 3)
        throw std::invalid_argument("class_number: l must be 3 mod 4");
    if (l <= 3)
        throw std::invalid_argument("class_number: l must exceed 3");
    // Reduced forms (A, B, C): B^2 - 4AC = -l, |B| <= A <= C, and B >= 0
    // whenever |B| = A or A = C. Reduction forces 3A^2 <= l.
    u64 count = 0;
    for (u64 a = 1; 3 * a * a <= l; ++a) {
        for (i64 b = -static_cast<i64>(a); b <= static_cast<i64>(a); ++b) {
            u64 const b2 = static_cast<u64>(b * b);
            if ((b2 + l) % (4 * a) != 0)
                continue;
            u64 const c = (b2 + l) / (4 * a);
            if (c < a)
                continue;
            u64 const abs_b = static_cast<u64>(b < 0 ? -b : b);
            if ((abs_b == a || a == c) && b < 0)
                continue;
            if (arith::gcd(arith::gcd(a, abs_b), c) != 1)
                continue;
            ++count;
        }
    }
    return count;
}

Representation represent(u64 p, u64 l, u64 h, u64 e)
{
    if ((e + h) % 2 != 0)
        throw std::invalid_argument("represent: e + h must be even");
    i64 const n = 4 * arith::ipow(static_cast<i64>(p), static_cast<unsigned>(h));
    // a = -2 p^((e+h)/2) (mod l)
    i64 const target = mod_floor(
        -2 * static_cast<i64>(arith::powmod(p, (e + h) / 2, l)), static_cast<i64>(l));

    std::vector<Representation> found;
    u64 const a_max = arith::isqrt(static_cast<u64>(n));
    for (u64 a = 1; a <= a_max; ++a) {
        u64 const rest = static_cast<u64>(n) - a * a;
        if (rest % l != 0)
            continue;
        u64 const b2 = rest / l;
        u64 const b = arith::isqrt(b2);
        if (b * b != b2 || b == 0)
            continue;
        if (a % 2 != b % 2 || a % p == 0 || b % p == 0)
            continue;
        for (i64 sign : {1, -1}) {
            i64 const sa = sign * static_cast<i64>(a);
            if (mod_floor(sa, static_cast<i64>(l)) == target)
                found.push_back({sa, static_cast<i64>(b)});
        }
    }
    if (found.empty())
        throw std::domain_error("represent: no solution of 4p^h = a^2 + l b^2 with the side conditions");
    for (auto const & r : found)
        if (r.a != found.front().a || r.b_abs != found.front().b_abs)
            throw std::domain_error("represent: side conditions do not determine a uniquely");
    return found.front();
}

Index2Params index2_params(u64 p, u64 m, u64 l, u64 r)
{
    if (!arith::is_prime(p) || p == 2)
        throw std::invalid_argument("index2: p must be an odd prime");
    if (!arith::is_prime(l))
        throw std::invalid_argument("index2: l must be prime");
    if (l % 8 != 7)
        throw std::invalid_argument("index2: l must be 7 mod 8");
    if (r == 0)
        throw std::invalid_argument("index2: r must be positive");
    if (p == l)
        throw std::invalid_argument("index2: p must differ from l");
    Index2Params ip;
    ip.l = l;
    ip.r = r;
    ip.k = static_cast<u64>(arith::ipow(static_cast<i64>(l), static_cast<unsigned>(r)));
    if (subgroup_index(ip.k, p) != 2)
        throw std::invalid_argument("index2: [(Z/kZ)^* : <p>] must be 2");
    if (pure_case_params(p, m, ip.k).t)
        throw std::invalid_argument("index2: some power of p is -1 mod k (pure case)");
    ip.e = arith::euler_phi(ip.k) / 2;
    if (m == 0 || m % ip.e != 0)
        throw std::invalid_argument("index2: m must be a positive multiple of phi(k)/2");
    ip.s = m / ip.e;
    ip.h = class_number(l);
    if (ip.h % 2 == 0)
        throw std::logic_error("index2: class number is even, (1-h)s/2 not integral");
    Representation const rep = represent(p, l, ip.h, ip.e);
    ip.a = rep.a;
    ip.b_abs = rep.b_abs;
    if (ip.a % 2 != 0 || ip.b_abs % 2 != 0)
        throw std::logic_error("index2: a and b must both be even");
    return ip;
}

Prediction predict_index2(u64 p, u64 m, u64 l, u64 r, Index2Sign sign_rule)
{
    Index2Params const ip = index2_params(p, m, l, r);
    i64 const s = static_cast<i64>(ip.s);
    i64 const e = static_cast<i64>(ip.e);
    i64 const h = static_cast<i64>(ip.h);

    i64 exponent = 0;
    std::ostringstream trace;
    if (sign_rule == Index2Sign::evaluated) {
        // p^((e-h)s/2) = (-1)^((e-h)s/2) (mod 4) when p = 3 (mod 4).
        exponent = s - 1 + (p % 4 == 3 ? (e - h) * s / 2 : 0);
        trace << "sign exponent s-1" << (p % 4 == 3 ? "+(e-h)s/2" : "") << " = " << exponent;
    } else if (p % 4 == 1) {
        exponent = s - 1 - static_cast<i64>(p - 1) * s / 4;
        trace << "sign exponent (as printed) s-1-(p-1)s/4 = " << exponent;
    } else {
        exponent = s - 1 - static_cast<i64>(ip.r) * s + e * s + (1 - h) * s / 2;
        trace << "sign exponent (as printed) s-1-rs+es+(1-h)s/2 = " << exponent;
    }
    int const sign = parity_sign(exponent);

    auto branch = [&](i64 b, i64 & value_mod4) {
        i64 const half = mod_floor((ip.a + b) / 2, 4);
        i64 v = 1;
        for (i64 i = 0; i < s; ++i)
            v = v * half % 4;
        value_mod4 = mod_floor(sign * v, 4);
        return value_mod4 == 3;
    };
    i64 plus_val = 0, minus_val = 0;
    bool const plus = branch(ip.b_abs, plus_val);
    bool const minus = branch(-ip.b_abs, minus_val);

    trace << "; p = " << p % 4 << " (mod 4); (a+b)/2 = " << (ip.a + ip.b_abs) / 2 << " or " << (ip.a - ip.b_abs) / 2
          << "; (-1)^E((a+b)/2)^s = " << plus_val << " or " << minus_val << " (mod 4)";

    Prediction out;
    out.p = p;
    out.m = m;
    out.k = ip.k;
    out.regime = "index2";
    out.full_factor = ip.r == 1;
    out.branches = std::pair{plus, minus};
    out.params = {{"l", static_cast<i64>(ip.l)}, {"r", static_cast<i64>(ip.r)},
                  {"e", static_cast<i64>(ip.e)}, {"s", s},
                  {"h", static_cast<i64>(ip.h)}, {"a", ip.a},
                  {"b_abs", ip.b_abs}, {"sign_exponent", exponent}};
    if (plus == minus) {
        out.verdict = plus ? Verdict::divides : Verdict::not_divides;
        trace << " -> " << to_string(out.verdict);
    } else {
        out.verdict = Verdict::indeterminate;
        trace << " -> indeterminate: the two signs of b disagree";
    }
    out.condition_trace = trace.str();
    return out;
}

std::optional<Prediction> predict(u64 p, u64 m, u64 k)
{
    require_odd_k(k);
    if (arith::gcd(p, k) != 1 || arith::powmod(p, m, k) != 1)
        throw std::invalid_argument("k must divide p^m - 1");
    PureCaseParams const pp = pure_case_params(p, m, k);
    if (pp.t)
        return predict_pure(p, m, k);
    auto const f = arith::factorize(k);
    if (f.size() != 1)
        return std::nullopt;
    u64 const l = f[0].first, r = f[0].second;
    if (l % 8 != 7 || subgroup_index(k, p) != 2)
        return std::nullopt;
    if (m % (arith::euler_phi(k) / 2) != 0)
        return std::nullopt;
    return predict_index2(p, m, l, r);
}

} // namespace slce
