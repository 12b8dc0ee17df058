#include "slce/arith.hpp"

#include <algorithm>
#include <climits>
#include <cmath>
#include <stdexcept>

namespace slce::arith {

bool is_prime(u64 n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (u64 d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::vector<std::pair<u64, unsigned>> factorize(u64 n)
{
    std::vector<std::pair<u64, unsigned>> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        unsigned e = 0;
        while (n % d == 0) {
            n /= d;
            ++e;
        }
        out.emplace_back(d, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<u64> divisors(u64 n)
{
    std::vector<u64> out{1};
    for (auto [prime, e] : factorize(n)) {
        std::size_t const count = out.size();
        u64 pk = 1;
        for (unsigned i = 0; i < e; ++i) {
            pk *= prime;
            for (std::size_t j = 0; j < count; ++j)
                out.push_back(out[j] * pk);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

u64 euler_phi(u64 n)
{
    u64 r = n;
    for (auto [prime, e] : factorize(n))
        r = r / prime * (prime - 1);
    return r;
}

u64 gcd(u64 a, u64 b)
{
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

u64 mulmod(u64 a, u64 b, u64 mod)
{
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % mod);
}

u64 powmod(u64 base, u64 exp, u64 mod)
{
    if (mod == 1)
        return 0;
    u64 r = 1;
    base %= mod;
    while (exp != 0) {
        if (exp & 1)
            r = mulmod(r, base, mod);
        base = mulmod(base, base, mod);
        exp >>= 1;
    }
    return r;
}

u64 mult_order(u64 a, u64 n)
{
    if (n == 0 || gcd(a % n, n) != 1)
        throw std::invalid_argument("mult_order: arguments not coprime");
    if (n == 1)
        return 1;
    u64 order = euler_phi(n);
    for (auto [prime, e] : factorize(order)) {
        for (unsigned i = 0; i < e; ++i) {
            if (powmod(a, order / prime, n) != 1)
                break;
            order /= prime;
        }
    }
    return order;
}

i64 ipow(i64 base, unsigned exp)
{
    __int128 r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        r *= base;
        if (r > INT64_MAX || r < INT64_MIN)
            throw std::overflow_error("ipow: result exceeds 64 bits");
    }
    return static_cast<i64>(r);
}

std::pair<u64, unsigned> prime_power(u64 q)
{
    if (q < 2)
        return {0, 0};
    auto f = factorize(q);
    if (f.size() != 1)
        return {0, 0};
    return {f[0].first, f[0].second};
}

u64 isqrt(u64 n)
{
    if (n < 2)
        return n;
    u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(n)));
    // Compare by division so that r * r never overflows.
    while (r > n / r)
        --r;
    while (r + 1 <= n / (r + 1))
        ++r;
    return r;
}

} // namespace slce::arith
