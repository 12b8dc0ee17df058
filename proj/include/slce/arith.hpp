#pragma once

// Small-integer number theory used throughout: primality, factorization,
// Euler phi, multiplicative orders. All inputs are desk-scale (< 2^62).

#include <cstdint>
#include <utility>
#include <vector>

namespace slce::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

bool is_prime(u64 n);

/// Prime factorization by trial division, ascending primes.
std::vector<std::pair<u64, unsigned>> factorize(u64 n);

/// All positive divisors, ascending.
std::vector<u64> divisors(u64 n);

u64 euler_phi(u64 n);

u64 gcd(u64 a, u64 b);

u64 mulmod(u64 a, u64 b, u64 mod);
u64 powmod(u64 base, u64 exp, u64 mod);

/// Multiplicative order of a modulo n; requires gcd(a, n) = 1 and n >= 1.
u64 mult_order(u64 a, u64 n);

/// Checked integer power; throws std::overflow_error when the result
/// does not fit in i64.
i64 ipow(i64 base, unsigned exp);

/// Returns (p, m) when q = p^m for a prime p, otherwise (0, 0).
std::pair<u64, unsigned> prime_power(u64 q);

/// Floor of the square root.
u64 isqrt(u64 n);

/// Least non-negative residue of a modulo n (n > 0).
constexpr i64 mod_floor(i64 a, i64 n)
{
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

} // namespace slce::arith
