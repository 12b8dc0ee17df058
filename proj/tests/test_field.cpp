#include <doctest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "slce/arith.hpp"
#include "slce/field.hpp"

using slce::FieldElt;

namespace {

// Smallest primitive root mod p by exhaustive order computation.
std::uint32_t smallest_primitive_root(std::uint32_t p)
{
    for (std::uint32_t g = 2; g < p; ++g) {
        std::uint32_t x = g, ord = 1;
        while (x != 1) {
            x = x * g % p;
            ++ord;
        }
        if (ord == p - 1)
            return g;
    }
    return 1; // p = 2 or p = 3 handled by callers
}

// Monic polynomial of degree m has no factor of degree <= m/2 (m <= 3:
// no roots suffices).
bool has_no_root(std::uint32_t p, std::vector<std::uint32_t> const & c)
{
    for (std::uint32_t x = 0; x < p; ++x) {
        std::uint64_t v = 0;
        for (std::size_t i = c.size(); i-- > 0;)
            v = (v * x + c[i]) % p;
        if (v == 0)
            return false;
    }
    return true;
}

} // namespace

TEST_SUITE("field")
{
    TEST_CASE("canonical primitive element of prime fields")
    {
        auto const prime = oracle::sieve(400);
        for (std::uint32_t p = 5; p < 400; p += 2) {
            if (!prime[p])
                continue;
            auto const ctx = slce::build_field(p, 1);
            REQUIRE(ctx.q() == p);
            CHECK(ctx.modulus() == std::vector<std::uint32_t>{0, 1});
            CHECK(ctx.alpha().code == smallest_primitive_root(p));
        }
        CHECK(slce::build_field(3, 1).alpha().code == 2);
        CHECK(slce::build_field(5, 1).alpha().code == 2);
        CHECK(slce::build_field(7, 1).alpha().code == 3);
    }

    TEST_CASE("canonical modulus is the first irreducible, constant term most significant")
    {
        for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
            for (unsigned m : {2u, 3u}) {
                // Enumerate tuples (c0, c1, ..., c_{m-1}) with c0 varying slowest.
                std::vector<std::uint32_t> first;
                std::uint32_t total = 1;
                for (unsigned i = 0; i < m; ++i)
                    total *= p;
                for (std::uint32_t n = 0; n < total && first.empty(); ++n) {
                    std::vector<std::uint32_t> c(m + 1, 0);
                    std::uint32_t r = n;
                    for (unsigned i = m; i-- > 0;) {
                        c[i] = r % p;
                        r /= p;
                    }
                    c[m] = 1;
                    if (has_no_root(p, c))
                        first = c;
                }
                auto const ctx = slce::build_field(p, m);
                CHECK(ctx.modulus() == first);
            }
        }
        auto const f9 = slce::build_field(3, 2);
        CHECK(f9.modulus_string() == "x^2+1");
        CHECK(f9.elt_string(f9.alpha()) == "x+1");
    }

    TEST_CASE("alpha is primitive and the log table is a bijection, q <= 10^4")
    {
        for (auto [p, m] : oracle::odd_prime_powers(10000)) {
            auto const ctx = slce::build_field(p, m);
            std::uint32_t const v = ctx.order();
            for (auto [r, e] : slce::arith::factorize(v))
                REQUIRE(oracle::coord_pow(ctx, ctx.alpha(), v / r).code != 1);
            REQUIRE(oracle::coord_pow(ctx, ctx.alpha(), v).code == 1);
            std::vector<bool> seen(ctx.q(), false);
            for (std::uint32_t t = 0; t < v; ++t) {
                FieldElt const x = slce::power(ctx, t);
                REQUIRE(x.code != 0);
                REQUIRE(!seen[x.code]);
                seen[x.code] = true;
                REQUIRE(slce::dlog(ctx, x) == t);
            }
            REQUIRE(slce::dlog(ctx, ctx.one()) == 0);
        }
    }

    TEST_CASE("multiplication agrees with schoolbook products")
    {
        for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 2}, {3, 5}, {5, 3}, {7, 2}, {13, 2}, {3, 7}}) {
            auto const ctx = slce::build_field(p, m);
            std::uint32_t const step = std::max<std::uint32_t>(1, ctx.q() / 97);
            for (std::uint32_t a = 0; a < ctx.q(); a += step)
                for (std::uint32_t b = 0; b < ctx.q(); b += step + 1)
                    REQUIRE(ctx.mul({a}, {b}) == oracle::coord_mul(ctx, {a}, {b}));
            for (std::uint32_t a = 1; a < ctx.q(); a += step)
                REQUIRE(ctx.mul({a}, ctx.inv({a})) == ctx.one());
        }
    }

    TEST_CASE("modulus divides x^(p^m) - x")
    {
        for (auto [p, m] : oracle::odd_prime_powers(20000)) {
            if (m == 1)
                continue; // modulus x divides x^p - x
            auto const ctx = slce::build_field(p, m);
            std::vector<std::uint32_t> c(m, 0);
            c[1] = 1;
            FieldElt const x = ctx.from_coords(c);
            REQUIRE(oracle::coord_pow(ctx, x, ctx.q()) == x);
        }
    }

    TEST_CASE("power and dlog examples over GF(5)")
    {
        auto const ctx = slce::build_field(5, 1);
        CHECK(slce::power(ctx, 0).code == 1);
        CHECK(slce::power(ctx, 1).code == 2);
        CHECK(slce::power(ctx, 6).code == 4);
        CHECK(slce::power(ctx, -1).code == 3);
        CHECK(slce::dlog(ctx, {1}) == 0);
        CHECK(slce::dlog(ctx, {2}) == 1);
        CHECK(slce::dlog(ctx, {4}) == 2);
        CHECK_THROWS_AS(slce::dlog(ctx, ctx.zero()), std::domain_error);
    }

    TEST_CASE("GF(9) primitive element has order 8")
    {
        auto const ctx = slce::build_field(3, 2);
        CHECK(ctx.q() == 9);
        std::set<std::uint32_t> powers;
        for (unsigned t = 0; t < 8; ++t)
            powers.insert(oracle::coord_pow(ctx, ctx.alpha(), t).code);
        CHECK(powers.size() == 8);
    }

    TEST_CASE("trace examples and the Frobenius definition")
    {
        CHECK(slce::trace(slce::build_field(5, 1), {3}) == 3);
        auto const f9 = slce::build_field(3, 2);
        CHECK(slce::trace(f9, f9.zero()) == 0);
        CHECK(slce::trace(f9, f9.one()) == 2);

        for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{3, 4}, {5, 3}, {7, 2}, {3, 6}}) {
            auto const ctx = slce::build_field(p, m);
            for (auto x : oracle::nonzero(ctx)) {
                FieldElt sum = ctx.zero(), frob = x;
                for (unsigned i = 0; i < m; ++i) {
                    sum = ctx.add(sum, frob);
                    frob = oracle::coord_pow(ctx, frob, p);
                }
                auto const c = ctx.coords(sum);
                for (unsigned i = 1; i < m; ++i)
                    REQUIRE(c[i] == 0);
                REQUIRE(slce::trace(ctx, x) == c[0]);
            }
        }
    }

    TEST_CASE("trace is additive")
    {
        auto const ctx = slce::build_field(5, 4);
        for (std::uint32_t a = 0; a < ctx.q(); a += 7)
            for (std::uint32_t b = 0; b < ctx.q(); b += 11)
                REQUIRE(slce::trace(ctx, ctx.add({a}, {b})) ==
                        (slce::trace(ctx, {a}) + slce::trace(ctx, {b})) % 5);
    }

    TEST_CASE("from_int and negation")
    {
        auto const ctx = slce::build_field(7, 2);
        CHECK(ctx.from_int(-4) == ctx.from_int(3));
        CHECK(ctx.add(ctx.from_int(4), ctx.neg(ctx.from_int(4))) == ctx.zero());
        CHECK(ctx.sub(ctx.one(), ctx.one()) == ctx.zero());
    }

    TEST_CASE("invalid parameters")
    {
        CHECK_THROWS_AS(slce::build_field(2, 1), std::invalid_argument);
        CHECK_THROWS_AS(slce::build_field(9, 1), std::invalid_argument);
        CHECK_THROWS_AS(slce::build_field(3, 0), std::invalid_argument);
        CHECK_THROWS_AS(slce::build_field(3, 20), std::invalid_argument);
        CHECK_THROWS_AS(slce::build_field(101, 3, 1000), std::invalid_argument);
    }
}
