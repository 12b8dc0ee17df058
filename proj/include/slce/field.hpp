#pragma once

// GF(p^m) with a canonical modulus, a canonical primitive element and full
// power/discrete-log tables. A FieldCtx is immutable once built.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace slce {

inline constexpr std::uint64_t default_max_field_size = 2'000'000;

/// Element of GF(p^m) stored as its power-basis coordinates packed in base p:
/// code = c_0 + c_1 p + ... + c_{m-1} p^{m-1}, every c_i in [0, p).
struct FieldElt
{
    std::uint32_t code = 0;

    friend bool operator==(FieldElt, FieldElt) = default;
    friend auto operator<=>(FieldElt, FieldElt) = default;
};

class FieldCtx
{
  public:
    std::uint32_t p() const { return p_; }
    unsigned m() const { return m_; }
    std::uint32_t q() const { return q_; }
    /// Multiplicative group order q - 1.
    std::uint32_t order() const { return q_ - 1; }

    /// Monic modulus, coefficients c_0 .. c_m (c_m = 1).
    std::vector<std::uint32_t> const & modulus() const { return modulus_; }
    FieldElt alpha() const { return pow_table_[1 % order()]; }

    FieldElt zero() const { return {0}; }
    FieldElt one() const { return {1}; }

    std::vector<std::uint32_t> coords(FieldElt x) const;
    FieldElt from_coords(std::span<std::uint32_t const> c) const;

    FieldElt add(FieldElt a, FieldElt b) const;
    FieldElt sub(FieldElt a, FieldElt b) const;
    FieldElt neg(FieldElt a) const;
    FieldElt mul(FieldElt a, FieldElt b) const;
    FieldElt inv(FieldElt a) const;
    /// Embeds an integer through the prime field.
    FieldElt from_int(std::int64_t n) const;

    /// Table lookups without argument checks.
    FieldElt pow_alpha(std::uint32_t t) const { return pow_table_[t]; }
    std::uint32_t log_alpha(FieldElt x) const { return log_table_[x.code]; }

    /// Human-readable polynomial form in the variable x, e.g. "x^2+1".
    std::string modulus_string() const;
    std::string elt_string(FieldElt x) const;

  private:
    friend FieldCtx build_field(std::uint32_t p, unsigned m, std::uint64_t max_q);

    std::uint32_t p_ = 0;
    unsigned m_ = 0;
    std::uint32_t q_ = 0;
    std::vector<std::uint32_t> modulus_;
    std::vector<FieldElt> pow_table_;      // t -> alpha^t, t in [0, q-2]
    std::vector<std::uint32_t> log_table_; // code -> t; entry 0 unused
};

/// Builds GF(p^m) with the lexicographically smallest monic irreducible
/// modulus and primitive element (tuples compared constant term first).
/// Throws std::invalid_argument on non-prime or even p, m == 0, or q > max_q.
FieldCtx build_field(std::uint32_t p, unsigned m,
                     std::uint64_t max_q = default_max_field_size);

/// alpha^(t mod (q-1)), for any integer t.
FieldElt power(FieldCtx const & ctx, std::int64_t t);

/// Exponent in [0, q-2] with alpha^t = x. Throws on x = 0.
std::uint32_t dlog(FieldCtx const & ctx, FieldElt x);

/// Absolute trace x + x^p + ... + x^(p^(m-1)) as a residue mod p.
std::uint32_t trace(FieldCtx const & ctx, FieldElt x);

} // namespace slce
