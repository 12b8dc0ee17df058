#pragma once

// Exact arithmetic in Z[zeta_k] (power basis modulo the k-th cyclotomic
// polynomial), characters of order k on GF(q)^*, the Jacobi sums
// K(chi) = chi(4) J(chi, chi) and J(chi, rho), and reduction modulo the
// prime ideals above 2.
//
// chi is always the character with chi(alpha) = zeta_k for the canonical
// primitive element alpha of the FieldCtx; rho is the quadratic character.

#include <complex>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "slce/field.hpp"
#include "slce/gf2poly.hpp"

namespace slce {

/// Integer coefficients of the k-th cyclotomic polynomial, lowest first.
std::vector<std::int64_t> const & cyclotomic_int(std::uint32_t k);

class CyclotomicRing
{
  public:
    static std::shared_ptr<CyclotomicRing const> make(std::uint32_t k);

    std::uint32_t k() const { return k_; }
    std::size_t phi() const { return modulus_.size() - 1; }
    std::vector<std::int64_t> const & modulus() const { return modulus_; }

    /// Reduces an exponent-indexed coefficient vector (any length; exponents
    /// are first folded mod k) to power-basis coordinates of length phi.
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> by_exponent) const;

  private:
    explicit CyclotomicRing(std::uint32_t k);
    std::uint32_t k_;
    std::vector<std::int64_t> modulus_;
};

using RingPtr = std::shared_ptr<CyclotomicRing const>;

class CycInt
{
  public:
    explicit CycInt(RingPtr ring);
    CycInt(RingPtr ring, std::vector<std::int64_t> coeffs);

    static CycInt from_int(RingPtr ring, std::int64_t n);
    static CycInt zeta_power(RingPtr ring, std::int64_t j);
    /// sum_j counts[j] zeta^j, j taken mod k.
    static CycInt from_exponent_counts(RingPtr ring, std::vector<std::int64_t> counts);

    std::uint32_t k() const { return ring_->k(); }
    RingPtr const & ring() const { return ring_; }
    std::span<std::int64_t const> coeffs() const { return coeffs_; }

    bool is_rational_integer() const;
    /// Image under zeta_k -> exp(2 pi i j / k).
    std::complex<double> embed(std::int64_t j = 1) const;
    /// Value at zeta = 1 of the power-basis polynomial.
    std::int64_t sum_of_coeffs() const;

    CycInt & operator+=(CycInt const & o);
    CycInt & operator-=(CycInt const & o);
    friend CycInt operator+(CycInt a, CycInt const & b) { return a += b; }
    friend CycInt operator-(CycInt a, CycInt const & b) { return a -= b; }
    friend CycInt operator*(std::int64_t s, CycInt a);
    friend bool operator==(CycInt const & a, CycInt const & b);

  private:
    RingPtr ring_;
    std::vector<std::int64_t> coeffs_;
};

/// Exact product; throws std::invalid_argument on mismatched k.
CycInt cyc_mul(CycInt const & a, CycInt const & b);
/// Complex conjugation zeta -> zeta^{-1}.
CycInt cyc_conj(CycInt const & a);

/// K(chi) = chi(4) sum_{i=1}^{q-2} chi(alpha^i) chi(1 - alpha^i).
/// Requires k odd, k >= 3, k | q-1.
CycInt jacobi_K(FieldCtx const & ctx, std::uint32_t k);
/// J(chi, rho) = sum_{i=1}^{q-2} chi(alpha^i) rho(1 - alpha^i).
CycInt jacobi_with_rho(FieldCtx const & ctx, std::uint32_t k);

/// chi(S) = sum over the nonzero elements x of S of chi(x).
CycInt character_of_set(FieldCtx const & ctx, std::uint32_t k, std::span<FieldElt const> set);

/// u with (k_value + q) = 2 (1 - zeta_k) u, when one exists in Z[zeta_k].
std::optional<CycInt> eq3_cofactor(CycInt const & k_value, std::int64_t q);
/// True iff k_value = -q modulo 2 (1 - zeta_k).
bool check_eq3(CycInt const & k_value, std::int64_t q);

/// (K + 1) / 2 coordinate-wise; throws std::logic_error if any coordinate
/// of K + 1 is odd.
CycInt half_k_plus_one(CycInt const & k_value);

/// Prime ideal P above 2 in Z[zeta_k], given by an irreducible factor g of
/// the k-th cyclotomic polynomial mod 2. Reduction mod P sends zeta_k to
/// x mod g.
struct IdealFactor
{
    std::uint32_t k = 0;
    Gf2Poly g;
    unsigned f = 0; ///< residue degree, ord_k(2)
    /// Exponents j with g(beta0^j) = 0, where beta0 = x mod g0 for the first
    /// factor g0 in canonical order.
    std::vector<std::uint32_t> coset;
};

/// The phi(k)/f prime ideals above 2, in canonical order of g.
std::vector<IdealFactor> ideal_factors(std::uint32_t k);

/// Residue of a in GF(2)[x]/(g), as a polynomial of degree < f.
Gf2Poly reduce_mod_ideal(CycInt const & a, IdealFactor const & ideal);

/// Divisibility criterion: true iff (K + 1)/2 lies in P.
bool criterion_holds(CycInt const & k_value, IdealFactor const & ideal);
/// Same, computing K(chi) from the field.
bool criterion(FieldCtx const & ctx, std::uint32_t k, IdealFactor const & ideal);

} // namespace slce
