#pragma once

// Dense bit-packed polynomials over GF(2) and the operations needed for
// linear-complexity analysis: gcd, complete factorization, minimal
// polynomials from 2-cyclotomic cosets, and Berlekamp-Massey.

#include <compare>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "slce/sequence.hpp"

namespace slce {

class Gf2Poly
{
  public:
    static constexpr long zero_degree = -1; ///< degree reported for the zero polynomial

    Gf2Poly() = default;

    static Gf2Poly monomial(std::size_t n);
    /// x^n + 1 (for n = 0 this is the zero polynomial).
    static Gf2Poly x_pow_plus_one(std::size_t n);
    /// Bit i of `bits` is the coefficient of x^i.
    static Gf2Poly from_uint(std::uint64_t bits);
    static Gf2Poly from_exponents(std::vector<std::size_t> const & exps);
    /// Parses "x^3+x+1" style strings (terms in any order, duplicates cancel).
    static Gf2Poly parse(std::string const & text);

    long degree() const;
    bool is_zero() const { return words_.empty(); }
    bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
    bool coeff(std::size_t i) const;
    void set_coeff(std::size_t i, bool value);
    std::size_t weight() const;

    std::vector<std::uint64_t> const & words() const { return words_; }

    Gf2Poly & operator+=(Gf2Poly const & o);
    friend Gf2Poly operator+(Gf2Poly a, Gf2Poly const & b) { return a += b; }
    friend Gf2Poly operator*(Gf2Poly const & a, Gf2Poly const & b);
    Gf2Poly shifted(std::size_t n) const;

    /// Quotient and remainder; throws std::domain_error on a zero divisor.
    std::pair<Gf2Poly, Gf2Poly> divmod(Gf2Poly const & d) const;
    friend Gf2Poly operator%(Gf2Poly const & a, Gf2Poly const & d);
    friend Gf2Poly operator/(Gf2Poly const & a, Gf2Poly const & d);

    Gf2Poly derivative() const;
    Gf2Poly square() const;
    /// Square root of a polynomial with only even-degree terms.
    Gf2Poly sqrt() const;
    /// Reverses the coefficient order over degrees 0..degree().
    Gf2Poly reversed() const;

    /// Evaluation at 1.
    bool at_one() const { return weight() % 2 == 1; }

    /// Canonical text, highest degree first: "x^3+x+1", "1", "0".
    std::string to_string() const;

    friend bool operator==(Gf2Poly const &, Gf2Poly const &) = default;
    /// Orders by degree, then by the coefficient bits read as an integer.
    friend std::strong_ordering operator<=>(Gf2Poly const & a, Gf2Poly const & b);

  private:
    void trim();
    std::vector<std::uint64_t> words_;
};

using FactorList = std::vector<std::pair<Gf2Poly, unsigned>>;

Gf2Poly mulmod(Gf2Poly const & a, Gf2Poly const & b, Gf2Poly const & m);
Gf2Poly powmod(Gf2Poly const & base, std::uint64_t exp, Gf2Poly const & m);

/// Greatest common divisor; gcd(f, 0) = f. Throws when both are zero.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

bool divides(Gf2Poly const & d, Gf2Poly const & f);

bool is_irreducible(Gf2Poly const & f);

/// Complete factorization into distinct irreducibles with multiplicity,
/// sorted canonically. Throws std::invalid_argument on constants.
FactorList factor(Gf2Poly const & f);

/// Product of factors raised to their multiplicities.
Gf2Poly expand(FactorList const & factors);

/// "(x+1)^4 (x^3+x+1)^4"; multiplicity 1 has no caret; empty list is "1".
std::string format_factors(FactorList const & factors);

/// Inverse of format_factors. Factors are kept as written: repeated or
/// reducible factors are not merged or checked.
FactorList parse_factors(std::string const & text);

/// Coefficient t equals bit t of the sequence.
Gf2Poly poly_from_seq(BitSeq const & seq);

/// Orbits of Z/kZ under multiplication by 2, each listed from its least
/// element in generation order; orbits ordered by least element.
std::vector<std::vector<std::uint32_t>> cyclotomic_cosets(std::uint32_t k);

/// k-th cyclotomic polynomial reduced mod 2.
Gf2Poly cyclotomic_gf2(std::uint32_t k);

/// Distinct minimal polynomials of the elements of order exactly k
/// (the irreducible factors of the k-th cyclotomic polynomial mod 2),
/// sorted canonically.
std::vector<Gf2Poly> minimal_polys_of_order(std::uint32_t k);

/// v - deg gcd(x^v + 1, S(x)); zero for the all-zero sequence.
std::size_t linear_complexity(BitSeq const & seq);

struct LfsrSynthesis
{
    std::size_t length = 0; ///< L
    Gf2Poly connection;     ///< c(x) = 1 + c_1 x + ... + c_L x^L
};

/// Berlekamp-Massey over the first n_terms terms of the periodic extension.
/// Throws std::invalid_argument when n_terms < 2v.
LfsrSynthesis berlekamp_massey(BitSeq const & seq, std::size_t n_terms);

/// True when s_N = c_1 s_{N-1} + ... + c_L s_{N-L} for L <= N < n_terms
/// over the periodic extension of the sequence.
bool lfsr_reproduces(BitSeq const & seq, LfsrSynthesis const & lfsr, std::size_t n_terms);

} // namespace slce
