#pragma once

// Closed-form divisibility predictions for S_2(x):
//
//  * pure case: some p^t = -1 (mod k); K(chi) = +-p^(m/2) and the verdict
//    depends only on p mod 4, t and s = m / (2t);
//  * index-2 case: k = l^r with l = 7 (mod 8) prime and <p> of index 2 in
//    (Z/kZ)^*; K(chi) is expressed through the class number h of Q(sqrt(-l))
//    and the representation 4 p^h = a^2 + l b^2.
//
// Everything here is integer arithmetic on (p, m, k); no field is built.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace slce {

/// [(Z/kZ)^* : <p>] = phi(k) / ord_k(p). Throws when gcd(p, k) != 1.
std::uint64_t subgroup_index(std::uint64_t k, std::uint64_t p);

struct PureCaseParams
{
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> t; ///< least t with p^t = -1 (mod k)
    std::optional<std::uint64_t> s; ///< m / (2t), when integral
    bool applicable() const { return t.has_value() && s.has_value(); }
};

/// Requires k odd, k >= 3, gcd(p, k) = 1.
PureCaseParams pure_case_params(std::uint64_t p, std::uint64_t m, std::uint64_t k);

/// Sign of K(chi) = +-p^(m/2) in the pure case. Throws if not applicable.
int pure_jacobi_sign(PureCaseParams const & params);

enum class Verdict { divides, not_divides, indeterminate };

std::string to_string(Verdict v);

struct Prediction
{
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 0;
    std::string regime; ///< "pure" or "index2"
    /// True when the verdict is about 1 + x + ... + x^(k-1); false when it
    /// is about each minimal polynomial of an element of order exactly k.
    bool full_factor = true;
    Verdict verdict = Verdict::indeterminate;
    /// Verdicts for b = +|b| and b = -|b| (index-2 only).
    std::optional<std::pair<bool, bool>> branches;
    std::vector<std::pair<std::string, std::int64_t>> params;
    std::string condition_trace;

    std::string target() const;
};

/// Throws std::invalid_argument when the pure parameters are inapplicable.
Prediction predict_pure(std::uint64_t p, std::uint64_t m, std::uint64_t k);

/// Class number of Q(sqrt(-l)) by counting reduced forms of discriminant -l.
/// Requires l = 3 (mod 4) and l > 3.
std::uint64_t class_number(std::uint64_t l);

struct Representation
{
    std::int64_t a = 0;     ///< sign fixed by a = -2 p^((e+h)/2) (mod l)
    std::int64_t b_abs = 0; ///< |b|; the sign of b is not determined
};

/// Solves 4 p^h = a^2 + l b^2 with a = b (mod 2) and p not dividing a b.
/// Throws std::domain_error when no representation exists.
Representation represent(std::uint64_t p, std::uint64_t l, std::uint64_t h, std::uint64_t e);

struct Index2Params
{
    std::uint64_t l = 0;
    std::uint64_t r = 0;
    std::uint64_t k = 0;
    std::uint64_t e = 0; ///< phi(k) / 2
    std::uint64_t s = 0; ///< m / e
    std::uint64_t h = 0;
    std::int64_t a = 0;
    std::int64_t b_abs = 0;
};

/// Validates the index-2 hypotheses and computes e, s, h, a, |b|.
/// Each violated hypothesis raises std::invalid_argument with its name.
Index2Params index2_params(std::uint64_t p, std::uint64_t m, std::uint64_t l, std::uint64_t r);

/// Sign prefactor used by the index-2 condition
///   sign * ((a + b) / 2)^s = 3 (mod 4).
/// `evaluated`: sign = (-1)^(s-1) p^((e-h)s/2) mod 4, from K(chi) =
///   (-1)^(s-1) G(chi)^s with G(rho) = G(chi rho) in the base field.
/// `as_printed`: (-1)^(s-1-(p-1)s/4) for p = 1 (mod 4) and
///   (-1)^(s-1-rs+es+(1-h)s/2) for p = 3 (mod 4). Kept for comparison; it
///   disagrees with direct computation when (p-1)s/4 is odd, and when
///   p = 3 (mod 4) with s odd.
enum class Index2Sign { evaluated, as_printed };

Prediction predict_index2(std::uint64_t p, std::uint64_t m, std::uint64_t l, std::uint64_t r,
                          Index2Sign sign_rule = Index2Sign::evaluated);

/// Picks the regime for (p, m, k): pure when some p^t = -1 (mod k), index-2
/// when the hypotheses above hold, otherwise std::nullopt. Throws on k even,
/// k < 3, or k not dividing p^m - 1.
std::optional<Prediction> predict(std::uint64_t p, std::uint64_t m, std::uint64_t k);

} // namespace slce
