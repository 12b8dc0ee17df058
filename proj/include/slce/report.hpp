#pragma once

// Cross-validation reports: for a field GF(p^m), every odd k | q-1 is checked
// three ways (exact criterion per prime ideal, direct divisibility of S_2,
// closed-form prediction) and the results are compared.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "slce/cyclo.hpp"
#include "slce/field.hpp"
#include "slce/predict.hpp"

namespace slce {

inline constexpr std::uint64_t default_direct_max = 20000;

struct VerifyOptions
{
    std::uint64_t direct_max = default_direct_max;
    bool predict_only = false;
    std::optional<std::uint64_t> only_k;
    bool with_gcd = true;
    bool timings = false;
};

struct IdealRow
{
    std::string factor;
    std::uint32_t coset_leader = 0;
    bool criterion = false;
    std::optional<bool> direct;
};

struct KRow
{
    std::uint64_t k = 0;
    std::string regime = "none"; ///< "pure", "index2" or "none"
    std::optional<Prediction> prediction;
    std::string prediction_note; ///< why there is no prediction, if any
    std::optional<bool> direct_full; ///< 1 + x + ... + x^(k-1) | S_2
    std::vector<IdealRow> ideals;
    /// predicted == direct, when both exist and the prediction is definite
    std::optional<bool> match;

    bool criterion_agrees() const;
};

struct VerificationReport
{
    std::uint64_t p = 0;
    std::uint64_t m = 0;
    std::string modulus;
    std::string alpha;
    bool direct = false;
    std::string skipped; ///< reason direct checks were skipped
    std::vector<KRow> rows;
    std::optional<std::string> gcd_factorization;
    std::optional<std::uint64_t> linear_complexity;
    std::vector<std::pair<std::string, double>> timings;

    /// Every criterion agrees with direct divisibility and every definite
    /// prediction with a direct result matches.
    bool all_match() const;
};

/// Throws std::invalid_argument when q exceeds opts.direct_max and
/// opts.predict_only is false, or on invalid field parameters.
VerificationReport verify(std::uint64_t p, std::uint64_t m, VerifyOptions const & opts);

/// Odd prime powers 3 <= q <= q_max, ascending.
std::vector<std::pair<std::uint64_t, std::uint64_t>> odd_prime_powers(std::uint64_t q_max);

/// verify() for every odd prime power q <= q_max, sorted by q.
std::vector<VerificationReport> grid(std::uint64_t q_max, VerifyOptions const & opts);

nlohmann::ordered_json to_json(Prediction const & pred);
nlohmann::ordered_json to_json(VerificationReport const & rep);
nlohmann::ordered_json field_json(FieldCtx const & ctx);
/// K(chi) in the power basis, with the field echoed.
nlohmann::ordered_json jacobi_json(FieldCtx const & ctx, CycInt const & k_value);

std::string to_text(Prediction const & pred);
std::string to_text(VerificationReport const & rep);
/// One line per (q, k, ideal): q,p,m,k,factor,criterion,direct,predicted,match
std::string grid_csv(std::vector<VerificationReport> const & reps);

} // namespace slce
