#pragma once

// SLCE binary sequences: the support set D, the sequence itself, the sets
// Y = {x(1-x)} and Z = Y^c, and periodic autocorrelation.

#include <cstdint>
#include <string>
#include <vector>

#include "slce/field.hpp"

namespace slce {

struct SupportSet
{
    std::vector<std::uint32_t> exponents; ///< t with alpha^t in D, ascending
    std::vector<FieldElt> elements;       ///< D itself, ascending by code
};

/// One period of a binary sequence; bits[t] is 0 or 1.
struct BitSeq
{
    std::vector<std::uint8_t> bits;

    std::size_t period() const { return bits.size(); }
    std::size_t weight() const;
};

/// D = { alpha^(2i+1) - 1 : 0 <= i <= q-2 } with zero removed, computed by
/// running i over the full range and deduplicating.
SupportSet support_set(FieldCtx const & ctx);

/// s_t = 1 iff alpha^t lies in D, for t in [0, q-2].
BitSeq generate(FieldCtx const & ctx);

/// Sum over one period of (-1)^(s_i + s_{i+tau}).
std::int64_t autocorrelation(BitSeq const & seq, std::size_t tau);

/// C_tau for every tau in [0, v-1].
std::vector<std::int64_t> autocorrelation_profile(BitSeq const & seq);

/// Y = { x(1-x) : x nonzero } minus zero, ascending by code.
std::vector<FieldElt> set_Y(FieldCtx const & ctx);
/// Complement of Y in the nonzero elements.
std::vector<FieldElt> set_Z(FieldCtx const & ctx);

/// True iff Z = (-4)^{-1} D.
bool lce_shift_check(FieldCtx const & ctx);

/// Period as a line of '0'/'1' characters terminated by a newline.
std::string to_text(BitSeq const & seq);
/// "tau,C_tau" header followed by one row per shift.
std::string autocorrelation_csv(BitSeq const & seq);

} // namespace slce
