#pragma once

// Floating-point Gauss sums over GF(q), used to validate the exact Jacobi
// sums through J(chi, rho) = G(rho) G(chi) / G(chi rho).

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "slce/cyclo.hpp"
#include "slce/field.hpp"

namespace slce {

using ComplexVal = std::complex<double>;

inline constexpr double gauss_rel_tolerance = 1e-6;

/// G(eps) = sum over nonzero x of eps(x) exp(2 pi i tr(x) / p), with
/// eps(alpha^t) = exp(2 pi i j t / n). Requires n | q-1 and 1 <= j < n.
ComplexVal gauss_sum(FieldCtx const & ctx, std::uint32_t n, std::uint32_t j);

/// G(psi^j) for j = 0, ..., q-2, where psi(alpha) = exp(2 pi i / (q-1)).
/// Entry 0 is the trivial character's sum, -1. O(q^2) with table lookups.
std::vector<ComplexVal> gauss_sums_all(FieldCtx const & ctx);

struct IdentityReport
{
    std::uint32_t k = 0;
    ComplexVal k_via_gauss;  ///< G(rho) G(chi) / G(chi rho)
    ComplexVal k_exact;      ///< exact K(chi) embedded at zeta_k = exp(2 pi i / k)
    double k_rel_error = 0;  ///< |k_via_gauss - k_exact| / sqrt(q)
    ComplexVal g_chi;
    bool pure_predicted = false; ///< some p^x = -1 (mod k)
    bool pure_observed = false;  ///< G(chi) real within tolerance
    /// Sign predicted for a pure G(chi) = +-p^(m/2), when pure.
    std::optional<int> pure_sign_expected;
    bool pure_sign_ok = true;

    bool ok() const
    {
        return k_rel_error <= gauss_rel_tolerance && pure_predicted == pure_observed &&
               pure_sign_ok;
    }
};

/// Requires k odd, 3 <= k, k | q-1.
IdentityReport check_identities(FieldCtx const & ctx, std::uint32_t k);
/// Same, reusing a precomputed K(chi).
IdentityReport check_identities(FieldCtx const & ctx, CycInt const & k_value);

} // namespace slce
