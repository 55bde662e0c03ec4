#ifndef MASERPAIRS_LEWSAN_HPP
#define MASERPAIRS_LEWSAN_HPP

#include <optional>

#include "maserpairs/pairstate.hpp"

namespace maserpairs::lewsan {

/// Lewenstein-Sanpera split rho = S rho_sep + (1-S) rho_pure with maximal
/// separable weight S, specialized to the 4-parameter family.
struct LsResult {
    double sep_degree = 1.0; ///< S in [0,1]; 1 iff the input is separable
    double lambda_cap = 1.0; ///< Lambda; equals sep_degree when p == 0
    double p = 0.0;          ///< pure-part asymmetry, in (-1,1)
    double q = 0.0;          ///< transverse amplitude sgn(u) sqrt(1-p^2)
    std::optional<pairstate::TwoQubitDensity> rho_pure; ///< absent when S == 1
    std::optional<pairstate::TwoQubitDensity> rho_sep;  ///< absent when S == 0
};

/// Lambda = 1 - |u| + (1/2) sqrt((1+v)^2 - (s+t)^2). Lambda < 1 exactly for
/// non-separable corr; the separable branch of ls_decompose caps it at 1.
double lambda_cap(const pairstate::PairCorrelations& corr);

/// Pure-part asymmetry p for a non-separable corr.
///
/// Returns 0 when Lambda^2 - (1+v) Lambda + st >= 0. Otherwise solves
///   (1-Lambda)/sqrt(1-p^2) [(1-v) - (s-t) p] = (1-Lambda)^2 - v + st
/// by squaring to a quadratic, polishing each real root with |p| < 1, and
/// keeping roots that satisfy the unsquared equation (residual <= 1e-10) and
/// yield S in [0,1] with a positive, PPT separable part; among survivors the
/// one with maximal S wins. A bracketing scan over p is the fallback.
///
/// Throws NoValidRoot when no candidate passes.
double solve_p(const pairstate::PairCorrelations& corr, double lambda);

/// Full decomposition. Separable inputs return S = 1 with rho_sep = input and
/// no pure part. Throws DecompositionInvalid if the reconstructed separable
/// part fails its positivity/PPT checks, and InvalidState for invalid corr.
LsResult ls_decompose(const pairstate::PairCorrelations& corr);

} // namespace maserpairs::lewsan

#endif
