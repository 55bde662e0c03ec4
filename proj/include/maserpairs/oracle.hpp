#ifndef MASERPAIRS_ORACLE_HPP
#define MASERPAIRS_ORACLE_HPP

#include <array>
#include <cstdint>
#include <random>

#include <Eigen/Dense>

#include "maserpairs/fock.hpp"
#include "maserpairs/pairstate.hpp"

// Independent brute-force verification path: dense truncated operator
// matrices, direct 4x4 spectral computations, and a numeric best-separable-
// approximation search. Nothing here reuses the closed-form reductions it is
// meant to check.
namespace maserpairs::oracle {

/// Dense C (diagonal, cos(phi sqrt(n+1))) and S (subdiagonal shift,
/// S[n+1,n] = sin(phi sqrt(n+1))) on a truncated ladder of `dim` levels.
struct DenseFieldOperators {
    Eigen::MatrixXd c_op;
    Eigen::MatrixXd s_op;
};

DenseFieldOperators build_field_operators(std::size_t dim, double phi);

/// (s, t, u, v) evaluated literally as operator traces on matrices of
/// dimension n_max + 2 (one headroom level for the photon the first atom can
/// deposit). No diagonal-sum shortcuts.
pairstate::PairCorrelations matrix_correlations(const fock::PhotonDistribution& dist, double phi);

/// Eigenvalues in ascending order. Uses the family's 1+1+2 block structure
/// when the sparsity pattern allows, a general Hermitian solve otherwise.
std::array<double, 4> spectrum_4x4(const pairstate::TwoQubitDensity& rho);

/// Sum of |eigenvalues| of rho(corr) minus the product of its marginals.
double numeric_trace_norm(const pairstate::PairCorrelations& corr);

struct LsSearchOptions {
    int grid = 401;            ///< family candidates over p in (-1,1), both q signs
    int probes = 100;          ///< random general two-qubit pure states
    double bisect_tol = 1e-8;  ///< width tolerance of the lambda bisection
    std::uint64_t seed = 0x6d617365727031ULL;
};

/// Direct maximization of the separable weight: for each candidate pure state
/// find the largest lambda such that (rho - (1-lambda)|psi><psi|)/lambda is
/// positive and PPT, and return the best lambda found. Returns 1 for
/// separable input.
double numeric_ls_search(const pairstate::PairCorrelations& corr, const LsSearchOptions& opts = {});

/// Rejection-sampled tuple satisfying the validity inequalities (uniform in
/// the [-1,1]^4 box, filtered).
pairstate::PairCorrelations random_valid_correlations(std::mt19937_64& rng);

/// As above, additionally rejecting separable tuples.
pairstate::PairCorrelations random_nonseparable_correlations(std::mt19937_64& rng);

} // namespace maserpairs::oracle

#endif
