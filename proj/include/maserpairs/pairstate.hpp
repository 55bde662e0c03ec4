#ifndef MASERPAIRS_PAIRSTATE_HPP
#define MASERPAIRS_PAIRSTATE_HPP

#include <Eigen/Dense>

#include "maserpairs/fock.hpp"

namespace maserpairs::pairstate {

/// The four numbers that fix the joint state of two successive atoms:
/// Bloch z-components s (first atom) and t (second atom), and the transverse
/// and longitudinal elements u, v of the diagonal cross dyadic diag(u, u, v).
///
/// rho = 1/4 (1 + s sigma_z + t tau_z + u (sigma_x tau_x + sigma_y tau_y)
///            + v sigma_z tau_z)
struct PairCorrelations {
    double s = 0.0;
    double t = 0.0;
    double u = 0.0;
    double v = 0.0;
};

/// Residuals of the two positivity inequalities of the 4-parameter family:
///   transverse:   (1 - v) - sqrt(4u^2 + (s-t)^2) >= 0
///   longitudinal: (1 + v) - |s + t|              >= 0
struct ValidityReport {
    double transverse_residual = 0.0;
    double longitudinal_residual = 0.0;
    bool passed = false; ///< both residuals >= -1e-12
};

/// Explicit 4x4 density matrix, basis order |ee>, |eg>, |ge>, |gg>.
using TwoQubitDensity = Eigen::Matrix4cd;

/// Correlation parameters of the two-atom state generated by two back-to-back
/// passages through the steady-state field, reduced to photon-number sums:
///   s = sum_n p_n cos(2 phi sqrt(n+1))
///   t = same sum over the post-passage distribution
///   u = 2 sum_n p_n sin^2(phi sqrt(n+1)) cos(phi sqrt(n+1)) cos(phi sqrt(n+2))
///   v = sum_n cos(2 phi sqrt(n+1)) [cos^2(phi sqrt(n+1)) p_n - sin^2(phi sqrt(n)) p_{n-1}]
///
/// Throws InvalidState if the result violates the validity inequalities by
/// more than 1e-9 (a numerics bug, not a property of the input).
PairCorrelations correlations(const fock::PhotonDistribution& dist, double phi);

ValidityReport validate(const PairCorrelations& corr);

/// Trace norm of the correlation part rho - rho1 x rho2. With w = v - s t:
/// |w| when 2|u| <= |w|, else |w|/2 + |u|. Equals the sum of the moduli of
/// the eigenvalues {w/4, w/4, u/2 - w/4, -u/2 - w/4} (a traceless set).
double delta_trace_norm(const PairCorrelations& corr);

/// Largest characteristic value of the entanglement dyadic diag(u, u, v - st).
double degree_of_correlation(const PairCorrelations& corr);

TwoQubitDensity to_density_matrix(const PairCorrelations& corr);

/// Positivity of the partial transpose, in closed form:
/// separable iff 1 + v >= sqrt(4u^2 + (s+t)^2) (with a 1e-12 slack).
/// In particular any state with u = 0 is separable.
bool is_separable(const PairCorrelations& corr);

/// Transpose with respect to the second atom: each 2x2 block is transposed.
TwoQubitDensity partial_transpose(const TwoQubitDensity& rho);

} // namespace maserpairs::pairstate

#endif
