#ifndef MASERPAIRS_FOCK_HPP
#define MASERPAIRS_FOCK_HPP

#include <cstddef>
#include <vector>

namespace maserpairs::fock {

/// Physical knobs of the one-atom maser.
struct MaserParams {
    double nex = 0.0; ///< pump rate: mean atoms per photon lifetime, >= 0
    double nu = 0.0;  ///< thermal photon number, >= 0
    double phi = 0.0; ///< accumulated Rabi angle [rad], >= 0

    /// Throws std::invalid_argument when a field is negative or non-finite.
    void require_valid() const;
};

/// Cut-off policy for the photon-number ladder.
struct TruncationPolicy {
    double tail_eps = 1e-12;  ///< relative bound on the omitted tail mass, in (0,1)
    std::size_t n_cap = 10000; ///< hard maximum photon number, >= 1

    void require_valid() const;
};

/// Diagonal photon-number distribution p_0..p_{n_max} plus an upper bound on
/// the probability mass dropped by truncation. Always normalized to unit sum.
struct PhotonDistribution {
    std::vector<double> probs;
    double tail_bound = 0.0;

    std::size_t n_max() const { return probs.empty() ? 0 : probs.size() - 1; }
    double at(std::size_t n) const { return n < probs.size() ? probs[n] : 0.0; }
};

/// Diagonal action of one resonant passage on the n-photon sector:
/// C|n> = c|n>, S|n> = s|n+1> with c = cos(phi*sqrt(n+1)), s = sin(phi*sqrt(n+1)).
struct RabiCoefficients {
    double c;
    double s;
};

RabiCoefficients rabi_coefficients(std::size_t n, double phi);

/// Steady-state photon distribution of the pumped cavity.
///
/// The unnormalized weight of |n> is the running product of the gain/loss
/// factors nu/(nu+1) + (nex/(nu+1)) sin^2(phi sqrt(m))/m for m = 1..n. The
/// product is truncated once a rigorous geometric bound on the remaining tail
/// drops below tail_eps times the accumulated mass, or hard-stopped at a
/// factor that is exactly zero (nu = 0 trapping: all higher weights vanish).
/// phi = 0 short-circuits to the geometric thermal distribution.
///
/// Throws TruncationOverflow when n_cap is reached before the tail bound.
PhotonDistribution steady_state(const MaserParams& params, const TruncationPolicy& trunc = {});

/// Field state after one excited atom has flown through:
/// p'_n = cos^2(phi sqrt(n+1)) p_n + sin^2(phi sqrt(n)) p_{n-1}.
/// Trace preserving; the support grows by at most one photon.
PhotonDistribution apply_atom_passage(const PhotonDistribution& dist, double phi);

double mean_photon(const PhotonDistribution& dist);

} // namespace maserpairs::fock

#endif
