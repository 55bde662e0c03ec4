#ifndef MASERPAIRS_SWEEP_HPP
#define MASERPAIRS_SWEEP_HPP

#include <string>
#include <vector>

#include "maserpairs/fock.hpp"

namespace maserpairs::sweep {

/// Sweep over the pump parameter theta = phi sqrt(nex), given in units of pi.
struct SweepConfig {
    double nex = 1.0;
    double nu = 0.0;
    double theta_min = 0.0; ///< theta/pi, >= 0; theta = 0 is emitted as the analytic limit row
    double theta_max = 5.0; ///< theta/pi, > theta_min
    int steps = 2000;       ///< >= 2 grid points on (theta_min, theta_max]
    double tail_eps = 1e-12;
    bool verify = false;    ///< cross-check against the oracle at every 50th grid point

    void require_valid() const; ///< throws std::invalid_argument
};

struct SweepRecord {
    double theta_over_pi = 0.0;
    double phi_over_pi = 0.0;
    double s = 0.0;
    double t = 0.0;
    double u = 0.0;
    double v = 0.0;
    double trace_norm = 0.0;
    double deg_corr = 0.0;
    int separable = 1;
    double sep_degree = 1.0;
    double one_minus_S = 0.0;
    double p = 0.0;
    double nbar = 0.0;
    long n_max = 0;
};

struct Peak {
    double phi_over_pi = 0.0;
    double value = 0.0;
};
using PeakReport = std::vector<Peak>;

/// One record per grid point, theta ascending; deterministic for a fixed
/// config. Propagates TruncationOverflow (with the offending theta) and, in
/// verify mode, InvalidState on an oracle mismatch.
std::vector<SweepRecord> run_sweep(const SweepConfig& config);

/// Single-point evaluation at a given Rabi angle phi [rad].
SweepRecord evaluate_point(double nex, double nu, double phi, double tail_eps = 1e-12);

/// Interior local maxima of one_minus_S with 3-point parabolic refinement of
/// location and value. Needs >= 3 records; may be empty.
PeakReport find_peaks(const std::vector<SweepRecord>& records);

/// CSV with the fixed header
/// theta_over_pi,phi_over_pi,s,t,u,v,trace_norm,deg_corr,separable,sep_degree,one_minus_S,p,nbar,n_max
/// at 17 significant digits, newline-terminated. Throws std::runtime_error
/// with the path on I/O failure.
void emit_csv(const std::vector<SweepRecord>& records, const std::string& path);

/// Whitespace-separated (theta/pi, trace_norm) and (theta/pi, 1-S) column
/// pairs for external plotting.
void emit_plot_data(const std::vector<SweepRecord>& records, const std::string& path);

std::string csv_header();
std::string format_csv_row(const SweepRecord& rec);

} // namespace maserpairs::sweep

#endif
