#include "maserpairs/oracle.hpp"

#include <algorithm>
#include <cmath>

namespace maserpairs::oracle {

namespace {

constexpr double kPsdTol = 1e-9; // matches the decomposition contract on rho_sep

using pairstate::TwoQubitDensity;

bool entry_zero(const std::complex<double>& z) { return z.real() == 0.0 && z.imag() == 0.0; }

std::array<double, 4> sorted4(double a, double b, double c, double d) {
    std::array<double, 4> out{a, b, c, d};
    std::sort(out.begin(), out.end());
    return out;
}

double min_eig(const TwoQubitDensity& m) { return spectrum_4x4(m)[0]; }

// Largest admissible separable weight for one candidate pure state.
// g(lambda) = min over both positivity constraints is concave in lambda, so
// the admissible set is an interval; its upper edge is the answer.
struct CandidateResult {
    double lambda = 0.0; // best admissible weight (0 when none)
    double gmax = 0.0;   // peak of the constraint function over lambda
};

CandidateResult best_lambda(const TwoQubitDensity& rho, const Eigen::Vector4cd& psi,
                            double bisect_tol) {
    const TwoQubitDensity proj = psi * psi.adjoint();
    const auto g = [&](double lam) {
        const TwoQubitDensity m = rho - (1.0 - lam) * proj;
        return std::min(min_eig(m), min_eig(pairstate::partial_transpose(m)));
    };

    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 90; ++i) {
        const double m1 = lo + (hi - lo) / 3.0;
        const double m2 = hi - (hi - lo) / 3.0;
        if (g(m1) < g(m2))
            lo = m1;
        else
            hi = m2;
    }
    const double lam_star = 0.5 * (lo + hi);
    const double gmax = g(lam_star);
    if (gmax < -kPsdTol) return {0.0, gmax};
    if (g(1.0) >= -kPsdTol) return {1.0, gmax};

    lo = lam_star;
    hi = 1.0;
    while (hi - lo > bisect_tol) {
        const double mid = 0.5 * (lo + hi);
        if (g(mid) >= -kPsdTol)
            lo = mid;
        else
            hi = mid;
    }
    return {lo, gmax};
}

Eigen::Vector4cd family_state(double p, int sign) {
    Eigen::Vector4cd psi = Eigen::Vector4cd::Zero();
    psi(1) = std::sqrt(0.5 * (1.0 + p));
    psi(2) = sign * std::sqrt(0.5 * (1.0 - p));
    return psi;
}

} // namespace

DenseFieldOperators build_field_operators(std::size_t dim, double phi) {
    DenseFieldOperators ops;
    ops.c_op = Eigen::MatrixXd::Zero(dim, dim);
    ops.s_op = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t n = 0; n < dim; ++n) {
        const auto [c, s] = fock::rabi_coefficients(n, phi);
        ops.c_op(n, n) = c;
        if (n + 1 < dim) ops.s_op(n + 1, n) = s;
    }
    return ops;
}

pairstate::PairCorrelations matrix_correlations(const fock::PhotonDistribution& dist, double phi) {
    // One level for the photon the first atom can deposit, and one more so
    // that the truncated S^dag S product stays exact on that level.
    const std::size_t dim = dist.probs.size() + 2;
    const auto [c_op, s_op] = build_field_operators(dim, phi);

    Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(dim, dim);
    for (std::size_t n = 0; n < dist.probs.size(); ++n) rho(n, n) = dist.probs[n];

    const Eigen::MatrixXd s_dag = s_op.transpose();
    const Eigen::MatrixXd pop_diff = c_op * c_op - s_dag * s_op;
    const Eigen::MatrixXd rho_after = c_op * rho * c_op + s_op * rho * s_dag;

    pairstate::PairCorrelations corr;
    corr.s = (pop_diff * rho).trace();
    corr.t = (pop_diff * rho_after).trace();
    corr.u = ((s_dag * c_op * s_op * c_op + c_op * s_dag * c_op * s_op) * rho).trace();
    corr.v = (pop_diff * (c_op * rho * c_op - s_op * rho * s_dag)).trace();
    return corr;
}

std::array<double, 4> spectrum_4x4(const pairstate::TwoQubitDensity& rho) {
    bool real_entries = true;
    for (int i = 0; i < 4 && real_entries; ++i)
        for (int j = 0; j < 4; ++j)
            if (rho(i, j).imag() != 0.0) {
                real_entries = false;
                break;
            }
    const bool outer_zero = entry_zero(rho(0, 1)) && entry_zero(rho(0, 2)) &&
                            entry_zero(rho(1, 3)) && entry_zero(rho(2, 3));
    if (real_entries && outer_zero && (entry_zero(rho(0, 3)) || entry_zero(rho(1, 2)))) {
        const double d0 = rho(0, 0).real(), d1 = rho(1, 1).real();
        const double d2 = rho(2, 2).real(), d3 = rho(3, 3).real();
        if (!entry_zero(rho(1, 2))) { // coupling between |eg> and |ge>
            const double mid = 0.5 * (d1 + d2);
            const double rad = std::hypot(0.5 * (d1 - d2), rho(1, 2).real());
            return sorted4(d0, d3, mid - rad, mid + rad);
        }
        if (!entry_zero(rho(0, 3))) { // coupling between |ee> and |gg>
            const double mid = 0.5 * (d0 + d3);
            const double rad = std::hypot(0.5 * (d0 - d3), rho(0, 3).real());
            return sorted4(d1, d2, mid - rad, mid + rad);
        }
        return sorted4(d0, d1, d2, d3);
    }

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho, Eigen::EigenvaluesOnly);
    const auto& ev = solver.eigenvalues();
    return sorted4(ev(0), ev(1), ev(2), ev(3));
}

double numeric_trace_norm(const pairstate::PairCorrelations& corr) {
    // rho(corr) minus the product of its marginals, spectrally.
    TwoQubitDensity delta = pairstate::to_density_matrix(corr);
    const double pe1 = 0.5 * (1.0 + corr.s), pg1 = 0.5 * (1.0 - corr.s);
    const double pe2 = 0.5 * (1.0 + corr.t), pg2 = 0.5 * (1.0 - corr.t);
    delta(0, 0) -= pe1 * pe2;
    delta(1, 1) -= pe1 * pg2;
    delta(2, 2) -= pg1 * pe2;
    delta(3, 3) -= pg1 * pg2;
    const auto spec = spectrum_4x4(delta);
    double norm = 0.0;
    for (double x : spec) norm += std::abs(x);
    return norm;
}

double numeric_ls_search(const pairstate::PairCorrelations& corr, const LsSearchOptions& opts) {
    const TwoQubitDensity rho = pairstate::to_density_matrix(corr);
    if (min_eig(pairstate::partial_transpose(rho)) >= -1e-12) return 1.0;

    constexpr double kGolden = 0.6180339887498949;
    double best = 0.0;
    for (int sign : {+1, -1}) {
        const auto golden_max = [&](double center, auto objective) {
            double a = std::max(-1.0 + 1e-12, center - 2.0 / opts.grid);
            double b = std::min(1.0 - 1e-12, center + 2.0 / opts.grid);
            double c = b - kGolden * (b - a), d = a + kGolden * (b - a);
            double fc = objective(c), fd = objective(d);
            for (int it = 0; it < 80; ++it) {
                if (fc > fd) {
                    b = d;
                    d = c;
                    fd = fc;
                    c = b - kGolden * (b - a);
                    fc = objective(c);
                } else {
                    a = c;
                    c = d;
                    fc = fd;
                    d = a + kGolden * (b - a);
                    fd = objective(d);
                }
            }
            return 0.5 * (a + b);
        };

        double best_g = -1.0, best_g_p = 0.0;
        double best_l = -1.0, best_l_p = 0.0;
        for (int i = 0; i < opts.grid; ++i) {
            const double p = -1.0 + 2.0 * (i + 0.5) / opts.grid;
            const CandidateResult res = best_lambda(rho, family_state(p, sign), opts.bisect_tol);
            best = std::max(best, res.lambda);
            if (res.gmax > best_g) {
                best_g = res.gmax;
                best_g_p = p;
            }
            if (res.lambda > best_l) {
                best_l = res.lambda;
                best_l_p = p;
            }
        }

        // Refine the actual objective around the grid winner.
        if (best_l > 0.0) {
            const double p_ref = golden_max(best_l_p, [&](double p) {
                return best_lambda(rho, family_state(p, sign), opts.bisect_tol).lambda;
            });
            best =
                std::max(best, best_lambda(rho, family_state(p_ref, sign), opts.bisect_tol).lambda);
        }
        // Rank-deficient rho admits only candidates inside its range, which a
        // finite grid misses entirely; chasing the constraint slack instead
        // of lambda recovers them.
        const double p_slack = golden_max(best_g_p, [&](double p) {
            return best_lambda(rho, family_state(p, sign), opts.bisect_tol).gmax;
        });
        best = std::max(best, best_lambda(rho, family_state(p_slack, sign), opts.bisect_tol).lambda);
    }

    std::mt19937_64 rng(opts.seed);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int k = 0; k < opts.probes; ++k) {
        Eigen::Vector4cd psi;
        for (int i = 0; i < 4; ++i) psi(i) = std::complex<double>(normal(rng), normal(rng));
        psi.normalize();
        best = std::max(best, best_lambda(rho, psi, opts.bisect_tol).lambda);
    }
    return best;
}

pairstate::PairCorrelations random_valid_correlations(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> box(-1.0, 1.0);
    for (;;) {
        pairstate::PairCorrelations corr{box(rng), box(rng), box(rng), box(rng)};
        const auto report = pairstate::validate(corr);
        if (report.transverse_residual >= 0.0 && report.longitudinal_residual >= 0.0) return corr;
    }
}

pairstate::PairCorrelations random_nonseparable_correlations(std::mt19937_64& rng) {
    for (;;) {
        const pairstate::PairCorrelations corr = random_valid_correlations(rng);
        if (!pairstate::is_separable(corr)) return corr;
    }
}

} // namespace maserpairs::oracle
