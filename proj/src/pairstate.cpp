#include "maserpairs/pairstate.hpp"

#include <cmath>
#include <sstream>

#include "maserpairs/detail/accum.hpp"
#include "maserpairs/errors.hpp"

namespace maserpairs::pairstate {

namespace {
constexpr double kValidityTol = 1e-12;   // boundary slack for yes/no decisions
constexpr double kBugThreshold = 1e-9;   // beyond this a computed tuple is a bug
} // namespace

PairCorrelations correlations(const fock::PhotonDistribution& dist, double phi) {
    const auto& p = dist.probs;
    const std::size_t n_top = p.size(); // sums over n = 0..n_max+1 where p_{n-1} contributes

    detail::NeumaierSum s_acc, t_acc, u_acc, v_acc;
    const fock::PhotonDistribution after = fock::apply_atom_passage(dist, phi);

    for (std::size_t n = 0; n < p.size(); ++n) {
        const double root1 = std::sqrt(static_cast<double>(n) + 1.0);
        const double root2 = std::sqrt(static_cast<double>(n) + 2.0);
        const double sn = std::sin(phi * root1);
        s_acc.add(p[n] * std::cos(2.0 * phi * root1));
        u_acc.add(2.0 * p[n] * sn * sn * std::cos(phi * root1) * std::cos(phi * root2));
    }
    for (std::size_t n = 0; n < after.probs.size(); ++n)
        t_acc.add(after.probs[n] * std::cos(2.0 * phi * std::sqrt(static_cast<double>(n) + 1.0)));
    for (std::size_t n = 0; n <= n_top; ++n) {
        const double c = std::cos(phi * std::sqrt(static_cast<double>(n) + 1.0));
        double term = 0.0;
        if (n < p.size()) term += c * c * p[n];
        if (n >= 1) {
            const double s = std::sin(phi * std::sqrt(static_cast<double>(n)));
            term -= s * s * p[n - 1];
        }
        v_acc.add(std::cos(2.0 * phi * std::sqrt(static_cast<double>(n) + 1.0)) * term);
    }

    const PairCorrelations corr{s_acc.value(), t_acc.value(), u_acc.value(), v_acc.value()};
    const ValidityReport report = validate(corr);
    if (report.transverse_residual < -kBugThreshold || report.longitudinal_residual < -kBugThreshold) {
        std::ostringstream msg;
        msg << "correlations: validity violated beyond tolerance (residuals "
            << report.transverse_residual << ", " << report.longitudinal_residual << ")";
        throw InvalidState(msg.str());
    }
    return corr;
}

ValidityReport validate(const PairCorrelations& corr) {
    ValidityReport report;
    report.transverse_residual = (1.0 - corr.v) - std::hypot(2.0 * corr.u, corr.s - corr.t);
    report.longitudinal_residual = (1.0 + corr.v) - std::abs(corr.s + corr.t);
    report.passed = report.transverse_residual >= -kValidityTol &&
                    report.longitudinal_residual >= -kValidityTol;
    return report;
}

double delta_trace_norm(const PairCorrelations& corr) {
    const double w = corr.v - corr.s * corr.t;
    const double absw = std::abs(w);
    const double absu = std::abs(corr.u);
    return (2.0 * absu <= absw) ? absw : 0.5 * absw + absu;
}

double degree_of_correlation(const PairCorrelations& corr) {
    return std::max(std::abs(corr.u), std::abs(corr.v - corr.s * corr.t));
}

TwoQubitDensity to_density_matrix(const PairCorrelations& corr) {
    const double s = corr.s, t = corr.t, u = corr.u, v = corr.v;
    TwoQubitDensity rho = TwoQubitDensity::Zero();
    rho(0, 0) = 0.25 * (1.0 + s + t + v);
    rho(1, 1) = 0.25 * (1.0 + s - t - v);
    rho(2, 2) = 0.25 * (1.0 - s + t - v);
    rho(3, 3) = 0.25 * (1.0 - s - t + v);
    rho(1, 2) = 0.5 * u;
    rho(2, 1) = 0.5 * u;
    return rho;
}

bool is_separable(const PairCorrelations& corr) {
    return 1.0 + corr.v >= std::hypot(2.0 * corr.u, corr.s + corr.t) - kValidityTol;
}

TwoQubitDensity partial_transpose(const TwoQubitDensity& rho) {
    TwoQubitDensity out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            out.block<2, 2>(2 * i, 2 * j) = rho.block<2, 2>(2 * i, 2 * j).transpose();
    return out;
}

} // namespace maserpairs::pairstate
