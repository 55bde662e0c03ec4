#include "maserpairs/lewsan.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "maserpairs/errors.hpp"

namespace maserpairs::lewsan {

namespace {

constexpr double kB7ResidualTol = 1e-10;
constexpr double kSepEigTol = 1e-9; // min-eigenvalue floor for the separable part

using pairstate::PairCorrelations;

// Family tuple of rho_sep = (rho - (1-S) rho_pure) / S.
PairCorrelations sep_tuple(const PairCorrelations& corr, double big_s, double p, double q) {
    return {(corr.s - (1.0 - big_s) * p) / big_s, (corr.t + (1.0 - big_s) * p) / big_s,
            (corr.u - (1.0 - big_s) * q) / big_s, (corr.v + (1.0 - big_s)) / big_s};
}

double min_eig_family(const PairCorrelations& c) {
    const double lo1 = 0.25 * ((1.0 - c.v) - std::hypot(2.0 * c.u, c.s - c.t));
    const double lo2 = 0.25 * ((1.0 + c.v) - std::abs(c.s + c.t));
    return std::min(lo1, lo2);
}

double min_eig_family_pt(const PairCorrelations& c) {
    const double lo1 = 0.25 * ((1.0 + c.v) - std::hypot(2.0 * c.u, c.s + c.t));
    const double lo2 = 0.25 * ((1.0 - c.v) - std::abs(c.s - c.t));
    return std::min(lo1, lo2);
}

struct RootCheck {
    bool ok = false;
    double big_s = 0.0;
};

// Unsquared B7 residual at p.
double b7_residual(const PairCorrelations& c, double lambda, double rhs, double p) {
    return (1.0 - lambda) * ((1.0 - c.v) - (c.s - c.t) * p) / std::sqrt(1.0 - p * p) - rhs;
}

RootCheck check_root(const PairCorrelations& corr, double lambda, double rhs, double p,
                     bool enforce_b7) {
    RootCheck out;
    if (!(std::abs(p) < 1.0) || !std::isfinite(p)) return out;
    if (enforce_b7 && std::abs(b7_residual(corr, lambda, rhs, p)) > kB7ResidualTol) return out;
    const double root = std::sqrt(1.0 - p * p);
    const double big_s = 1.0 - (1.0 - lambda) / root;
    if (!(big_s > 0.0 && big_s <= 1.0)) return out;
    const double q = std::copysign(root, corr.u);
    const PairCorrelations sep = sep_tuple(corr, big_s, p, q);
    if (min_eig_family(sep) < -kSepEigTol) return out;
    if (min_eig_family_pt(sep) < -kSepEigTol) return out;
    out.ok = true;
    out.big_s = big_s;
    return out;
}

} // namespace

double lambda_cap(const pairstate::PairCorrelations& corr) {
    const double span = (1.0 + corr.v) * (1.0 + corr.v) - (corr.s + corr.t) * (corr.s + corr.t);
    return 1.0 - std::abs(corr.u) + 0.5 * std::sqrt(std::max(span, 0.0));
}

double solve_p(const pairstate::PairCorrelations& corr, double lambda) {
    const double s = corr.s, t = corr.t, v = corr.v;
    if (lambda * lambda - (1.0 + v) * lambda + s * t >= 0.0) return 0.0;

    const double oml = 1.0 - lambda;
    const double rhs = oml * oml - v + s * t;

    // Squared form: [oml^2 (s-t)^2 + rhs^2] p^2 - 2 oml^2 (1-v)(s-t) p
    //               + oml^2 (1-v)^2 - rhs^2 = 0
    const double qa = oml * oml * (s - t) * (s - t) + rhs * rhs;
    const double qb = -2.0 * oml * oml * (1.0 - v) * (s - t);
    const double qc = oml * oml * (1.0 - v) * (1.0 - v) - rhs * rhs;

    std::vector<double> candidates;
    if (qa > 0.0) {
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc >= 0.0) {
            // Stable quadratic: the larger-magnitude root first, the other
            // through qc to avoid cancellation.
            const double sq = std::sqrt(disc);
            const double base = -0.5 * (qb + std::copysign(sq, qb));
            if (base != 0.0) {
                candidates.push_back(base / qa);
                candidates.push_back(qc / base);
            } else {
                candidates.push_back(0.0);
            }
        }
        // The vertex: at a near-double root both +/-sqrt(disc) roots carry
        // O(sqrt(eps)) noise while the vertex is exact; when the roots are
        // well separated the B7 residual filter discards it.
        candidates.push_back(-0.5 * qb / qa);
    }
    // Vanishing right-hand side forces the bracket itself to vanish.
    if (std::abs(rhs) <= 1e-12 && std::abs(s - t) > 1e-12)
        candidates.push_back((1.0 - v) / (s - t));

    double best_p = 0.0, best_s = -1.0;
    for (double p : candidates) {
        const RootCheck rc = check_root(corr, lambda, rhs, p, true);
        if (rc.ok && rc.big_s > best_s) {
            best_s = rc.big_s;
            best_p = p;
        }
    }
    if (best_s >= 0.0) return best_p;

    // Fallback: bracketing scan of the unsquared equation.
    constexpr int kScanPoints = 4000;
    constexpr double kEdge = 0.999999;
    double prev_p = -kEdge;
    double prev_f = b7_residual(corr, lambda, rhs, prev_p);
    for (int i = 1; i <= kScanPoints; ++i) {
        const double p = -kEdge + 2.0 * kEdge * i / kScanPoints;
        const double f = b7_residual(corr, lambda, rhs, p);
        if (std::isfinite(prev_f) && std::isfinite(f) && prev_f * f <= 0.0) {
            double lo = prev_p, hi = p, flo = prev_f;
            for (int it = 0; it < 200; ++it) {
                const double mid = 0.5 * (lo + hi);
                const double fm = b7_residual(corr, lambda, rhs, mid);
                if (flo * fm <= 0.0)
                    hi = mid;
                else {
                    lo = mid;
                    flo = fm;
                }
            }
            const double root = 0.5 * (lo + hi);
            const RootCheck rc = check_root(corr, lambda, rhs, root, true);
            if (rc.ok && rc.big_s > best_s) {
                best_s = rc.big_s;
                best_p = root;
            }
        }
        prev_p = p;
        prev_f = f;
    }
    if (best_s >= 0.0) return best_p;

    std::ostringstream msg;
    msg << "solve_p: no admissible root for (s,t,u,v)=(" << corr.s << "," << corr.t << ","
        << corr.u << "," << corr.v << "), lambda=" << lambda;
    throw NoValidRoot(msg.str());
}

LsResult ls_decompose(const pairstate::PairCorrelations& corr) {
    const pairstate::ValidityReport report = pairstate::validate(corr);
    if (!report.passed) {
        std::ostringstream msg;
        msg << "ls_decompose: invalid correlations, residuals (" << report.transverse_residual
            << ", " << report.longitudinal_residual << ")";
        throw InvalidState(msg.str());
    }

    LsResult result;
    if (pairstate::is_separable(corr)) {
        result.sep_degree = 1.0;
        result.lambda_cap = 1.0; // B6 gives >= 1 here; capped so that S == Lambda holds
        result.rho_sep = pairstate::to_density_matrix(corr);
        return result;
    }

    const double lambda = lambda_cap(corr);
    const double p = solve_p(corr, lambda);
    const double root = std::sqrt(1.0 - p * p);
    const double q = std::copysign(root, corr.u);
    const double big_s = std::max(0.0, 1.0 - (1.0 - lambda) / root);

    result.sep_degree = big_s;
    result.lambda_cap = lambda;
    result.p = p;
    result.q = q;

    pairstate::TwoQubitDensity pure = pairstate::TwoQubitDensity::Zero();
    pure(1, 1) = 0.5 * (1.0 + p);
    pure(2, 2) = 0.5 * (1.0 - p);
    pure(1, 2) = 0.5 * q;
    pure(2, 1) = 0.5 * q;
    result.rho_pure = pure;

    const pairstate::TwoQubitDensity rho = pairstate::to_density_matrix(corr);
    if (big_s == 0.0) {
        // All-pure decomposition: the input itself must be the pure state.
        if ((rho - pure).cwiseAbs().maxCoeff() > 1e-10)
            throw DecompositionInvalid("ls_decompose: S=0 but input is not the pure part");
        return result;
    }

    const PairCorrelations sep = sep_tuple(corr, big_s, p, q);
    if (min_eig_family(sep) < -kSepEigTol || min_eig_family_pt(sep) < -kSepEigTol) {
        std::ostringstream msg;
        msg << "ls_decompose: separable part fails positivity/PPT (min eig "
            << min_eig_family(sep) << ", PT " << min_eig_family_pt(sep) << ")";
        throw DecompositionInvalid(msg.str());
    }
    const pairstate::TwoQubitDensity rho_sep = pairstate::to_density_matrix(sep);
    if ((big_s * rho_sep + (1.0 - big_s) * pure - rho).cwiseAbs().maxCoeff() > 1e-10)
        throw DecompositionInvalid("ls_decompose: reconstruction mismatch beyond 1e-10");
    result.rho_sep = rho_sep;
    return result;
}

} // namespace maserpairs::lewsan
