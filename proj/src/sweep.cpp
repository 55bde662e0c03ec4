#include "maserpairs/sweep.hpp"

#include <cmath>
#include <numbers>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "maserpairs/errors.hpp"
#include "maserpairs/lewsan.hpp"
#include "maserpairs/oracle.hpp"
#include "maserpairs/pairstate.hpp"

namespace maserpairs::sweep {

namespace {

std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

struct PointEvaluation {
    SweepRecord record;
    fock::PhotonDistribution dist;
    pairstate::PairCorrelations corr;
};

PointEvaluation evaluate_impl(double nex, double nu, double phi, double tail_eps) {
    PointEvaluation out;
    const fock::MaserParams params{nex, nu, phi};
    const fock::TruncationPolicy trunc{tail_eps, 10000};
    out.dist = fock::steady_state(params, trunc);
    out.corr = pairstate::correlations(out.dist, phi);

    SweepRecord& rec = out.record;
    rec.theta_over_pi = phi * std::sqrt(nex) / std::numbers::pi;
    rec.phi_over_pi = phi / std::numbers::pi;
    rec.s = out.corr.s;
    rec.t = out.corr.t;
    rec.u = out.corr.u;
    rec.v = out.corr.v;
    rec.trace_norm = pairstate::delta_trace_norm(out.corr);
    rec.deg_corr = pairstate::degree_of_correlation(out.corr);
    const lewsan::LsResult ls = lewsan::ls_decompose(out.corr);
    rec.separable = ls.sep_degree == 1.0 ? 1 : 0;
    rec.sep_degree = ls.sep_degree;
    rec.one_minus_S = 1.0 - ls.sep_degree;
    rec.p = ls.p;
    rec.nbar = fock::mean_photon(out.dist);
    rec.n_max = static_cast<long>(out.dist.n_max());
    return out;
}

void verify_point(const PointEvaluation& eval, double phi) {
    const auto& corr = eval.corr;
    const auto dense = oracle::matrix_correlations(eval.dist, phi);
    const double worst =
        std::max(std::max(std::abs(corr.s - dense.s), std::abs(corr.t - dense.t)),
                 std::max(std::abs(corr.u - dense.u), std::abs(corr.v - dense.v)));
    std::ostringstream where;
    where << " at theta/pi=" << eval.record.theta_over_pi;
    if (worst > 1e-10)
        throw InvalidState("verify: correlations deviate from the dense oracle by " +
                           std::to_string(worst) + where.str());

    if (std::abs(pairstate::delta_trace_norm(corr) - oracle::numeric_trace_norm(corr)) > 1e-12)
        throw InvalidState("verify: trace-norm closed form disagrees with spectrum" + where.str());

    const auto pt_spec =
        oracle::spectrum_4x4(pairstate::partial_transpose(pairstate::to_density_matrix(corr)));
    if (pairstate::is_separable(corr) != (pt_spec[0] >= -1e-12))
        throw InvalidState("verify: separability flag disagrees with the PT spectrum" +
                           where.str());

    if (!eval.record.separable) {
        oracle::LsSearchOptions opts;
        opts.grid = 201;
        opts.probes = 0;
        const double numeric = oracle::numeric_ls_search(corr, opts);
        const double analytic = eval.record.sep_degree;
        // The search is a lower bound up to its grid slack; a result clearly
        // above the analytic value would mean a better decomposition exists.
        if (numeric > analytic + 1e-3 || numeric < analytic - 5e-3)
            throw InvalidState("verify: numeric separability search gives " +
                               std::to_string(numeric) + " vs analytic " +
                               std::to_string(analytic) + where.str());
    }
}

} // namespace

void SweepConfig::require_valid() const {
    if (!(std::isfinite(nex) && nex > 0.0))
        throw std::invalid_argument("sweep: nex must be finite and > 0");
    if (!(std::isfinite(nu) && nu >= 0.0))
        throw std::invalid_argument("sweep: nu must be finite and >= 0");
    if (!(std::isfinite(theta_min) && theta_min >= 0.0))
        throw std::invalid_argument("sweep: theta_min must be finite and >= 0");
    if (!(std::isfinite(theta_max) && theta_max > theta_min))
        throw std::invalid_argument("sweep: theta_max must exceed theta_min");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    if (!(tail_eps > 0.0 && tail_eps < 1.0))
        throw std::invalid_argument("sweep: tail_eps must be in (0,1)");
}

SweepRecord evaluate_point(double nex, double nu, double phi, double tail_eps) {
    return evaluate_impl(nex, nu, phi, tail_eps).record;
}

std::vector<SweepRecord> run_sweep(const SweepConfig& config) {
    config.require_valid();
    const double sqrt_nex = std::sqrt(config.nex);

    std::vector<SweepRecord> records;
    records.reserve(static_cast<std::size_t>(config.steps) + 1);
    const auto evaluate_at = [&](double theta, bool verify_here) {
        const double phi = theta * std::numbers::pi / sqrt_nex;
        try {
            PointEvaluation eval = evaluate_impl(config.nex, config.nu, phi, config.tail_eps);
            if (verify_here) verify_point(eval, phi);
            // Keep the grid coordinates exact instead of round-tripping
            // through phi (theta * pi / pi can be off by one ulp).
            eval.record.theta_over_pi = theta;
            eval.record.phi_over_pi = theta / sqrt_nex;
            records.push_back(eval.record);
        } catch (const TruncationOverflow& err) {
            std::ostringstream msg;
            msg << err.what() << " (sweep grid point theta/pi=" << theta << ")";
            throw TruncationOverflow(msg.str());
        }
    };

    // theta = 0 is the analytic limit: thermal field, both atoms stay
    // excited, (s,t,u,v) = (1,1,0,1), S = 1.
    if (config.theta_min == 0.0) evaluate_at(0.0, false);
    for (int k = 1; k <= config.steps; ++k) {
        const double theta =
            config.theta_min + (config.theta_max - config.theta_min) * k / config.steps;
        evaluate_at(theta, config.verify && k % 50 == 0);
    }
    return records;
}

PeakReport find_peaks(const std::vector<SweepRecord>& records) {
    PeakReport report;
    if (records.size() < 3) return report;
    for (std::size_t i = 1; i + 1 < records.size(); ++i) {
        const double y0 = records[i - 1].one_minus_S;
        const double y1 = records[i].one_minus_S;
        const double y2 = records[i + 1].one_minus_S;
        if (!(y1 > y0 && y1 > y2)) continue;

        const double x1 = records[i].theta_over_pi;
        const double h = 0.5 * (records[i + 1].theta_over_pi - records[i - 1].theta_over_pi);
        const double den = y0 - 2.0 * y1 + y2;
        double x_peak = x1, y_peak = y1;
        if (den < 0.0) {
            x_peak = x1 + 0.5 * h * (y0 - y2) / den;
            y_peak = y1 - (y0 - y2) * (y0 - y2) / (8.0 * den);
        }
        const double scale = records[i].theta_over_pi != 0.0 && records[i].phi_over_pi != 0.0
                                 ? records[i].phi_over_pi / records[i].theta_over_pi
                                 : 1.0;
        report.push_back({x_peak * scale, std::clamp(y_peak, 0.0, 1.0)});
    }
    return report;
}

std::string csv_header() {
    return "theta_over_pi,phi_over_pi,s,t,u,v,trace_norm,deg_corr,separable,sep_degree,"
           "one_minus_S,p,nbar,n_max";
}

std::string format_csv_row(const SweepRecord& rec) {
    std::ostringstream row;
    row << fmt17(rec.theta_over_pi) << ',' << fmt17(rec.phi_over_pi) << ',' << fmt17(rec.s) << ','
        << fmt17(rec.t) << ',' << fmt17(rec.u) << ',' << fmt17(rec.v) << ','
        << fmt17(rec.trace_norm) << ',' << fmt17(rec.deg_corr) << ',' << rec.separable << ','
        << fmt17(rec.sep_degree) << ',' << fmt17(rec.one_minus_S) << ',' << fmt17(rec.p) << ','
        << fmt17(rec.nbar) << ',' << rec.n_max;
    return row.str();
}

void emit_csv(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_csv: cannot open '" + path + "' for writing");
    out << csv_header() << '\n';
    for (const auto& rec : records) out << format_csv_row(rec) << '\n';
    if (!out) throw std::runtime_error("emit_csv: write failure on '" + path + "'");
}

void emit_plot_data(const std::vector<SweepRecord>& records, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("emit_plot_data: cannot open '" + path + "' for writing");
    out << "# theta_over_pi trace_norm theta_over_pi one_minus_S\n";
    for (const auto& rec : records)
        out << fmt17(rec.theta_over_pi) << ' ' << fmt17(rec.trace_norm) << ' '
            << fmt17(rec.theta_over_pi) << ' ' << fmt17(rec.one_minus_S) << '\n';
    if (!out) throw std::runtime_error("emit_plot_data: write failure on '" + path + "'");
}

} // namespace maserpairs::sweep
