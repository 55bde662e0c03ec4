#include <cmath>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "maserpairs/errors.hpp"
#include "maserpairs/sweep.hpp"

namespace {

using maserpairs::sweep::SweepConfig;
using maserpairs::sweep::SweepRecord;

void print_record(const SweepRecord& rec) {
    const std::string row = maserpairs::sweep::format_csv_row(rec);
    const std::string header = maserpairs::sweep::csv_header();
    std::size_t hpos = 0, rpos = 0;
    while (hpos != std::string::npos) {
        const std::size_t hnext = header.find(',', hpos);
        const std::size_t rnext = row.find(',', rpos);
        std::cout << header.substr(hpos, hnext - hpos) << '='
                  << row.substr(rpos, rnext - rpos) << '\n';
        hpos = hnext == std::string::npos ? hnext : hnext + 1;
        rpos = rnext == std::string::npos ? rnext : rnext + 1;
    }
}

int run(int argc, char** argv) {
    CLI::App app{"One-atom maser: steady-state field and correlations of two successive atoms"};
    app.require_subcommand(1);

    // sweep
    SweepConfig config;
    std::string out_path;
    std::string plot_path;
    bool peaks = false;
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep the pump parameter theta = phi*sqrt(Nex)");
    sweep_cmd->add_option("--nex", config.nex, "Pump rate (atoms per photon lifetime)")->required();
    sweep_cmd->add_option("--nu", config.nu, "Thermal photon number")->capture_default_str();
    sweep_cmd->add_option("--theta-min", config.theta_min, "Lower end of theta/pi (exclusive)")
        ->capture_default_str();
    sweep_cmd->add_option("--theta-max", config.theta_max, "Upper end of theta/pi (inclusive)")
        ->capture_default_str();
    sweep_cmd->add_option("--steps", config.steps, "Grid points on (theta-min, theta-max]")
        ->capture_default_str();
    sweep_cmd->add_option("--tail-eps", config.tail_eps, "Relative photon-tail bound")
        ->capture_default_str();
    sweep_cmd->add_option("--out", out_path, "Output CSV path")->required();
    sweep_cmd->add_flag("--peaks", peaks, "Report local maxima of 1-S");
    sweep_cmd->add_flag("--verify", config.verify,
                        "Cross-check every 50th grid point against the dense oracle");
    sweep_cmd->add_option("--plot-data", plot_path,
                          "Also write whitespace-separated plot columns to this path");

    // point
    double pt_nex = 0.0, pt_nu = 0.0;
    std::optional<double> pt_phi, pt_phi_pi;
    double pt_tail = 1e-12;
    auto* point_cmd = app.add_subcommand("point", "Evaluate a single Rabi angle");
    point_cmd->add_option("--nex", pt_nex, "Pump rate")->required();
    point_cmd->add_option("--nu", pt_nu, "Thermal photon number")->capture_default_str();
    auto* phi_opt = point_cmd->add_option("--phi", pt_phi, "Accumulated Rabi angle [rad]");
    auto* phi_pi_opt =
        point_cmd->add_option("--phi-pi", pt_phi_pi, "Accumulated Rabi angle in units of pi");
    phi_opt->excludes(phi_pi_opt);
    point_cmd->add_option("--tail-eps", pt_tail, "Relative photon-tail bound")
        ->capture_default_str();

    CLI11_PARSE(app, argc, argv);

    if (sweep_cmd->parsed()) {
        const auto records = maserpairs::sweep::run_sweep(config);
        maserpairs::sweep::emit_csv(records, out_path);
        if (!plot_path.empty()) maserpairs::sweep::emit_plot_data(records, plot_path);
        if (peaks) {
            const auto report = maserpairs::sweep::find_peaks(records);
            for (const auto& peak : report) {
                char buf[96];
                std::snprintf(buf, sizeof(buf), "peak phi_over_pi=%.6f one_minus_S=%.6f",
                              peak.phi_over_pi, peak.value);
                std::cout << buf << '\n';
            }
            if (report.empty()) std::cout << "no peaks found\n";
        }
        return 0;
    }

    // point
    if (!pt_phi && !pt_phi_pi)
        throw std::invalid_argument("point: exactly one of --phi / --phi-pi is required");
    const double phi = pt_phi ? *pt_phi : *pt_phi_pi * std::numbers::pi;
    if (!(std::isfinite(phi) && phi >= 0.0))
        throw std::invalid_argument("point: phi must be finite and >= 0");
    if (!(std::isfinite(pt_nex) && pt_nex >= 0.0))
        throw std::invalid_argument("point: nex must be finite and >= 0");
    print_record(maserpairs::sweep::evaluate_point(pt_nex, pt_nu, phi, pt_tail));
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const maserpairs::TruncationOverflow& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 3;
    } catch (const maserpairs::InvalidState& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const maserpairs::NoValidRoot& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const maserpairs::DecompositionInvalid& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
}
