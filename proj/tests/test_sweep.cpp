#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include "maserpairs/errors.hpp"
#include "maserpairs/pairstate.hpp"
#include "maserpairs/sweep.hpp"

using namespace maserpairs;
using sweep::SweepConfig;
using sweep::SweepRecord;

namespace {
constexpr double kPi = std::numbers::pi;

SweepConfig small_config() {
    SweepConfig config;
    config.nex = 1.0;
    config.nu = 0.0;
    config.theta_min = 0.0;
    config.theta_max = 1.5;
    config.steps = 60;
    return config;
}

std::vector<SweepRecord> synthetic_curve(const std::vector<double>& xs,
                                         const std::vector<double>& ys) {
    std::vector<SweepRecord> records(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        records[i].theta_over_pi = xs[i];
        records[i].phi_over_pi = xs[i];
        records[i].one_minus_S = ys[i];
    }
    return records;
}
} // namespace

TEST_CASE("config validation") {
    SweepConfig config = small_config();
    config.nex = 0.0;
    CHECK_THROWS_AS(sweep::run_sweep(config), std::invalid_argument);
    config = small_config();
    config.steps = 1;
    CHECK_THROWS_AS(sweep::run_sweep(config), std::invalid_argument);
    config = small_config();
    config.theta_max = config.theta_min;
    CHECK_THROWS_AS(sweep::run_sweep(config), std::invalid_argument);
    config = small_config();
    config.tail_eps = 1.0;
    CHECK_THROWS_AS(sweep::run_sweep(config), std::invalid_argument);
}

TEST_CASE("sweep structure and record consistency") {
    const SweepConfig config = small_config();
    const auto records = sweep::run_sweep(config);
    REQUIRE(records.size() == std::size_t(config.steps) + 1); // + analytic theta=0 row

    // analytic limit row
    CHECK(records[0].theta_over_pi == 0.0);
    CHECK(records[0].s == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(records[0].t == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(records[0].u == 0.0);
    CHECK(records[0].v == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(records[0].separable == 1);
    CHECK(records[0].one_minus_S == 0.0);

    for (std::size_t i = 0; i < records.size(); ++i) {
        const auto& rec = records[i];
        if (i > 0) CHECK(rec.theta_over_pi > records[i - 1].theta_over_pi);
        CHECK(pairstate::validate({rec.s, rec.t, rec.u, rec.v}).passed);
        CHECK((rec.separable == 1) == (rec.sep_degree == 1.0));
        CHECK(rec.one_minus_S == 1.0 - rec.sep_degree);
        CHECK(rec.trace_norm ==
              doctest::Approx(pairstate::delta_trace_norm({rec.s, rec.t, rec.u, rec.v}))
                  .epsilon(1e-15));
        CHECK(std::isfinite(rec.nbar));
        CHECK(rec.n_max >= 0);
    }

    // grid endpoint included
    CHECK(records.back().theta_over_pi == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("sweep is deterministic and matches single-point evaluation") {
    const SweepConfig config = small_config();
    const auto a = sweep::run_sweep(config);
    const auto b = sweep::run_sweep(config);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        CHECK(sweep::format_csv_row(a[i]) == sweep::format_csv_row(b[i]));

    const auto& rec = a[37];
    const auto point = sweep::evaluate_point(config.nex, config.nu, rec.phi_over_pi * kPi);
    CHECK(point.s == rec.s);
    CHECK(point.t == rec.t);
    CHECK(point.u == rec.u);
    CHECK(point.v == rec.v);
    CHECK(point.sep_degree == rec.sep_degree);
    CHECK(point.n_max == rec.n_max);
}

TEST_CASE("verify mode cross-checks against the oracle") {
    SweepConfig config = small_config();
    config.steps = 100;
    config.theta_max = 2.0;
    config.verify = true;
    CHECK_NOTHROW(sweep::run_sweep(config));
}

TEST_CASE("truncation overflow carries the offending grid point") {
    SweepConfig config = small_config();
    config.nu = 20.0;
    config.tail_eps = 1e-300;
    config.steps = 2;
    try {
        sweep::run_sweep(config);
        FAIL("expected TruncationOverflow");
    } catch (const TruncationOverflow& err) {
        CHECK(std::string(err.what()).find("theta/pi") != std::string::npos);
    }
}

TEST_CASE("peak finding") {
    SUBCASE("exact on a sampled parabola") {
        std::vector<double> xs, ys;
        for (int i = 0; i <= 20; ++i) {
            const double x = 0.1 * i;
            xs.push_back(x);
            ys.push_back(0.5 - 0.3 * (x - 0.97) * (x - 0.97));
        }
        const auto peaks = sweep::find_peaks(synthetic_curve(xs, ys));
        REQUIRE(peaks.size() == 1);
        CHECK(peaks[0].phi_over_pi == doctest::Approx(0.97).epsilon(1e-12));
        CHECK(peaks[0].value == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("monotone data has no peaks") {
        std::vector<double> xs, ys;
        for (int i = 0; i <= 10; ++i) {
            xs.push_back(0.1 * i);
            ys.push_back(0.05 * i);
        }
        CHECK(sweep::find_peaks(synthetic_curve(xs, ys)).empty());
    }
    SUBCASE("too few records") {
        CHECK(sweep::find_peaks({}).empty());
        CHECK(sweep::find_peaks(synthetic_curve({0.0, 0.1}, {0.0, 1.0})).empty());
    }
    SUBCASE("multiple separated bumps are all reported, ascending") {
        std::vector<double> xs, ys;
        for (int i = 0; i <= 100; ++i) {
            const double x = 0.05 * i;
            xs.push_back(x);
            ys.push_back(0.3 * std::exp(-10.0 * (x - 1.0) * (x - 1.0)) +
                         0.2 * std::exp(-10.0 * (x - 3.0) * (x - 3.0)));
        }
        const auto peaks = sweep::find_peaks(synthetic_curve(xs, ys));
        REQUIRE(peaks.size() == 2);
        CHECK(peaks[0].phi_over_pi == doctest::Approx(1.0).epsilon(1e-3));
        CHECK(peaks[1].phi_over_pi == doctest::Approx(3.0).epsilon(1e-3));
        CHECK(peaks[0].phi_over_pi < peaks[1].phi_over_pi);
    }
}

TEST_CASE("csv emission and round trip") {
    SweepConfig config = small_config();
    config.steps = 10;
    config.theta_min = 0.3; // no analytic row
    const auto records = sweep::run_sweep(config);
    REQUIRE(records.size() == 10);

    const std::string path = "sweep_test_out.csv";
    sweep::emit_csv(records, path);

    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line ==
          "theta_over_pi,phi_over_pi,s,t,u,v,trace_norm,deg_corr,separable,sep_degree,"
          "one_minus_S,p,nbar,n_max");
    std::size_t rows = 0;
    std::vector<std::string> parsed_rows;
    while (std::getline(in, line)) {
        parsed_rows.push_back(line);
        ++rows;
    }
    CHECK(rows == records.size());

    // 17 significant digits round-trip to the identical doubles
    for (std::size_t i = 0; i < records.size(); ++i) {
        std::stringstream ss(parsed_rows[i]);
        std::string field;
        std::vector<std::string> fields;
        while (std::getline(ss, field, ',')) fields.push_back(field);
        REQUIRE(fields.size() == 14);
        CHECK(std::stod(fields[0]) == records[i].theta_over_pi);
        CHECK(std::stod(fields[2]) == records[i].s);
        CHECK(std::stod(fields[3]) == records[i].t);
        CHECK(std::stod(fields[4]) == records[i].u);
        CHECK(std::stod(fields[5]) == records[i].v);
        CHECK(std::stod(fields[9]) == records[i].sep_degree);
        CHECK(std::stol(fields[13]) == records[i].n_max);
    }
    std::remove(path.c_str());

    CHECK_THROWS_AS(sweep::emit_csv(records, "/nonexistent-dir/x.csv"), std::runtime_error);
}

TEST_CASE("plot data emission") {
    SweepConfig config = small_config();
    config.steps = 5;
    config.theta_min = 0.5;
    const auto records = sweep::run_sweep(config);
    const std::string path = "sweep_test_plot.dat";
    sweep::emit_plot_data(records, path);
    std::ifstream in(path);
    REQUIRE(in.good());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line.front() == '#');
    std::size_t rows = 0;
    while (std::getline(in, line)) {
        std::stringstream ss(line);
        double a, b, c, d;
        REQUIRE((ss >> a >> b >> c >> d));
        CHECK(a == c);
        ++rows;
    }
    CHECK(rows == records.size());
    std::remove(path.c_str());
}
