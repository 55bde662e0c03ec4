#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "maserpairs/fock.hpp"
#include "maserpairs/oracle.hpp"
#include "maserpairs/pairstate.hpp"

using namespace maserpairs;
using pairstate::PairCorrelations;
using pairstate::TwoQubitDensity;

namespace {
constexpr double kPi = std::numbers::pi;

fock::PhotonDistribution vacuum_state() {
    fock::PhotonDistribution d;
    d.probs = {1.0};
    return d;
}
} // namespace

TEST_CASE("dense field operators have the expected sparsity") {
    const auto ops = oracle::build_field_operators(5, 0.9);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) {
            if (i == j)
                CHECK(ops.c_op(i, j) == std::cos(0.9 * std::sqrt(double(i) + 1.0)));
            else
                CHECK(ops.c_op(i, j) == 0.0);
            if (i == j + 1)
                CHECK(ops.s_op(i, j) == std::sin(0.9 * std::sqrt(double(j) + 1.0)));
            else
                CHECK(ops.s_op(i, j) == 0.0);
        }
}

TEST_CASE("matrix correlations on the vacuum") {
    auto corr = oracle::matrix_correlations(vacuum_state(), kPi / 2.0);
    const double c2pi = std::cos(std::sqrt(2.0) * kPi);
    CHECK(corr.s == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(corr.t == doctest::Approx(c2pi).epsilon(1e-14));
    CHECK(std::abs(corr.u) <= 1e-12);
    CHECK(corr.v == doctest::Approx(-c2pi).epsilon(1e-14));

    corr = oracle::matrix_correlations(vacuum_state(), kPi);
    CHECK(corr.s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(corr.t == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::abs(corr.u) <= 1e-12);
    CHECK(corr.v == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("4x4 spectrum: closed-form block routes") {
    auto spec = oracle::spectrum_4x4(0.25 * TwoQubitDensity::Identity());
    for (double x : spec) CHECK(x == doctest::Approx(0.25).epsilon(1e-15));

    spec = oracle::spectrum_4x4(pairstate::to_density_matrix({0.0, 0.0, 0.45, -0.2}));
    CHECK(spec[0] == doctest::Approx(0.075).epsilon(1e-14));
    CHECK(spec[1] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(spec[2] == doctest::Approx(0.2).epsilon(1e-14));
    CHECK(spec[3] == doctest::Approx(0.525).epsilon(1e-14));

    spec = oracle::spectrum_4x4(pairstate::to_density_matrix({1.0, 1.0, 0.0, 1.0}));
    CHECK(std::abs(spec[0]) <= 1e-15);
    CHECK(std::abs(spec[1]) <= 1e-15);
    CHECK(std::abs(spec[2]) <= 1e-15);
    CHECK(spec[3] == doctest::Approx(1.0).epsilon(1e-15));

    // corner-coupled pattern (partial transpose moves u/2 to the corners)
    spec = oracle::spectrum_4x4(
        pairstate::partial_transpose(pairstate::to_density_matrix({0.0, 0.0, 0.45, -0.2})));
    CHECK(spec[0] == doctest::Approx(-0.025).epsilon(1e-14));
    CHECK(spec[1] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(spec[2] == doctest::Approx(0.3).epsilon(1e-14));
    CHECK(spec[3] == doctest::Approx(0.425).epsilon(1e-14));
}

TEST_CASE("4x4 spectrum: general Hermitian fallback agrees with the blocks") {
    // forcing the general route with a negligible off-pattern entry must not
    // change the spectrum
    const TwoQubitDensity rho = pairstate::to_density_matrix({0.1, -0.3, 0.25, -0.15});
    TwoQubitDensity perturbed = rho;
    perturbed(0, 1) = std::complex<double>(0.0, 1e-300);
    perturbed(1, 0) = std::complex<double>(0.0, -1e-300);
    const auto block_route = oracle::spectrum_4x4(rho);
    const auto dense_route = oracle::spectrum_4x4(perturbed);
    for (int i = 0; i < 4; ++i)
        CHECK(block_route[i] == doctest::Approx(dense_route[i]).epsilon(1e-13));

    // random Hermitian matrices: ascending order, eigenvalue sum = trace
    std::mt19937_64 rng(8080);
    std::normal_distribution<double> normal(0.0, 1.0);
    for (int k = 0; k < 50; ++k) {
        TwoQubitDensity a;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) a(i, j) = std::complex<double>(normal(rng), normal(rng));
        const TwoQubitDensity herm = 0.5 * (a + a.adjoint());
        const auto spec = oracle::spectrum_4x4(herm);
        CHECK(spec[0] <= spec[1]);
        CHECK(spec[1] <= spec[2]);
        CHECK(spec[2] <= spec[3]);
        CHECK(spec[0] + spec[1] + spec[2] + spec[3] ==
              doctest::Approx(herm.trace().real()).epsilon(1e-12));
    }
}

TEST_CASE("numeric trace norm and the traceless correlation spectrum") {
    CHECK(oracle::numeric_trace_norm({0.0, 0.0, 0.1, 0.5}) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(oracle::numeric_trace_norm({0.0, 0.0, 0.3, 0.5}) ==
          doctest::Approx(0.55).epsilon(1e-13));

    std::mt19937_64 rng(171717);
    for (int k = 0; k < 200; ++k) {
        const auto corr = oracle::random_valid_correlations(rng);
        TwoQubitDensity delta = pairstate::to_density_matrix(corr);
        const double pe1 = 0.5 * (1.0 + corr.s), pe2 = 0.5 * (1.0 + corr.t);
        delta(0, 0) -= pe1 * pe2;
        delta(1, 1) -= pe1 * (1.0 - pe2);
        delta(2, 2) -= (1.0 - pe1) * pe2;
        delta(3, 3) -= (1.0 - pe1) * (1.0 - pe2);
        const auto spec = oracle::spectrum_4x4(delta);
        CHECK(std::abs(spec[0] + spec[1] + spec[2] + spec[3]) <= 1e-12);
        CHECK(pairstate::delta_trace_norm(corr) ==
              doctest::Approx(std::abs(spec[0]) + std::abs(spec[1]) + std::abs(spec[2]) +
                              std::abs(spec[3]))
                  .epsilon(1e-12));
    }
}

TEST_CASE("numeric separable-weight search") {
    oracle::LsSearchOptions opts;
    opts.grid = 201;
    opts.probes = 40;

    SUBCASE("worked example") {
        const double found = oracle::numeric_ls_search({0.0, 0.0, 0.45, -0.2}, opts);
        CHECK(found == doctest::Approx(0.95).epsilon(1e-3));
    }
    SUBCASE("separable input short-circuits to 1") {
        CHECK(oracle::numeric_ls_search({0.0, 0.0, 0.4, -0.2}, opts) == 1.0);
        CHECK(oracle::numeric_ls_search({0.2, -0.1, 0.0, 0.3}, opts) == 1.0);
    }
    SUBCASE("resolution behaviour") {
        const PairCorrelations corr{0.4, -0.2, 0.5, -0.35};
        REQUIRE_FALSE(pairstate::is_separable(corr));
        oracle::LsSearchOptions coarse = opts, fine = opts;
        coarse.grid = 51;
        coarse.probes = 0;
        fine.grid = 201;
        fine.probes = 0;
        const double lo = oracle::numeric_ls_search(corr, coarse);
        const double hi = oracle::numeric_ls_search(corr, fine);
        CHECK(hi >= lo - 1e-6);
        CHECK(std::abs(hi - lo) <= 2e-3);
    }
    SUBCASE("low-flux maser reference point") {
        const double phi = 0.708 * kPi;
        const auto corr = pairstate::correlations(fock::steady_state({1.0, 0.0, phi}), phi);
        const double found = oracle::numeric_ls_search(corr, opts);
        CHECK(std::abs(found - 0.4755) <= 2e-3);
    }
}

TEST_CASE("random tuple generators") {
    std::mt19937_64 rng(4242);
    for (int k = 0; k < 100; ++k) {
        const auto corr = oracle::random_valid_correlations(rng);
        const auto rep = pairstate::validate(corr);
        CHECK(rep.transverse_residual >= 0.0);
        CHECK(rep.longitudinal_residual >= 0.0);
    }
    for (int k = 0; k < 50; ++k)
        CHECK_FALSE(pairstate::is_separable(oracle::random_nonseparable_correlations(rng)));

    // fixed seed, fixed stream
    std::mt19937_64 a(31415), b(31415);
    for (int k = 0; k < 10; ++k) {
        const auto x = oracle::random_valid_correlations(a);
        const auto y = oracle::random_valid_correlations(b);
        CHECK(x.s == y.s);
        CHECK(x.t == y.t);
        CHECK(x.u == y.u);
        CHECK(x.v == y.v);
    }
}
