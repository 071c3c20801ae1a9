#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"

#include "qls/models.hpp"
#include "qls/scan.hpp"

using namespace qls;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("grid scan basics") {
    auto zero = IsingHamiltonian::build(2, {});
    auto scan = grid_scan(EnergyEvaluator(zero, EnergyMethod::statevector), 8, 8, kPi, kPi);
    for (double v : scan.values) CHECK(v == 0.0);

    // row at beta = 0 is identically zero for an offset-free Hamiltonian;
    // the endpoint-exclusive grid contains beta = 0 exactly when the
    // resolution is even
    EnergyEvaluator eval(models::toy(1, 1, 1), EnergyMethod::closed_form);
    auto s = grid_scan(eval, 22, 22, kPi, kPi);
    bool found_zero_row = false;
    for (int v = 0; v < s.res_beta; ++v) {
        if (std::abs(s.beta_at(v)) < 1e-12) {
            found_zero_row = true;
            for (int u = 0; u < s.res_gamma; ++u) CHECK(std::abs(s.at(u, v)) < 1e-12);
        }
    }
    CHECK(found_zero_row);

    CHECK_THROWS_AS(grid_scan(eval, 1, 8, kPi, kPi), ConfigError);
    CHECK_THROWS_AS(grid_scan(eval, 8, 8, 0.0, kPi), ConfigError);
}

TEST_CASE("scan shifted by one period matches") {
    EnergyEvaluator eval(models::toy(1, 1, 1), EnergyMethod::closed_form);
    const double period = gamma_period(eval.hamiltonian());
    auto a = grid_scan(eval, 31, 31, period, kPi, {0.0, 0.0});
    auto b = grid_scan(eval, 31, 31, period, kPi, {period, 0.0});
    for (std::size_t k = 0; k < a.values.size(); ++k)
        CHECK(a.values[k] == doctest::Approx(b.values[k]).epsilon(1e-9));
}

TEST_CASE("doubling resolution keeps the coarse sublattice bit-identical") {
    EnergyEvaluator eval(models::h1(), EnergyMethod::closed_form);
    auto coarse = grid_scan(eval, 25, 25, kPi, kPi, {0.1, -0.2});
    auto fine = grid_scan(eval, 50, 50, kPi, kPi, {0.1, -0.2});
    for (int u = 0; u < 25; ++u)
        for (int v = 0; v < 25; ++v)
            CHECK(coarse.at(u, v) == fine.at(2 * u, 2 * v));
}

TEST_CASE("line sections") {
    auto constant = [](double, double) { return 2.0; };
    auto flat = line_section(constant, {}, {1.0, 0.0}, kPi, 10);
    REQUIRE(flat.size() == 11);
    for (double v : flat) CHECK(v == 2.0);

    EnergyEvaluator eval(models::toy(1, 1, 1), EnergyMethod::closed_form);
    auto beta_line = line_section(eval, {0.3, 0.1}, {0.0, 1.0}, kPi, 200);
    CHECK(beta_line.front() == doctest::Approx(beta_line.back()).epsilon(1e-9));

    CHECK_THROWS_AS(line_section(constant, {}, {2.0, 0.0}, kPi, 10), ConfigError);
    CHECK_THROWS_AS(line_section(constant, {}, {1.0, 0.0}, kPi, 1), ConfigError);
}

TEST_CASE("recommended scan params") {
    auto rec = recommended_scan_params(models::toy(1, 1, 1));
    CHECK(rec.extent_gamma == doctest::Approx(kPi));
    CHECK(rec.extent_beta == doctest::Approx(kPi));
    CHECK(rec.min_res_gamma >= 7);
    CHECK(rec.min_res_gamma % 2 == 1);
    CHECK(rec.min_res_beta >= 3);

    auto one_body = IsingHamiltonian::build(3, {{{0}, 1.0}, {{1}, 1.0}, {{2}, 1.0}});
    CHECK(recommended_scan_params(one_body).min_res_beta >= 3);

    auto rec1 = recommended_scan_params(models::h1());
    CHECK(rec1.extent_gamma == doctest::Approx(4 * kPi));
    CHECK(rec1.extent_beta == doctest::Approx(kPi));

    auto frac = IsingHamiltonian::build(2, {{{0}, std::numbers::e}});
    CHECK_THROWS_AS(recommended_scan_params(frac), IncommensurateError);
}

TEST_CASE("scan file round-trip is bit-exact") {
    EnergyEvaluator eval(models::h1(), EnergyMethod::closed_form);
    auto scan = grid_scan(eval, 9, 7, 2 * kPi, kPi, {0.25, -0.125});
    std::stringstream ss;
    write_scan(ss, scan, "# qls scan\n# hamiltonian H1\n");
    auto back = read_scan(ss);
    CHECK(back.res_gamma == scan.res_gamma);
    CHECK(back.res_beta == scan.res_beta);
    CHECK(back.center.gamma == scan.center.gamma);
    CHECK(back.extent_beta == scan.extent_beta);
    REQUIRE(back.values.size() == scan.values.size());
    for (std::size_t k = 0; k < scan.values.size(); ++k)
        CHECK(back.values[k] == scan.values[k]);

    std::stringstream truncated("res_gamma 4\nres_beta 4\n");
    CHECK_THROWS_AS(read_scan(truncated), ConfigError);
}

TEST_CASE("heatmap pgm") {
    LandscapeScan scan;
    scan.res_gamma = 2;
    scan.res_beta = 3;
    scan.extent_gamma = scan.extent_beta = kPi;
    scan.values = {0.0, 0.5, 1.0, 1.0, 0.5, 0.0};
    std::stringstream ss;
    write_heatmap_pgm(ss, scan);
    CHECK(ss.str() == "P2\n3 2\n255\n0 128 255\n255 128 0\n");

    scan.values.assign(6, 3.0);  // constant renders black
    std::stringstream flat;
    write_heatmap_pgm(flat, scan);
    CHECK(flat.str() == "P2\n3 2\n255\n0 0 0\n0 0 0\n");
}
