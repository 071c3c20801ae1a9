#include <cmath>
#include <numbers>
#include <sstream>

#include "doctest.h"

#include "qls/models.hpp"
#include "qls/roughness.hpp"
#include "test_support.hpp"

using namespace qls;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("tv_1d on reference shapes") {
    std::vector<double> ramp;
    for (int j = 0; j <= 100; ++j) ramp.push_back(0.03 * j);
    CHECK(tv_1d(ramp) == doctest::Approx(1.0).epsilon(1e-12));

    CHECK(tv_1d(std::vector<double>(10, 2.5)) == 0.0);

    std::vector<double> sine;  // one full period: TV = 4A, range = 2A
    for (int j = 0; j <= 2000; ++j) sine.push_back(1.7 * std::sin(2 * kPi * j / 2000.0));
    CHECK(tv_1d(sine) == doctest::Approx(2.0).epsilon(0.01));

    CHECK_THROWS_AS(tv_1d({1.0}), ConfigError);
}

TEST_CASE("tv over random directions") {
    auto constant = [](double, double) { return 1.0; };
    auto st = tv_random_directions(constant, {}, 50, 50, 3, kPi);
    CHECK(st.mean == 0.0);
    CHECK(st.index == 0.0);

    EnergyEvaluator eval(models::toy(1, 1, 1), EnergyMethod::closed_form);
    auto a = tv_random_directions(eval, {}, 100, 100, 5);
    auto b = tv_random_directions(eval, {}, 100, 100, 5);
    CHECK(a.mean == b.mean);
    CHECK(a.stddev == b.stddev);
    CHECK(a.mean > 0.0);
    CHECK(a.index == doctest::Approx(a.stddev / a.mean));

    CHECK_THROWS_AS(tv_random_directions(constant, {}, 0, 50, 3, kPi), ConfigError);
}

TEST_CASE("rougher landscape yields larger direction-averaged tv") {
    EnergyEvaluator e1(models::h1(), EnergyMethod::closed_form);
    EnergyEvaluator e2(models::h2(), EnergyMethod::statevector);
    auto t1 = tv_random_directions(e1, {}, 100, 200, 0);
    auto t2 = tv_random_directions(e2, {}, 100, 200, 0);
    CHECK(t1.mean > t2.mean);
}

TEST_CASE("tv seed stability within ten percent") {
    for (int k : {2, 5}) {
        EnergyEvaluator eval(models::klocal(k), EnergyMethod::statevector);
        std::vector<double> mus;
        for (std::uint64_t seed : {11ull, 22ull, 33ull})
            mus.push_back(tv_random_directions(eval, {}, 200, 200, seed).mean);
        double mean = 0;
        for (double m : mus) mean += m;
        mean /= mus.size();
        double var = 0;
        for (double m : mus) var += (m - mean) * (m - mean);
        CHECK(std::sqrt(var / mus.size()) / mean <= 0.10);
    }
}

TEST_CASE("grid tv") {
    LandscapeScan flat;
    flat.res_gamma = flat.res_beta = 8;
    flat.extent_gamma = flat.extent_beta = kPi;
    flat.values.assign(64, 1.0);
    CHECK(tv_grid(flat) == 0.0);

    // separable cos(2 gamma) + cos(2 beta) over one period on each axis:
    // per row and per column the discrete TV is 4, so the wrapped grid sum is
    // 8 R and the range is 4, giving 2 R.
    const int res = 201;
    auto f = [](double beta, double gamma) { return std::cos(2 * gamma) + std::cos(2 * beta); };
    auto scan = grid_scan(f, res, res, kPi, kPi);
    CHECK(tv_grid(scan) == doctest::Approx(2.0 * res).epsilon(0.05));
}

TEST_CASE("grid tv orders the single-k-body family like the directional mean") {
    std::vector<double> grid_vals, dir_vals;
    for (int k : {2, 5}) {
        EnergyEvaluator eval(models::klocal(k), EnergyMethod::statevector);
        grid_vals.push_back(tv_grid(grid_scan(eval, 101, 101, kPi, kPi)));
        dir_vals.push_back(tv_random_directions(eval, {}, 100, 200, 1).mean);
    }
    CHECK(grid_vals[0] < grid_vals[1]);
    CHECK(dir_vals[0] < dir_vals[1]);
}

TEST_CASE("fourier density") {
    FourierSpectrum s;
    s.kmin_gamma = s.kmin_beta = -2;
    s.kmax_gamma = s.kmax_beta = 2;
    s.extent_gamma = s.extent_beta = kPi;
    s.coeffs.assign(25, {0.0, 0.0});

    CHECK(fourier_density(s) == 0.0);

    s.at(1, 0) = {0.3, 0.4};
    CHECK(fourier_density(s) == doctest::Approx(1.0).epsilon(1e-12));

    // k equal-magnitude coefficients -> density k, regardless of phases
    s.at(-1, 2) = {-0.5, 0.0};
    s.at(2, 2) = {0.0, 0.5};
    s.at(0, 1) = {0.35355339059327379, -0.35355339059327379};
    CHECK(fourier_density(s) == doctest::Approx(4.0).epsilon(1e-12));

    // DC is ignored
    s.at(0, 0) = {100.0, 0.0};
    CHECK(fourier_density(s) == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("fourier density bounded by the numerical support count") {
    SplitMix64 rng(8);
    for (int trial = 0; trial < 5; ++trial) {
        auto h = qls_test::random_k_body(rng, 4, 3);
        EnergyEvaluator eval(h, EnergyMethod::statevector);
        auto s = spectrum(grid_scan(eval, 41, 41, rng.uniform(1, 3), kPi));
        auto d = remove_dc(s);
        double max_mag = 0;
        for (const auto& c : d.coeffs) max_mag = std::max(max_mag, std::abs(c));
        int support = 0;
        for (const auto& c : d.coeffs)
            if (std::abs(c) > 1e-12 * max_mag) ++support;
        CHECK(fourier_density(s) <= support + 1e-9);
    }
}

TEST_CASE("fourier max and mean") {
    auto f = [](double, double gamma) { return 1.6 * std::cos(4.0 * gamma); };
    auto s = spectrum(grid_scan(f, 41, 11, kPi, kPi));
    // single cosine: max |c| * ||w|| = (A/2) * f
    CHECK(fourier_max(s) == doctest::Approx(0.8 * 4.0).epsilon(1e-9));
    // two symmetric coefficients at the same norm: sum / max_norm = 2 * (A/2)
    CHECK(fourier_mean(s) == doctest::Approx(1.6).epsilon(1e-9));

    FourierSpectrum zero;
    zero.kmin_gamma = zero.kmin_beta = -1;
    zero.kmax_gamma = zero.kmax_beta = 1;
    zero.extent_gamma = zero.extent_beta = kPi;
    zero.coeffs.assign(9, {0.0, 0.0});
    CHECK(fourier_max(zero) == 0.0);
    CHECK(fourier_mean(zero) == 0.0);
}

TEST_CASE("high frequencies cannot outweigh the total variation") {
    // 1D section along beta; |c_f| * f <= (2/pi) * sum|df| + discretization slack
    EnergyEvaluator eval(models::toy(1, 1, 5), EnergyMethod::closed_form);
    for (double gamma0 : {0.15, 0.4}) {
        const int m = 400;
        auto samples = line_section(eval, {gamma0, 0.0}, {0.0, 1.0}, kPi, m);
        double tv_raw = 0.0;
        for (int j = 1; j <= m; ++j) tv_raw += std::abs(samples[j] - samples[j - 1]);
        // DFT of the periodic part (drop the duplicated endpoint)
        for (int k = 1; k <= 6; ++k) {
            std::complex<double> c{0.0, 0.0};
            for (int j = 0; j < m; ++j)
                c += samples[j] * std::polar(1.0, -2 * kPi * k * j / double(m));
            const double freq = 2.0 * k;  // beta period pi
            CHECK(std::abs(c) / double(m) * freq <= (2.0 / kPi) * tv_raw * 1.1);
        }
    }
}

TEST_CASE("scale invariance of tv and fourier density") {
    EnergyEvaluator eval(models::toy(1, 1, 5), EnergyMethod::closed_form);
    auto scaled = [&](double beta, double gamma) { return 5.0 * eval(beta, gamma); };

    auto base = tv_random_directions(eval, {}, 60, 100, 9);
    auto times5 = tv_random_directions(scaled, {}, 60, 100, 9, gamma_period(eval.hamiltonian()));
    CHECK(times5.mean == doctest::Approx(base.mean).epsilon(1e-9));
    CHECK(times5.stddev == doctest::Approx(base.stddev).epsilon(1e-9));

    auto s1 = grid_scan(eval, 61, 61, kPi, kPi);
    auto s5 = grid_scan(scaled, 61, 61, kPi, kPi);
    CHECK(tv_grid(s5) == doctest::Approx(tv_grid(s1)).epsilon(1e-9));
    CHECK(fourier_density(spectrum(s5)) ==
          doctest::Approx(fourier_density(spectrum(s1))).epsilon(1e-9));
}

TEST_CASE("roughness report pipeline and serialization") {
    EnergyEvaluator eval(models::toy(1, 1, 1), EnergyMethod::closed_form);
    RoughnessParams params;
    params.n_directions = 40;
    params.m_samples = 60;
    params.seed = 12;
    params.res_gamma = params.res_beta = 41;
    auto rep = compute_roughness(eval, params);
    CHECK(rep.tv_mean > 0.0);
    CHECK(rep.fourier_density > 1.0);
    CHECK(rep.gamma_extent == doctest::Approx(kPi));
    CHECK(!rep.gamma_period_fallback);
    CHECK(!rep.leakage_warning);

    std::stringstream ss;
    write_roughness_report(ss, rep, "# qls roughness\n");
    CHECK(ss.str().find("tv_mean ") != std::string::npos);
    CHECK(ss.str().find("seed 12") != std::string::npos);

    // incommensurate coefficients fall back to a pi-wide window
    auto frac = IsingHamiltonian::build(2, {{{0}, std::numbers::e}, {{1}, 1.0}});
    EnergyEvaluator fe(frac, EnergyMethod::closed_form);
    params.seed = 1;
    auto frep = compute_roughness(fe, params);
    CHECK(frep.gamma_period_fallback);
    CHECK(frep.leakage_warning);
    CHECK(frep.gamma_extent == doctest::Approx(kPi));

    auto zero = IsingHamiltonian::build(2, {});
    EnergyEvaluator ze(zero, EnergyMethod::statevector);
    auto zrep = compute_roughness(ze, params);
    CHECK(zrep.tv_mean == 0.0);
    CHECK(zrep.tv_grid == 0.0);
    CHECK(zrep.fourier_density == 0.0);
    CHECK(zrep.fourier_max == 0.0);
}
