// Landscape roughness metrics: range-normalized total variation along 1D
// sections (random-direction mean/std and full-grid variants), and the
// spectral scores Fourier density (squared l1/l2 ratio, a sharp lower bound
// on the number of nonzero coefficients), Fourier max and Fourier mean.

#pragma once

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qls/energy.hpp"
#include "qls/errors.hpp"
#include "qls/fourier.hpp"
#include "qls/rng.hpp"
#include "qls/scan.hpp"

namespace qls {

// Sum of |f_{j+1} - f_j| over the sampled section, divided by the value
// range. A constant section has zero variation by convention (the 0/0 case).
inline double tv_1d(const std::vector<double>& samples) {
    if (samples.size() < 2) throw ConfigError("tv_1d needs at least 2 samples");
    double lo = samples[0], hi = samples[0], sum = 0.0;
    for (std::size_t j = 1; j < samples.size(); ++j) {
        sum += std::abs(samples[j] - samples[j - 1]);
        lo = std::min(lo, samples[j]);
        hi = std::max(hi, samples[j]);
    }
    return hi > lo ? sum / (hi - lo) : 0.0;
}

struct TvStats {
    double mean = 0.0;
    double stddev = 0.0;
    double index = 0.0;  // stddev / mean, 0 when mean is 0
};

namespace detail {

inline TvStats aggregate(const std::vector<double>& values) {
    TvStats st;
    // Kahan-compensated sums keep the aggregate independent of any future
    // reordering of the per-direction evaluations.
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        double y = v - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    st.mean = sum / static_cast<double>(values.size());
    double sq = 0.0, sq_comp = 0.0;
    for (double v : values) {
        double d = (v - st.mean) * (v - st.mean) - sq_comp;
        double t = sq + d;
        sq_comp = (t - sq) - d;
        sq = t;
    }
    st.stddev = std::sqrt(sq / static_cast<double>(values.size()));
    st.index = st.mean != 0.0 ? st.stddev / st.mean : 0.0;
    return st;
}

// Sampling span along direction d: exactly one period of the axis that
// completes first. The alternative (spanning the slower axis's full period)
// leaves near-axis directions sampled hundreds of periods apart at m ~ 200,
// and the resulting undersampling noise drowns genuine roughness
// differences between Hamiltonians.
inline double direction_span(Point d, double period_gamma, double period_beta) {
    const double span_gamma =
        d.gamma != 0.0 ? period_gamma / std::abs(d.gamma) : std::numeric_limits<double>::infinity();
    const double span_beta =
        d.beta != 0.0 ? period_beta / std::abs(d.beta) : std::numeric_limits<double>::infinity();
    return std::min(span_gamma, span_beta);
}

}  // namespace detail

// Normalized TV along n_dirs random unit directions from `center`, each
// sampled with m intervals over one direction-dependent period. Per-direction
// seeds derive from the master seed by counter, so results do not depend on
// evaluation order. `period_gamma` sets the gamma span (pi is always the beta
// period for these landscapes).
template <class F>
TvStats tv_random_directions(F&& f, Point center, int n_dirs, int m, std::uint64_t seed,
                             double period_gamma) {
    if (n_dirs < 1) throw ConfigError("tv_random_directions needs n_dirs >= 1");
    std::vector<double> tvs;
    tvs.reserve(n_dirs);
    for (int dir = 0; dir < n_dirs; ++dir) {
        SplitMix64 rng(derive_seed(seed, dir));
        const double angle = 2.0 * std::numbers::pi * rng.uniform01();
        const Point d{std::cos(angle), std::sin(angle)};
        const double span = detail::direction_span(d, period_gamma, std::numbers::pi);
        tvs.push_back(tv_1d(line_section(f, center, d, span, m)));
    }
    return detail::aggregate(tvs);
}

// Overload that derives the gamma period from the evaluator's Hamiltonian,
// falling back to pi (the beta period and the conventional scan extent) for
// incommensurate coefficients.
inline TvStats tv_random_directions(const EnergyEvaluator& eval, Point center, int n_dirs,
                                    int m, std::uint64_t seed,
                                    std::optional<double> period_gamma = {}) {
    double period = std::numbers::pi;
    if (period_gamma) {
        period = *period_gamma;
    } else {
        try {
            period = gamma_period(eval.hamiltonian());
        } catch (const GuardError&) {
        } catch (const ConfigError&) {
        }
    }
    return tv_random_directions([&eval](double b, double g) { return eval(b, g); }, center,
                                n_dirs, m, seed, period);
}

// Grid total variation: absolute neighbor differences along both axes with
// periodic wrap, normalized by the value range.
inline double tv_grid(const LandscapeScan& scan) {
    double lo = scan.values[0], hi = scan.values[0];
    for (double v : scan.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) return 0.0;
    double sum = 0.0;
    for (int u = 0; u < scan.res_gamma; ++u)
        for (int v = 0; v < scan.res_beta; ++v) {
            const int u1 = (u + 1) % scan.res_gamma;
            const int v1 = (v + 1) % scan.res_beta;
            sum += std::abs(scan.at(u1, v) - scan.at(u, v));
            sum += std::abs(scan.at(u, v1) - scan.at(u, v));
        }
    return sum / (hi - lo);
}

// (sum |c|)^2 / sum |c|^2 over the DC-removed spectrum; equals the number of
// nonzero coefficients exactly when they all share one magnitude.
inline double fourier_density(const FourierSpectrum& s) {
    const FourierSpectrum d = remove_dc(s);
    double l1 = 0.0, l2_sq = 0.0;
    for (const auto& c : d.coeffs) {
        const double m = std::abs(c);
        l1 += m;
        l2_sq += m * m;
    }
    return l2_sq > 0.0 ? l1 * l1 / l2_sq : 0.0;
}

namespace detail {

inline double freq_norm(const FourierSpectrum& s, int kg, int kb) {
    return std::hypot(s.f_gamma(kg), s.f_beta(kb));
}

}  // namespace detail

// max over the lattice of |c_w| * ||w||, physical frequencies.
inline double fourier_max(const FourierSpectrum& s) {
    const FourierSpectrum d = remove_dc(s);
    double best = 0.0;
    for (int kg = d.kmin_gamma; kg <= d.kmax_gamma; ++kg)
        for (int kb = d.kmin_beta; kb <= d.kmax_beta; ++kb)
            best = std::max(best, std::abs(d.at(kg, kb)) * detail::freq_norm(d, kg, kb));
    return best;
}

// Sum of |c_w| * ||w|| normalized by the largest frequency norm that carries
// any weight ("present": magnitude above 1e-12 of the maximum).
inline double fourier_mean(const FourierSpectrum& s) {
    const FourierSpectrum d = remove_dc(s);
    double max_mag = 0.0;
    for (const auto& c : d.coeffs) max_mag = std::max(max_mag, std::abs(c));
    if (max_mag == 0.0) return 0.0;
    const double present = 1e-12 * max_mag;
    double sum = 0.0, max_norm = 0.0;
    for (int kg = d.kmin_gamma; kg <= d.kmax_gamma; ++kg)
        for (int kb = d.kmin_beta; kb <= d.kmax_beta; ++kb) {
            const double mag = std::abs(d.at(kg, kb));
            const double nrm = detail::freq_norm(d, kg, kb);
            sum += mag * nrm;
            if (mag > present) max_norm = std::max(max_norm, nrm);
        }
    if (max_norm == 0.0) return 0.0;
    return sum / max_norm;
}

// --------------------------------------------------------------------------
// One-stop report

struct RoughnessParams {
    int n_directions = 200;
    int m_samples = 200;
    std::uint64_t seed = 0;
    int res_gamma = 201;
    int res_beta = 201;
    Point center;
    // Gamma span for both the TV sections and the scan; defaults to the
    // Hamiltonian's period, or pi when the coefficients are incommensurate.
    std::optional<double> gamma_extent;
    double beta_extent = std::numbers::pi;
};

struct RoughnessReport {
    double tv_mean = 0.0;
    double tv_std = 0.0;
    double tv_index = 0.0;
    double tv_grid = 0.0;
    double fourier_density = 0.0;
    double fourier_max = 0.0;
    double fourier_mean = 0.0;
    int n_directions = 0;
    int m_samples = 0;
    std::uint64_t seed = 0;
    int res_gamma = 0;
    int res_beta = 0;
    Point center;
    double gamma_extent = 0.0;
    double beta_extent = 0.0;
    bool gamma_period_fallback = false;  // true when pi replaced an unknown period
    bool leakage_warning = false;
};

inline RoughnessReport compute_roughness(const EnergyEvaluator& eval,
                                         const RoughnessParams& params) {
    RoughnessReport rep;
    rep.n_directions = params.n_directions;
    rep.m_samples = params.m_samples;
    rep.seed = params.seed;
    rep.res_gamma = params.res_gamma;
    rep.res_beta = params.res_beta;
    rep.center = params.center;
    rep.beta_extent = params.beta_extent;

    double gamma_extent;
    if (params.gamma_extent) {
        gamma_extent = *params.gamma_extent;
    } else {
        try {
            gamma_extent = gamma_period(eval.hamiltonian());
        } catch (const GuardError&) {
            gamma_extent = std::numbers::pi;
            rep.gamma_period_fallback = true;
        } catch (const ConfigError&) {
            gamma_extent = std::numbers::pi;
            rep.gamma_period_fallback = true;
        }
    }
    rep.gamma_extent = gamma_extent;

    const TvStats tv = tv_random_directions(eval, params.center, params.n_directions,
                                            params.m_samples, params.seed, gamma_extent);
    rep.tv_mean = tv.mean;
    rep.tv_std = tv.stddev;
    rep.tv_index = tv.index;

    const LandscapeScan scan = grid_scan(eval, params.res_gamma, params.res_beta,
                                         gamma_extent, params.beta_extent, params.center);
    rep.tv_grid = tv_grid(scan);
    const FourierSpectrum s = spectrum(scan);
    rep.fourier_density = fourier_density(s);
    rep.fourier_max = fourier_max(s);
    rep.fourier_mean = fourier_mean(s);
    rep.leakage_warning =
        !frequencies_on_lattice(eval.hamiltonian(), gamma_extent, params.beta_extent);
    return rep;
}

// Flat key-value serialization, one entry per line.
inline void write_roughness_report(std::ostream& os, const RoughnessReport& r,
                                   const std::string& header_comment = {}) {
    if (!header_comment.empty()) os << header_comment;
    char buf[64];
    auto put = [&](const char* key, double v) {
        std::snprintf(buf, sizeof buf, "%.17g", v);
        os << key << " " << buf << "\n";
    };
    put("tv_mean", r.tv_mean);
    put("tv_std", r.tv_std);
    put("tv_index", r.tv_index);
    put("tv_grid", r.tv_grid);
    put("fourier_density", r.fourier_density);
    put("fourier_max", r.fourier_max);
    put("fourier_mean", r.fourier_mean);
    os << "n_directions " << r.n_directions << "\n";
    os << "m_samples " << r.m_samples << "\n";
    os << "seed " << r.seed << "\n";
    os << "res_gamma " << r.res_gamma << "\n";
    os << "res_beta " << r.res_beta << "\n";
    put("center_gamma", r.center.gamma);
    put("center_beta", r.center.beta);
    put("gamma_extent", r.gamma_extent);
    put("beta_extent", r.beta_extent);
    os << "gamma_period_fallback " << (r.gamma_period_fallback ? 1 : 0) << "\n";
    os << "leakage_warning " << (r.leakage_warning ? 1 : 0) << "\n";
}

inline void write_roughness_report_file(const std::string& path, const RoughnessReport& r,
                                        const std::string& header_comment = {}) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    write_roughness_report(os, r, header_comment);
}

}  // namespace qls
