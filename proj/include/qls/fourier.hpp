// Discrete Fourier analysis of landscape scans. Coefficients live on an
// integer lattice (k_gamma, k_beta) with physical frequencies
// f = k * 2*pi / extent per axis; the forward transform is normalized by
// 1/(res_gamma * res_beta) so a pure A*cos(f theta) input with f on the
// lattice shows up with magnitude A/2 at +-f. With that normalization the
// total spectral power equals the mean squared scan value (Parseval).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "qls/errors.hpp"
#include "qls/hamiltonian.hpp"
#include "qls/scan.hpp"

namespace qls {

struct FourierSpectrum {
    // Inclusive lattice ranges; a full spectrum of resolution N covers
    // [-floor(N/2), ceil(N/2) - 1].
    int kmin_gamma = 0, kmax_gamma = -1;
    int kmin_beta = 0, kmax_beta = -1;
    double extent_gamma = 0.0;
    double extent_beta = 0.0;
    std::vector<std::complex<double>> coeffs;  // row-major over (k_gamma, k_beta)
    bool leakage_warning = false;

    int width_beta() const { return kmax_beta - kmin_beta + 1; }
    int height_gamma() const { return kmax_gamma - kmin_gamma + 1; }
    bool contains(int kg, int kb) const {
        return kg >= kmin_gamma && kg <= kmax_gamma && kb >= kmin_beta && kb <= kmax_beta;
    }
    std::complex<double>& at(int kg, int kb) {
        return coeffs[static_cast<std::size_t>(kg - kmin_gamma) * width_beta() +
                      (kb - kmin_beta)];
    }
    std::complex<double> at(int kg, int kb) const {
        return coeffs[static_cast<std::size_t>(kg - kmin_gamma) * width_beta() +
                      (kb - kmin_beta)];
    }
    double f_gamma(int kg) const { return kg * 2.0 * std::numbers::pi / extent_gamma; }
    double f_beta(int kb) const { return kb * 2.0 * std::numbers::pi / extent_beta; }
};

namespace detail {

// One DFT stage along the fast axis of a row-major complex matrix, using a
// precomputed twiddle table (exactly periodic, unlike per-element cexp).
inline void dft_axis(std::vector<std::complex<double>>& data, int rows, int cols) {
    std::vector<std::complex<double>> twiddle(cols);
    for (int j = 0; j < cols; ++j) {
        const double angle = -2.0 * std::numbers::pi * j / cols;
        twiddle[j] = {std::cos(angle), std::sin(angle)};
    }
    std::vector<std::complex<double>> row(cols);
    for (int r = 0; r < rows; ++r) {
        auto* base = &data[static_cast<std::size_t>(r) * cols];
        std::copy(base, base + cols, row.begin());
        for (int t = 0; t < cols; ++t) {
            std::complex<double> sum = 0.0;
            for (int v = 0; v < cols; ++v)
                sum += row[v] * twiddle[static_cast<std::size_t>(v) * t % cols];
            base[t] = sum;
        }
    }
}

inline int dft_index_to_k(int t, int n) { return t <= (n - 1) / 2 ? t : t - n; }

}  // namespace detail

// Forward 2D DFT of an (endpoint-exclusive) scan, in natural k-order.
inline FourierSpectrum spectrum(const LandscapeScan& scan) {
    const int ng = scan.res_gamma, nb = scan.res_beta;
    std::vector<std::complex<double>> data(scan.values.begin(), scan.values.end());
    detail::dft_axis(data, ng, nb);  // beta axis (fast)
    // gamma axis: transpose, transform, transpose back
    std::vector<std::complex<double>> t(static_cast<std::size_t>(ng) * nb);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nb; ++v)
            t[static_cast<std::size_t>(v) * ng + u] = data[static_cast<std::size_t>(u) * nb + v];
    detail::dft_axis(t, nb, ng);
    FourierSpectrum s;
    s.kmin_gamma = -(ng / 2);
    s.kmax_gamma = (ng - 1) / 2;
    s.kmin_beta = -(nb / 2);
    s.kmax_beta = (nb - 1) / 2;
    s.extent_gamma = scan.extent_gamma;
    s.extent_beta = scan.extent_beta;
    s.coeffs.resize(static_cast<std::size_t>(ng) * nb);
    const double norm = 1.0 / (static_cast<double>(ng) * nb);
    for (int tg = 0; tg < ng; ++tg) {
        const int kg = detail::dft_index_to_k(tg, ng);
        for (int tb = 0; tb < nb; ++tb) {
            const int kb = detail::dft_index_to_k(tb, nb);
            s.at(kg, kb) = norm * t[static_cast<std::size_t>(tb) * ng + tg];
        }
    }
    return s;
}

// Zeroes the constant offset; everything else unchanged. Idempotent.
inline FourierSpectrum remove_dc(FourierSpectrum s) {
    if (s.contains(0, 0)) s.at(0, 0) = 0.0;
    return s;
}

// Keeps the f_gamma >= 0 half. Loses no information for real scans, whose
// spectra obey c(-w) = conj(c(w)).
inline FourierSpectrum half_spectrum(const FourierSpectrum& s) {
    FourierSpectrum h = s;
    h.kmin_gamma = std::max(0, s.kmin_gamma);
    h.coeffs.clear();
    h.coeffs.reserve(static_cast<std::size_t>(h.height_gamma()) * h.width_beta());
    for (int kg = h.kmin_gamma; kg <= h.kmax_gamma; ++kg)
        for (int kb = h.kmin_beta; kb <= h.kmax_beta; ++kb)
            h.coeffs.push_back(s.at(kg, kb));
    return h;
}

struct Peak {
    int k_gamma = 0;
    int k_beta = 0;
    double f_gamma = 0.0;
    double f_beta = 0.0;
    double magnitude = 0.0;
};

// Lattice points whose magnitude reaches relative_threshold times the maximum
// magnitude, DC excluded, sorted by descending magnitude.
inline std::vector<Peak> peaks(const FourierSpectrum& s, double relative_threshold) {
    if (!(relative_threshold > 0.0) || !(relative_threshold < 1.0))
        throw ConfigError("peak threshold must lie in (0, 1)");
    double max_mag = 0.0;
    for (int kg = s.kmin_gamma; kg <= s.kmax_gamma; ++kg)
        for (int kb = s.kmin_beta; kb <= s.kmax_beta; ++kb) {
            if (kg == 0 && kb == 0) continue;
            max_mag = std::max(max_mag, std::abs(s.at(kg, kb)));
        }
    std::vector<Peak> out;
    if (max_mag == 0.0) return out;
    const double cut = relative_threshold * max_mag;
    for (int kg = s.kmin_gamma; kg <= s.kmax_gamma; ++kg)
        for (int kb = s.kmin_beta; kb <= s.kmax_beta; ++kb) {
            if (kg == 0 && kb == 0) continue;
            const double mag = std::abs(s.at(kg, kb));
            if (mag >= cut)
                out.push_back(Peak{kg, kb, s.f_gamma(kg), s.f_beta(kb), mag});
        }
    std::sort(out.begin(), out.end(), [](const Peak& a, const Peak& b) {
        if (a.magnitude != b.magnitude) return a.magnitude > b.magnitude;
        return std::pair(a.k_gamma, a.k_beta) < std::pair(b.k_gamma, b.k_beta);
    });
    return out;
}

// Expected (|f_gamma|, |f_beta|) pairs for H(c) = Z0 + Z1 + c Z0 Z1 scanned
// over one period: (2c+-2, 2) from the linear terms and (2c+-2, 4), (4, 4),
// (4, 0), (0, 4) from the quadratic one. Entries whose amplitude vanishes are
// dropped: at c = 1 the 2c-2 components carry sin(0 * gamma) = 0, which
// removes (0, 2) entirely while (0, 4) survives through its cos(4 beta) term.
inline std::vector<std::pair<double, double>> predict_toy_frequencies(double c) {
    std::vector<std::pair<double, double>> f = {
        {2.0 * c + 2.0, 2.0}, {2.0 * c + 2.0, 4.0}, {4.0, 4.0}, {4.0, 0.0}, {0.0, 4.0}};
    if (2.0 * c - 2.0 != 0.0) {
        f.push_back({std::abs(2.0 * c - 2.0), 2.0});
        f.push_back({std::abs(2.0 * c - 2.0), 4.0});
    }
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

// True when every realized gamma frequency of h falls on the lattice of a
// scan with the given gamma extent (beta frequencies are even integers and
// land on the lattice whenever extent_beta is a multiple of pi). When false,
// the discrete transform spreads peaks over neighboring lattice points.
inline bool frequencies_on_lattice(const IsingHamiltonian& h, double extent_gamma,
                                   double extent_beta = std::numbers::pi) {
    const double beta_ratio = extent_beta / std::numbers::pi;
    if (std::abs(beta_ratio - std::round(beta_ratio)) > 1e-9) return false;
    if (h.terms().empty()) return true;  // constant landscape, DC only
    try {
        const double period = gamma_period(h);
        const double ratio = extent_gamma / period;  // = g * extent / pi
        return std::abs(ratio - std::round(ratio)) <= 1e-9 && std::round(ratio) != 0.0;
    } catch (const IncommensurateError&) {
        return false;
    }
}

// --------------------------------------------------------------------------
// Spectrum file format: '#' comments, then one line per lattice point,
// "k_gamma, k_beta, f_gamma, f_beta, magnitude, phase", ordered by (kg, kb).

inline void write_spectrum(std::ostream& os, const FourierSpectrum& s,
                           const std::string& header_comment = {}) {
    if (!header_comment.empty()) os << header_comment;
    char buf[160];
    for (int kg = s.kmin_gamma; kg <= s.kmax_gamma; ++kg)
        for (int kb = s.kmin_beta; kb <= s.kmax_beta; ++kb) {
            const auto c = s.at(kg, kb);
            std::snprintf(buf, sizeof buf, "%d, %d, %.17g, %.17g, %.17g, %.17g", kg, kb,
                          s.f_gamma(kg), s.f_beta(kb), std::abs(c), std::arg(c));
            os << buf << "\n";
        }
}

inline void write_spectrum_file(const std::string& path, const FourierSpectrum& s,
                                const std::string& header_comment = {}) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    write_spectrum(os, s, header_comment);
}

}  // namespace qls
