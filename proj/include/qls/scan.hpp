// 2D landscape grids over (gamma, beta) and 1D sections along arbitrary
// directions. Grids are endpoint-exclusive so that a scan whose extent equals
// one period tiles the torus exactly; this is what makes the discrete Fourier
// transform of a scan faithful.

#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qls/energy.hpp"
#include "qls/errors.hpp"
#include "qls/hamiltonian.hpp"

namespace qls {

// A parameter-space point. Gamma always comes first in pairs of this kind;
// energy evaluators take (beta, gamma) in the conventional C(beta, gamma)
// order, so all call sites go through eval_at to avoid transposition.
struct Point {
    double gamma = 0.0;
    double beta = 0.0;
};

template <class F>
double eval_at(F&& f, const Point& p) {
    return f(p.beta, p.gamma);
}

struct LandscapeScan {
    int res_gamma = 0;
    int res_beta = 0;
    Point center;
    double extent_gamma = 0.0;
    double extent_beta = 0.0;
    std::vector<double> values;  // row-major, gamma is the slow axis

    double& at(int u, int v) { return values[static_cast<std::size_t>(u) * res_beta + v]; }
    double at(int u, int v) const { return values[static_cast<std::size_t>(u) * res_beta + v]; }

    // Grid point (u, v) -> parameters; the right endpoint is excluded.
    double gamma_at(int u) const {
        return center.gamma - 0.5 * extent_gamma + u * (extent_gamma / res_gamma);
    }
    double beta_at(int v) const {
        return center.beta - 0.5 * extent_beta + v * (extent_beta / res_beta);
    }
};

template <class F>
LandscapeScan grid_scan(F&& f, int res_gamma, int res_beta, double extent_gamma,
                        double extent_beta, Point center = {}) {
    if (res_gamma < 2 || res_beta < 2)
        throw ConfigError("scan resolution must be at least 2 per axis");
    if (!(extent_gamma > 0.0) || !(extent_beta > 0.0))
        throw ConfigError("scan extents must be positive");
    LandscapeScan scan;
    scan.res_gamma = res_gamma;
    scan.res_beta = res_beta;
    scan.center = center;
    scan.extent_gamma = extent_gamma;
    scan.extent_beta = extent_beta;
    scan.values.resize(static_cast<std::size_t>(res_gamma) * res_beta);
    for (int u = 0; u < res_gamma; ++u) {
        const double gamma = scan.gamma_at(u);
        for (int v = 0; v < res_beta; ++v)
            scan.at(u, v) = f(scan.beta_at(v), gamma);
    }
    return scan;
}

// Samples f along origin + t * direction at t = j * t_max / m, j = 0..m
// (both endpoints included; m intervals).
template <class F>
std::vector<double> line_section(F&& f, Point origin, Point direction, double t_max, int m) {
    if (m < 2) throw ConfigError("line section needs m >= 2");
    const double norm = std::hypot(direction.gamma, direction.beta);
    if (std::abs(norm - 1.0) > 1e-9)
        throw ConfigError("line section direction must be a unit vector");
    std::vector<double> samples;
    samples.reserve(m + 1);
    for (int j = 0; j <= m; ++j) {
        const double t = t_max * j / m;
        samples.push_back(eval_at(f, Point{origin.gamma + t * direction.gamma,
                                           origin.beta + t * direction.beta}));
    }
    return samples;
}

struct ScanRecommendation {
    double extent_gamma = 0.0;  // one gamma period
    double extent_beta = std::numbers::pi;
    int min_res_gamma = 0;
    int min_res_beta = 0;
};

namespace detail {

// Smallest odd integer strictly greater than 2 * cycles + 1.
inline int nyquist_min_res(double max_frequency, double extent) {
    const double cycles = max_frequency * extent / (2.0 * std::numbers::pi);
    int res = static_cast<int>(std::floor(2.0 * cycles + 1.0)) + 1;
    if (res % 2 == 0) ++res;
    return res;
}

}  // namespace detail

// Scan extents covering exactly one period on each axis, with the minimum
// resolutions that keep the resulting spectrum alias-free. Propagates the
// incommensurate-coefficients error when no gamma period exists.
inline ScanRecommendation recommended_scan_params(const IsingHamiltonian& h) {
    ScanRecommendation rec;
    rec.extent_gamma = gamma_period(h);
    rec.min_res_gamma = detail::nyquist_min_res(gamma_frequency_bound(h), rec.extent_gamma);
    rec.min_res_beta = detail::nyquist_min_res(beta_frequency_bound(h), rec.extent_beta);
    return rec;
}

// --------------------------------------------------------------------------
// Scan file format: '#' comment lines, then header lines res_gamma/res_beta/
// center/extent, then one comma-separated row of values per gamma grid line.
// %.17g formatting makes the round-trip bit-exact.

inline void write_scan(std::ostream& os, const LandscapeScan& scan,
                       const std::string& header_comment = {}) {
    if (!header_comment.empty()) os << header_comment;
    char buf[64];
    os << "res_gamma " << scan.res_gamma << "\n";
    os << "res_beta " << scan.res_beta << "\n";
    std::snprintf(buf, sizeof buf, "%.17g %.17g", scan.center.gamma, scan.center.beta);
    os << "center " << buf << "\n";
    std::snprintf(buf, sizeof buf, "%.17g %.17g", scan.extent_gamma, scan.extent_beta);
    os << "extent " << buf << "\n";
    for (int u = 0; u < scan.res_gamma; ++u) {
        for (int v = 0; v < scan.res_beta; ++v) {
            std::snprintf(buf, sizeof buf, "%.17g", scan.at(u, v));
            os << (v ? "," : "") << buf;
        }
        os << "\n";
    }
}

inline LandscapeScan read_scan(std::istream& is) {
    LandscapeScan scan;
    std::string line;
    int header_fields = 0;
    while (header_fields < 4 && std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string key;
        ls >> key;
        if (key == "res_gamma") ls >> scan.res_gamma;
        else if (key == "res_beta") ls >> scan.res_beta;
        else if (key == "center") ls >> scan.center.gamma >> scan.center.beta;
        else if (key == "extent") ls >> scan.extent_gamma >> scan.extent_beta;
        else throw ConfigError("unexpected scan header line: " + line);
        if (ls.fail()) throw ConfigError("malformed scan header line: " + line);
        ++header_fields;
    }
    if (header_fields < 4 || scan.res_gamma < 2 || scan.res_beta < 2)
        throw ConfigError("incomplete scan header");
    scan.values.reserve(static_cast<std::size_t>(scan.res_gamma) * scan.res_beta);
    int rows = 0;
    while (rows < scan.res_gamma && std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::string cell;
        int cols = 0;
        while (std::getline(ls, cell, ',')) {
            scan.values.push_back(std::stod(cell));
            ++cols;
        }
        if (cols != scan.res_beta)
            throw ConfigError("scan row has " + std::to_string(cols) + " values, expected " +
                              std::to_string(scan.res_beta));
        ++rows;
    }
    if (rows != scan.res_gamma) throw ConfigError("scan file truncated");
    return scan;
}

inline void write_scan_file(const std::string& path, const LandscapeScan& scan,
                            const std::string& header_comment = {}) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    write_scan(os, scan, header_comment);
}

inline LandscapeScan read_scan_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw ConfigError("cannot open " + path);
    return read_scan(is);
}

// Plain (ASCII) portable graymap of a scan, one image row per gamma grid
// line, min value black, max white. A constant scan renders black.
inline void write_heatmap_pgm(std::ostream& os, const LandscapeScan& scan) {
    double lo = scan.values.empty() ? 0.0 : scan.values[0];
    double hi = lo;
    for (double v : scan.values) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    const double range = hi - lo;
    os << "P2\n" << scan.res_beta << " " << scan.res_gamma << "\n255\n";
    for (int u = 0; u < scan.res_gamma; ++u) {
        for (int v = 0; v < scan.res_beta; ++v) {
            int gray = range > 0.0
                           ? static_cast<int>(std::lround(255.0 * (scan.at(u, v) - lo) / range))
                           : 0;
            os << (v ? " " : "") << gray;
        }
        os << "\n";
    }
}

inline void write_heatmap_pgm_file(const std::string& path, const LandscapeScan& scan) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    write_heatmap_pgm(os, scan);
}

}  // namespace qls
