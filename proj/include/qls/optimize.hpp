// Multistart bounded local optimization of the 2-parameter landscape.
//
// The local step is a self-contained BFGS with central-difference gradients
// (step 1e-6), Armijo backtracking, and projection onto the bounding box;
// it converges on projected-gradient norm < 1e-8. Runs never increase the
// energy. The multistart driver estimates the global minimum from a dense
// grid (plus a polish descent from the best grid point) joined with the run
// results, and counts runs landing within a relative tolerance of it.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <string>
#include <vector>

#include "qls/errors.hpp"
#include "qls/rng.hpp"
#include "qls/scan.hpp"

namespace qls {

struct Box {
    Point lo{-0.9 * std::numbers::pi, -0.9 * std::numbers::pi};
    Point hi{0.9 * std::numbers::pi, 0.9 * std::numbers::pi};

    Point clamp(Point p) const {
        return Point{std::clamp(p.gamma, lo.gamma, hi.gamma),
                     std::clamp(p.beta, lo.beta, hi.beta)};
    }
    bool contains(Point p) const {
        return p.gamma >= lo.gamma && p.gamma <= hi.gamma && p.beta >= lo.beta &&
               p.beta <= hi.beta;
    }
};

struct OptimizeOptions {
    double gradient_step = 1e-6;
    double gradient_tolerance = 1e-8;
    int max_iters = 200;
    double armijo_c = 1e-4;
    double backtrack = 0.5;
    double min_step = 1e-14;
};

struct OptimizationRun {
    Point init_params;
    Point final_params;
    double final_energy = 0.0;
    long n_evaluations = 0;
    bool converged = false;
};

namespace detail {

struct Vec2 {
    double g = 0.0, b = 0.0;
    double dot(const Vec2& o) const { return g * o.g + b * o.b; }
    double norm() const { return std::hypot(g, b); }
};

// Zeroes gradient components that point out of the box at an active bound.
inline Vec2 project_gradient(Vec2 grad, Point x, const Box& box) {
    if ((x.gamma <= box.lo.gamma && grad.g > 0) || (x.gamma >= box.hi.gamma && grad.g < 0))
        grad.g = 0.0;
    if ((x.beta <= box.lo.beta && grad.b > 0) || (x.beta >= box.hi.beta && grad.b < 0))
        grad.b = 0.0;
    return grad;
}

}  // namespace detail

template <class F>
OptimizationRun minimize(F&& f, Point init, const Box& bounds,
                         const OptimizeOptions& opts = {}) {
    if (!bounds.contains(init)) throw ConfigError("initial point outside bounds");

    OptimizationRun run;
    run.init_params = init;
    long evals = 0;
    auto energy = [&](Point p) {
        ++evals;
        return eval_at(f, p);
    };
    auto gradient = [&](Point p) {
        const double h = opts.gradient_step;
        return detail::Vec2{
            (energy({p.gamma + h, p.beta}) - energy({p.gamma - h, p.beta})) / (2 * h),
            (energy({p.gamma, p.beta + h}) - energy({p.gamma, p.beta - h})) / (2 * h)};
    };

    Point x = init;
    double fx = energy(x);
    run.final_params = x;
    run.final_energy = fx;
    run.n_evaluations = evals;
    if (!std::isfinite(fx)) return run;  // failed: non-finite at start

    detail::Vec2 g = gradient(x);
    // inverse Hessian approximation, symmetric 2x2
    double h00 = 1.0, h01 = 0.0, h11 = 1.0;

    auto line_search = [&](const detail::Vec2& dir, Point& x_new, double& f_new) {
        double step = 1.0;
        while (step >= opts.min_step) {
            const Point trial = bounds.clamp({x.gamma + step * dir.g, x.beta + step * dir.b});
            const detail::Vec2 disp{trial.gamma - x.gamma, trial.beta - x.beta};
            if (disp.norm() == 0.0) return false;  // fully clipped
            const double ft = energy(trial);
            if (std::isfinite(ft) && ft <= fx + opts.armijo_c * g.dot(disp)) {
                x_new = trial;
                f_new = ft;
                return true;
            }
            step *= opts.backtrack;
        }
        return false;
    };

    for (int iter = 0; iter < opts.max_iters; ++iter) {
        const detail::Vec2 pg = detail::project_gradient(g, x, bounds);
        if (pg.norm() < opts.gradient_tolerance) {
            run.converged = true;
            break;
        }
        detail::Vec2 dir{-(h00 * g.g + h01 * g.b), -(h01 * g.g + h11 * g.b)};
        const bool is_steepest = (h00 == 1.0 && h01 == 0.0 && h11 == 1.0);
        if (dir.dot(g) >= 0.0) {  // not a descent direction: reset to steepest
            h00 = h11 = 1.0;
            h01 = 0.0;
            dir = {-g.g, -g.b};
        }

        Point x_new = x;
        double f_new = fx;
        bool accepted = line_search(dir, x_new, f_new);
        if (!accepted && !is_steepest) {
            // A badly scaled quasi-Newton direction can defeat backtracking;
            // retry once along the plain gradient before giving up.
            h00 = h11 = 1.0;
            h01 = 0.0;
            accepted = line_search({-g.g, -g.b}, x_new, f_new);
        }
        if (!accepted) {
            // No admissible decrease left; report convergence only if the
            // gradient test already holds.
            run.converged = pg.norm() < opts.gradient_tolerance;
            break;
        }

        const detail::Vec2 g_new = gradient(x_new);
        const detail::Vec2 s{x_new.gamma - x.gamma, x_new.beta - x.beta};
        const detail::Vec2 y{g_new.g - g.g, g_new.b - g.b};
        const double sy = s.dot(y);
        if (sy > 1e-12 * s.norm() * y.norm()) {
            // BFGS inverse update: H <- (I - r s y^T) H (I - r y s^T) + r s s^T
            const double r = 1.0 / sy;
            const double hy_g = h00 * y.g + h01 * y.b;
            const double hy_b = h01 * y.g + h11 * y.b;
            const double yhy = y.g * hy_g + y.b * hy_b;
            h00 += (1.0 + r * yhy) * r * s.g * s.g - r * (s.g * hy_g + hy_g * s.g);
            h01 += (1.0 + r * yhy) * r * s.g * s.b - r * (s.g * hy_b + hy_g * s.b);
            h11 += (1.0 + r * yhy) * r * s.b * s.b - r * (s.b * hy_b + hy_b * s.b);
        }
        x = x_new;
        fx = f_new;
        g = g_new;
    }

    run.final_params = x;
    run.final_energy = fx;
    run.n_evaluations = evals;
    return run;
}

struct MultistartOptions {
    int n_runs = 100;
    Box init_box;            // also the optimization bounds
    std::uint64_t seed = 0;
    OptimizeOptions local;
    int estimate_grid_res = 201;      // dense-grid global-minimum estimate
    double success_rel_tolerance = 1e-6;
    int histogram_bins = 50;
};

struct Histogram {
    double bin_lo = 0.0;
    double bin_width = 0.0;
    std::vector<long> counts;
};

struct BenchmarkResult {
    std::vector<OptimizationRun> runs;
    double global_min_estimate = 0.0;
    long success_count = 0;
    Histogram histogram;
};

template <class F>
BenchmarkResult multistart(F&& f, const MultistartOptions& opts = {}) {
    BenchmarkResult result;
    result.runs.reserve(opts.n_runs);
    for (int i = 0; i < opts.n_runs; ++i) {
        SplitMix64 rng(derive_seed(opts.seed, i));
        const Point init{rng.uniform(opts.init_box.lo.gamma, opts.init_box.hi.gamma),
                         rng.uniform(opts.init_box.lo.beta, opts.init_box.hi.beta)};
        result.runs.push_back(minimize(f, init, opts.init_box, opts.local));
    }

    // Global-minimum estimate: dense grid over the box, refined by a descent
    // from the best grid point, joined with the multistart results.
    double best_grid = std::numeric_limits<double>::infinity();
    Point best_grid_point = opts.init_box.lo;
    const int res = opts.estimate_grid_res;
    for (int u = 0; u < res; ++u) {
        const double gamma = opts.init_box.lo.gamma +
                             (opts.init_box.hi.gamma - opts.init_box.lo.gamma) * u / (res - 1);
        for (int v = 0; v < res; ++v) {
            const double beta = opts.init_box.lo.beta +
                                (opts.init_box.hi.beta - opts.init_box.lo.beta) * v / (res - 1);
            const double e = eval_at(f, Point{gamma, beta});
            if (e < best_grid) {
                best_grid = e;
                best_grid_point = Point{gamma, beta};
            }
        }
    }
    const OptimizationRun polish = minimize(f, best_grid_point, opts.init_box, opts.local);
    double estimate = std::min(best_grid, polish.final_energy);
    for (const auto& r : result.runs) estimate = std::min(estimate, r.final_energy);
    result.global_min_estimate = estimate;

    const double tol = opts.success_rel_tolerance * std::abs(estimate) + 1e-12;
    for (const auto& r : result.runs)
        if (r.final_energy - estimate <= tol) ++result.success_count;

    // Histogram of final energies.
    double lo = result.runs.empty() ? 0.0 : result.runs[0].final_energy;
    double hi = lo;
    for (const auto& r : result.runs) {
        lo = std::min(lo, r.final_energy);
        hi = std::max(hi, r.final_energy);
    }
    Histogram& h = result.histogram;
    h.bin_lo = lo;
    if (hi > lo) {
        h.bin_width = (hi - lo) / opts.histogram_bins;
        h.counts.assign(opts.histogram_bins, 0);
        for (const auto& r : result.runs) {
            int bin = static_cast<int>((r.final_energy - lo) / h.bin_width);
            bin = std::clamp(bin, 0, opts.histogram_bins - 1);
            ++h.counts[bin];
        }
    } else {
        h.bin_width = 0.0;
        h.counts.assign(1, static_cast<long>(result.runs.size()));
    }
    return result;
}

// Number of distinct final-energy clusters: sorted energies split wherever
// consecutive values differ by more than `gap`.
inline int count_energy_clusters(const BenchmarkResult& result, double gap = 1e-4) {
    if (result.runs.empty()) return 0;
    std::vector<double> finals;
    finals.reserve(result.runs.size());
    for (const auto& r : result.runs) finals.push_back(r.final_energy);
    std::sort(finals.begin(), finals.end());
    int clusters = 1;
    for (std::size_t i = 1; i < finals.size(); ++i)
        if (finals[i] - finals[i - 1] > gap) ++clusters;
    return clusters;
}

// --------------------------------------------------------------------------
// Serialization: '#' comments, summary keys, per-run records, histogram.

inline void write_benchmark(std::ostream& os, const BenchmarkResult& r,
                            const std::string& header_comment = {}) {
    if (!header_comment.empty()) os << header_comment;
    char buf[256];
    std::snprintf(buf, sizeof buf, "%.17g", r.global_min_estimate);
    os << "global_min_estimate " << buf << "\n";
    os << "success_count " << r.success_count << "\n";
    os << "n_runs " << r.runs.size() << "\n";
    os << "# run <i> <init_gamma> <init_beta> <final_gamma> <final_beta>"
          " <final_energy> <n_evaluations> <converged>\n";
    for (std::size_t i = 0; i < r.runs.size(); ++i) {
        const auto& run = r.runs[i];
        std::snprintf(buf, sizeof buf, "run %zu %.17g %.17g %.17g %.17g %.17g %ld %d", i,
                      run.init_params.gamma, run.init_params.beta, run.final_params.gamma,
                      run.final_params.beta, run.final_energy, run.n_evaluations,
                      run.converged ? 1 : 0);
        os << buf << "\n";
    }
    std::snprintf(buf, sizeof buf, "hist_bin_lo %.17g", r.histogram.bin_lo);
    os << buf << "\n";
    std::snprintf(buf, sizeof buf, "hist_bin_width %.17g", r.histogram.bin_width);
    os << buf << "\n";
    os << "hist";
    for (long c : r.histogram.counts) os << " " << c;
    os << "\n";
}

inline void write_benchmark_file(const std::string& path, const BenchmarkResult& r,
                                 const std::string& header_comment = {}) {
    std::ofstream os(path);
    if (!os) throw ConfigError("cannot open " + path + " for writing");
    write_benchmark(os, r, header_comment);
}

}  // namespace qls
