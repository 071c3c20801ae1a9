// Command-line front end. Each experiment from the study is a subcommand:
//
//   scan           2D landscape grid -> scan file (+ optional PGM heatmap)
//   spectrum       scan -> DFT -> DC removal -> half spectrum -> peak listing
//   roughness      TV / Fourier roughness report for one Hamiltonian
//   interpolate    per-step roughness while adding terms one at a time
//   concentration  MaxCut on random regular graphs across sizes
//   optbench       multistart local-optimization benchmark
//
// All randomized commands require an explicit --seed and are bit-reproducible.
// Exit codes: 0 success, 2 configuration error, 3 numeric/guard error.

#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "qls/energy.hpp"
#include "qls/errors.hpp"
#include "qls/fourier.hpp"
#include "qls/hamiltonian.hpp"
#include "qls/io.hpp"
#include "qls/models.hpp"
#include "qls/optimize.hpp"
#include "qls/roughness.hpp"
#include "qls/scan.hpp"

namespace qls::cli {

namespace detail {

inline std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Builtin names first, anything else is treated as a file path.
inline IsingHamiltonian resolve_hamiltonian(const std::string& name) {
    if (name == "H1") return models::h1();
    if (name == "H2") return models::h2();
    if (name == "H6") return models::h6();
    if (name == "H7") return models::h7();
    if (name == "H8") return models::h8();
    if (name == "H9") return models::h9();
    if (name.rfind("toy:", 0) == 0) {
        double a, b, c;
        char tail;
        if (std::sscanf(name.c_str(), "toy:%lf,%lf,%lf%c", &a, &b, &c, &tail) != 3)
            throw ConfigError("expected toy:a,b,c, got '" + name + "'");
        return models::toy(a, b, c);
    }
    if (name.rfind("klocal:", 0) == 0) {
        int k;
        char tail;
        if (std::sscanf(name.c_str(), "klocal:%d%c", &k, &tail) != 1)
            throw ConfigError("expected klocal:k, got '" + name + "'");
        return models::klocal(k);
    }
    return read_hamiltonian_file(name);
}

struct HamiltonianSource {
    std::string hamiltonian;  // builtin name or path
    std::string graph_path;   // MaxCut instance from a graph file

    IsingHamiltonian resolve() const {
        if (!graph_path.empty()) return maxcut_hamiltonian(read_graph_file(graph_path));
        if (hamiltonian.empty()) throw ConfigError("need --hamiltonian or --graph");
        return resolve_hamiltonian(hamiltonian);
    }
    std::string describe() const {
        return graph_path.empty() ? hamiltonian : ("maxcut(" + graph_path + ")");
    }
};

inline EnergyEvaluator resolve_evaluator(const IsingHamiltonian& h, const std::string& name) {
    if (name == "auto") return auto_evaluator(h);
    if (name == "closed") return EnergyEvaluator(h, EnergyMethod::closed_form);
    if (name == "statevector") return EnergyEvaluator(h, EnergyMethod::statevector);
    throw ConfigError("unknown evaluator '" + name + "'");
}

struct ResolvedExtent {
    double gamma = std::numbers::pi;
    double beta = std::numbers::pi;
    bool fallback = false;  // auto requested but no gamma period exists
};

inline ResolvedExtent resolve_extent(const std::vector<std::string>& extent_arg,
                                     const IsingHamiltonian& h, std::ostream& err) {
    ResolvedExtent e;
    if (extent_arg.empty() || extent_arg[0] == "auto") {
        try {
            e.gamma = gamma_period(h);
        } catch (const IncommensurateError&) {
            e.fallback = true;
            err << "warning: coefficients are incommensurate; no exact gamma period, "
                   "using extent pi (expect spectral leakage)\n";
        }
        return e;
    }
    try {
        e.gamma = std::stod(extent_arg[0]);
        e.beta = extent_arg.size() > 1 ? std::stod(extent_arg[1]) : e.gamma;
    } catch (const std::exception&) {
        throw ConfigError("--extent expects 'auto' or numeric values");
    }
    if (!(e.gamma > 0) || !(e.beta > 0)) throw ConfigError("extents must be positive");
    return e;
}

inline void warn_if_under_resolved(const IsingHamiltonian& h, const ResolvedExtent& ext,
                                   int res_gamma, int res_beta, std::ostream& err) {
    const int need_g = qls::detail::nyquist_min_res(gamma_frequency_bound(h), ext.gamma);
    const int need_b = qls::detail::nyquist_min_res(beta_frequency_bound(h), ext.beta);
    if (res_gamma < need_g || res_beta < need_b)
        err << "warning: resolution " << res_gamma << "x" << res_beta
            << " is below the recommended minimum " << need_g << "x" << need_b
            << "; expect aliasing artifacts in the spectrum\n";
}

// Echoed into every output file so results are self-describing.
class ConfigEcho {
public:
    explicit ConfigEcho(const std::string& command) {
        lines_ << "# qls " << command << "\n";
    }
    ConfigEcho& add(const std::string& key, const std::string& value) {
        lines_ << "# " << key << " " << value << "\n";
        return *this;
    }
    ConfigEcho& add(const std::string& key, double value) { return add(key, fmt17(value)); }
    ConfigEcho& add(const std::string& key, int value) { return add(key, std::to_string(value)); }
    ConfigEcho& add(const std::string& key, std::uint64_t value) {
        return add(key, std::to_string(value));
    }
    std::string str() const { return lines_.str(); }

private:
    std::ostringstream lines_;
};

// Matches H(a, b, c) = a Z0 + b Z1 + c Z0 Z1 with a = b = 1, the family with
// an analytic peak prediction.
inline std::optional<double> toy_c_if_predictable(const IsingHamiltonian& h) {
    if (h.n_qubits() != 2) return std::nullopt;
    double a = 0, b = 0, c = 0;
    for (const auto& t : h.terms()) {
        if (t.qubits == std::vector<int>{0}) a = t.coeff;
        else if (t.qubits == std::vector<int>{1}) b = t.coeff;
        else if (t.qubits == std::vector<int>{0, 1}) c = t.coeff;
        else return std::nullopt;
    }
    if (a == 1.0 && b == 1.0 && c != 0.0) return c;
    return std::nullopt;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
    CLI::App app{"qls - QAOA cost-landscape scans, Fourier spectra and roughness metrics"};
    app.require_subcommand(1);

    // ---- shared option state ----
    detail::HamiltonianSource source;
    std::string evaluator_name = "auto";
    std::vector<int> res_arg;
    std::vector<std::string> extent_arg;
    std::vector<double> center_arg;
    std::uint64_t seed = 0;
    std::string out_path;
    std::string heatmap_path;
    double threshold = 1e-6;
    int n_dirs = 200, m_samples = 200;
    std::string terms_path;
    std::vector<int> sizes = {8, 12, 16, 20};
    int per_size = 5;
    int degree = 3;
    double weight_low = -10.0, weight_high = 10.0;
    int n_runs = 100;
    double init_frac = 0.9;
    int grid_res = 201;
    int hist_bins = 50;

    auto add_common = [&](CLI::App* cmd, bool with_seed) {
        cmd->add_option("--hamiltonian", source.hamiltonian,
                        "builtin (H1, H2, H6..H9, toy:a,b,c, klocal:k) or file path");
        cmd->add_option("--graph", source.graph_path, "MaxCut instance from a graph file");
        cmd->add_option("--evaluator", evaluator_name, "auto|closed|statevector")
            ->default_val("auto");
        cmd->add_option("--res", res_arg, "grid resolution (one value or res_gamma res_beta)")
            ->expected(1, 2);
        cmd->add_option("--extent", extent_arg, "'auto' or extent_gamma [extent_beta]")
            ->expected(1, 2);
        cmd->add_option("--center", center_arg, "scan center: gamma beta")->expected(2);
        cmd->add_option("--out", out_path, "output file path")->required();
        if (with_seed) cmd->add_option("--seed", seed, "random seed")->required();
    };
    auto res_gamma = [&] { return res_arg.empty() ? 201 : res_arg[0]; };
    auto res_beta = [&] { return res_arg.size() > 1 ? res_arg[1] : res_gamma(); };
    auto center = [&] {
        return center_arg.size() == 2 ? Point{center_arg[0], center_arg[1]} : Point{};
    };

    CLI::App* scan_cmd = app.add_subcommand("scan", "2D landscape grid scan");
    add_common(scan_cmd, false);
    scan_cmd->add_option("--heatmap", heatmap_path, "also write a PGM heatmap");

    CLI::App* spectrum_cmd =
        app.add_subcommand("spectrum", "Fourier spectrum and peak listing of a scan");
    add_common(spectrum_cmd, false);
    spectrum_cmd->add_option("--threshold", threshold, "relative peak threshold")
        ->default_val(1e-6);

    CLI::App* roughness_cmd = app.add_subcommand("roughness", "roughness report");
    add_common(roughness_cmd, true);
    roughness_cmd->add_option("--dirs", n_dirs, "random directions")->default_val(200);
    roughness_cmd->add_option("--samples", m_samples, "samples per direction")->default_val(200);

    CLI::App* interpolate_cmd = app.add_subcommand(
        "interpolate", "roughness along a term-by-term interpolation sequence");
    add_common(interpolate_cmd, true);
    interpolate_cmd->add_option("--dirs", n_dirs, "random directions")->default_val(200);
    interpolate_cmd->add_option("--samples", m_samples, "samples per direction")
        ->default_val(200);
    interpolate_cmd->add_option("--terms", terms_path,
                                "hamiltonian file whose terms are added one at a time");

    CLI::App* concentration_cmd = app.add_subcommand(
        "concentration", "MaxCut roughness on random regular graphs across sizes");
    bool integer_weights = false;
    concentration_cmd->add_option("--sizes", sizes, "graph sizes")->expected(1, 16);
    concentration_cmd->add_option("--per-size", per_size, "instances per size")->default_val(5);
    concentration_cmd->add_option("--degree", degree, "graph degree")->default_val(3);
    concentration_cmd->add_option("--weight-low", weight_low)->default_val(-10.0);
    concentration_cmd->add_option("--weight-high", weight_high)->default_val(10.0);
    concentration_cmd->add_flag(
        "--integer-weights", integer_weights,
        "draw weights from the nonzero integers in [low, high]; keeps spectra "
        "leakage-free (defaults become extent 2*pi, res 501 201)");
    concentration_cmd->add_option("--dirs", n_dirs)->default_val(200);
    concentration_cmd->add_option("--samples", m_samples)->default_val(200);
    concentration_cmd->add_option("--res", res_arg)->expected(1, 2);
    concentration_cmd->add_option("--extent", extent_arg, "gamma [beta] scan extent")
        ->expected(1, 2);
    concentration_cmd->add_option("--seed", seed, "random seed")->required();
    concentration_cmd->add_option("--out", out_path, "output file path")->required();

    CLI::App* optbench_cmd =
        app.add_subcommand("optbench", "multistart local-optimization benchmark");
    add_common(optbench_cmd, true);
    optbench_cmd->add_option("--runs", n_runs, "number of starts")->default_val(100);
    optbench_cmd->add_option("--init-frac", init_frac, "init box is [-f*pi, f*pi]^2")
        ->default_val(0.9);
    optbench_cmd->add_option("--grid-res", grid_res, "grid for the global-min estimate")
        ->default_val(201);
    optbench_cmd->add_option("--bins", hist_bins, "histogram bins")->default_val(50);

    try {
        std::reverse(args.begin(), args.end());  // CLI11 vector parse order
        app.parse(args);

        if (scan_cmd->parsed() || spectrum_cmd->parsed()) {
            const IsingHamiltonian h = source.resolve();
            const EnergyEvaluator eval = detail::resolve_evaluator(h, evaluator_name);
            const detail::ResolvedExtent ext = detail::resolve_extent(extent_arg, h, err);
            detail::warn_if_under_resolved(h, ext, res_gamma(), res_beta(), err);
            const LandscapeScan scan = grid_scan(eval, res_gamma(), res_beta(), ext.gamma,
                                                 ext.beta, center());
            detail::ConfigEcho echo(scan_cmd->parsed() ? "scan" : "spectrum");
            echo.add("hamiltonian", source.describe())
                .add("evaluator", to_string(eval.method()))
                .add("res_gamma", res_gamma())
                .add("res_beta", res_beta())
                .add("extent_gamma", ext.gamma)
                .add("extent_beta", ext.beta)
                .add("center_gamma", center().gamma)
                .add("center_beta", center().beta);

            if (scan_cmd->parsed()) {
                write_scan_file(out_path, scan, echo.str());
                if (!heatmap_path.empty()) write_heatmap_pgm_file(heatmap_path, scan);
                out << "wrote scan " << out_path << "\n";
                return 0;
            }

            echo.add("threshold", threshold);
            const bool on_lattice = frequencies_on_lattice(h, ext.gamma, ext.beta);
            if (!on_lattice)
                err << "warning: frequencies are off the scan lattice; peaks will smear "
                       "into neighboring bins\n";
            FourierSpectrum full = remove_dc(spectrum(scan));
            full.leakage_warning = !on_lattice;
            const FourierSpectrum half = half_spectrum(full);
            write_spectrum_file(out_path, half, echo.str());
            const auto peak_list = peaks(full, threshold);
            out << echo.str();
            out << "# peaks: f_gamma f_beta magnitude\n";
            for (const auto& p : peak_list)
                out << detail::fmt17(p.f_gamma) << " " << detail::fmt17(p.f_beta) << " "
                    << detail::fmt17(p.magnitude) << "\n";
            if (auto c = detail::toy_c_if_predictable(h)) {
                out << "# predicted (|f_gamma|, |f_beta|) for toy c=" << detail::fmt17(*c)
                    << ":\n";
                for (const auto& [fg, fb] : predict_toy_frequencies(*c)) {
                    bool seen = false;
                    for (const auto& p : peak_list)
                        if (std::abs(std::abs(p.f_gamma) - fg) < 1e-6 &&
                            std::abs(std::abs(p.f_beta) - fb) < 1e-6)
                            seen = true;
                    out << detail::fmt17(fg) << " " << detail::fmt17(fb) << " "
                        << (seen ? "observed" : "MISSING") << "\n";
                }
            }
            out << "wrote spectrum " << out_path << "\n";
            return 0;
        }

        if (roughness_cmd->parsed()) {
            const IsingHamiltonian h = source.resolve();
            const EnergyEvaluator eval = detail::resolve_evaluator(h, evaluator_name);
            RoughnessParams params;
            params.n_directions = n_dirs;
            params.m_samples = m_samples;
            params.seed = seed;
            params.res_gamma = res_gamma();
            params.res_beta = res_beta();
            params.center = center();
            if (!extent_arg.empty() && extent_arg[0] != "auto") {
                const detail::ResolvedExtent ext = detail::resolve_extent(extent_arg, h, err);
                params.gamma_extent = ext.gamma;
                params.beta_extent = ext.beta;
            }
            const RoughnessReport rep = compute_roughness(eval, params);
            detail::ConfigEcho echo("roughness");
            echo.add("hamiltonian", source.describe())
                .add("evaluator", to_string(eval.method()))
                .add("seed", seed);
            write_roughness_report_file(out_path, rep, echo.str());
            out << "wrote roughness report " << out_path << "\n";
            return 0;
        }

        if (interpolate_cmd->parsed()) {
            IsingHamiltonian base = source.hamiltonian.empty() && source.graph_path.empty()
                                        ? models::interpolation_base()
                                        : source.resolve();
            std::vector<PauliZTerm> added = terms_path.empty()
                                                ? models::interpolation_terms()
                                                : read_hamiltonian_file(terms_path).terms();
            const auto sequence = interpolation_sequence(base, added);
            detail::ConfigEcho echo("interpolate");
            echo.add("base", source.hamiltonian.empty() ? std::string("all-1-body") :
                                                           source.describe())
                .add("steps", static_cast<int>(sequence.size()))
                .add("dirs", n_dirs)
                .add("samples", m_samples)
                .add("seed", seed)
                .add("res_gamma", res_gamma())
                .add("res_beta", res_beta());
            std::ofstream os(out_path);
            if (!os) throw ConfigError("cannot open " + out_path + " for writing");
            os << echo.str();
            os << "# step n_terms tv_mean tv_std fourier_density\n";
            for (std::size_t step = 0; step < sequence.size(); ++step) {
                const EnergyEvaluator eval =
                    detail::resolve_evaluator(sequence[step], evaluator_name);
                RoughnessParams params;
                params.n_directions = n_dirs;
                params.m_samples = m_samples;
                params.seed = seed;
                params.res_gamma = res_gamma();
                params.res_beta = res_beta();
                if (!extent_arg.empty() && extent_arg[0] != "auto") {
                    const detail::ResolvedExtent ext =
                        detail::resolve_extent(extent_arg, sequence[step], err);
                    params.gamma_extent = ext.gamma;
                    params.beta_extent = ext.beta;
                }
                const RoughnessReport rep = compute_roughness(eval, params);
                os << step << " " << sequence[step].terms().size() << " "
                   << detail::fmt17(rep.tv_mean) << " " << detail::fmt17(rep.tv_std) << " "
                   << detail::fmt17(rep.fourier_density) << "\n";
            }
            out << "wrote interpolation table " << out_path << "\n";
            return 0;
        }

        if (concentration_cmd->parsed()) {
            if (!(weight_low < weight_high))
                throw ConfigError("need weight_low < weight_high");
            // Continuous weights admit no finite landscape period; scan one
            // pi-extent window and accept the spectral leakage. Integer
            // weights make the coefficients half-integers, so the landscape
            // period is 2*pi and an alias-safe gamma resolution keeps the
            // densities comparable across instances.
            const double default_extent = integer_weights ? 2 * std::numbers::pi
                                                          : std::numbers::pi;
            const int default_res_gamma = integer_weights ? 501 : 201;
            const double conc_extent_gamma =
                (!extent_arg.empty()) ? std::stod(extent_arg[0]) : default_extent;
            const double conc_extent_beta =
                extent_arg.size() > 1 ? std::stod(extent_arg[1]) : std::numbers::pi;
            const int conc_res_gamma = res_arg.empty() ? default_res_gamma : res_arg[0];
            const int conc_res_beta = res_arg.size() > 1 ? res_arg[1] : 201;

            // nonzero integers available in [low, high]
            std::vector<double> integer_choices;
            if (integer_weights) {
                for (long v = static_cast<long>(std::ceil(weight_low));
                     v <= static_cast<long>(std::floor(weight_high)); ++v)
                    if (v != 0) integer_choices.push_back(static_cast<double>(v));
                if (integer_choices.empty())
                    throw ConfigError("no nonzero integers in the weight range");
            }

            detail::ConfigEcho echo("concentration");
            {
                std::string size_list;
                for (int s : sizes) size_list += (size_list.empty() ? "" : ",") + std::to_string(s);
                echo.add("sizes", size_list);
            }
            echo.add("per_size", per_size)
                .add("degree", degree)
                .add("weight_low", weight_low)
                .add("weight_high", weight_high)
                .add("integer_weights", integer_weights ? 1 : 0)
                .add("dirs", n_dirs)
                .add("samples", m_samples)
                .add("res_gamma", conc_res_gamma)
                .add("res_beta", conc_res_beta)
                .add("extent_gamma", conc_extent_gamma)
                .add("extent_beta", conc_extent_beta)
                .add("seed", seed);
            std::ofstream os(out_path);
            if (!os) throw ConfigError("cannot open " + out_path + " for writing");
            os << echo.str();
            os << "# inst <n> <index> <tv_mean> <fourier_density>\n";
            os << "# size <n> <count> <tv_avg> <tv_std> <fd_avg> <fd_std>\n";
            std::uint64_t counter = 0;
            for (int n : sizes) {
                std::vector<double> tvs, fds;
                for (int inst = 0; inst < per_size; ++inst, ++counter) {
                    WeightedGraph g = random_regular_graph(
                        n, degree, {weight_low, weight_high}, derive_seed(seed, 2 * counter));
                    if (integer_weights) {
                        SplitMix64 wrng(derive_seed(seed, 2 * counter) ^ 0x5eedull);
                        for (auto& e : g.edges)
                            e.weight = integer_choices[wrng.below(integer_choices.size())];
                    }
                    const EnergyEvaluator eval(maxcut_hamiltonian(g),
                                               EnergyMethod::closed_form);
                    RoughnessParams params;
                    params.n_directions = n_dirs;
                    params.m_samples = m_samples;
                    params.seed = derive_seed(seed, 2 * counter + 1);
                    params.res_gamma = conc_res_gamma;
                    params.res_beta = conc_res_beta;
                    params.gamma_extent = conc_extent_gamma;
                    params.beta_extent = conc_extent_beta;
                    const RoughnessReport rep = compute_roughness(eval, params);
                    tvs.push_back(rep.tv_mean);
                    fds.push_back(rep.fourier_density);
                    os << "inst " << n << " " << inst << " " << detail::fmt17(rep.tv_mean)
                       << " " << detail::fmt17(rep.fourier_density) << "\n";
                }
                const TvStats tv_summary = qls::detail::aggregate(tvs);
                const TvStats fd_summary = qls::detail::aggregate(fds);
                os << "size " << n << " " << per_size << " " << detail::fmt17(tv_summary.mean)
                   << " " << detail::fmt17(tv_summary.stddev) << " "
                   << detail::fmt17(fd_summary.mean) << " " << detail::fmt17(fd_summary.stddev)
                   << "\n";
            }
            out << "wrote concentration table " << out_path << "\n";
            return 0;
        }

        if (optbench_cmd->parsed()) {
            const IsingHamiltonian h = source.resolve();
            const EnergyEvaluator eval = detail::resolve_evaluator(h, evaluator_name);
            MultistartOptions opts;
            opts.n_runs = n_runs;
            const double half_width = init_frac * std::numbers::pi;
            opts.init_box = Box{{-half_width, -half_width}, {half_width, half_width}};
            opts.seed = seed;
            opts.estimate_grid_res = grid_res;
            opts.histogram_bins = hist_bins;
            const BenchmarkResult result = multistart(eval, opts);
            detail::ConfigEcho echo("optbench");
            echo.add("hamiltonian", source.describe())
                .add("evaluator", to_string(eval.method()))
                .add("runs", n_runs)
                .add("init_frac", init_frac)
                .add("grid_res", grid_res)
                .add("bins", hist_bins)
                .add("seed", seed);
            write_benchmark_file(out_path, result, echo.str());
            out << "success_count " << result.success_count << " of " << n_runs << "\n";
            out << "wrote benchmark " << out_path << "\n";
            return 0;
        }
        return 0;
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
}

}  // namespace qls::cli
