// Diagonal Ising Hamiltonians built from weighted Pauli-Z strings, plus the
// spectral predictions that follow from their coefficients alone: the beta /
// gamma frequency bounds, the gamma period via a rational GCD, and the exact
// frequency set from eigenvalue differences. Also houses the weighted-graph
// type, MaxCut encoding, a configuration-model regular graph generator, and
// term-by-term interpolation sequences.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qls/errors.hpp"
#include "qls/rng.hpp"

namespace qls {

// One weighted Z-string. Qubit indices are kept sorted and distinct; an empty
// index set is only meaningful as an identity/offset contribution and never
// appears inside IsingHamiltonian::terms().
struct PauliZTerm {
    std::vector<int> qubits;
    double coeff = 0.0;
};

using RawTerm = std::pair<std::vector<int>, double>;

class IsingHamiltonian {
public:
    IsingHamiltonian() = default;

    int n_qubits() const { return n_qubits_; }
    const std::vector<PauliZTerm>& terms() const { return terms_; }
    double offset() const { return offset_; }

    // Canonical constructor: validates indices, merges duplicate qubit sets by
    // summing coefficients, drops terms whose merged coefficient is exactly 0,
    // and routes identity terms into a scalar offset.
    static IsingHamiltonian build(int n_qubits, const std::vector<RawTerm>& raw_terms) {
        if (n_qubits < 0)
            throw ConfigError("n_qubits must be non-negative");
        double offset = 0.0;
        std::map<std::vector<int>, double> merged;
        for (const auto& [qubits, coeff] : raw_terms) {
            if (!std::isfinite(coeff))
                throw ConfigError("term coefficient must be finite");
            std::vector<int> sorted = qubits;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t k = 0; k < sorted.size(); ++k) {
                if (sorted[k] < 0 || sorted[k] >= n_qubits)
                    throw ConfigError("qubit index " + std::to_string(sorted[k]) +
                                      " out of range for n_qubits=" + std::to_string(n_qubits));
                if (k > 0 && sorted[k] == sorted[k - 1])
                    throw ConfigError("repeated qubit index " + std::to_string(sorted[k]) +
                                      " within one term");
            }
            if (sorted.empty())
                offset += coeff;
            else
                merged[sorted] += coeff;
        }
        IsingHamiltonian h;
        h.n_qubits_ = n_qubits;
        h.offset_ = offset;
        for (auto& [qubits, coeff] : merged) {
            if (coeff == 0.0) continue;
            h.terms_.push_back(PauliZTerm{qubits, coeff});
        }
        return h;
    }

private:
    int n_qubits_ = 0;
    std::vector<PauliZTerm> terms_;  // sorted by qubit set, nonzero coefficients
    double offset_ = 0.0;
};

inline IsingHamiltonian build_hamiltonian(int n_qubits, const std::vector<RawTerm>& raw_terms) {
    return IsingHamiltonian::build(n_qubits, raw_terms);
}

// Largest Z-string length; 0 if only an offset is present.
inline int max_pauli_weight(const IsingHamiltonian& h) {
    int w = 0;
    for (const auto& t : h.terms()) w = std::max(w, static_cast<int>(t.qubits.size()));
    return w;
}

// The mixer generator is a sum of single-qubit X terms, so beta frequencies of
// a depth-1 landscape are bounded by twice the maximum Pauli weight.
inline int beta_frequency_bound(const IsingHamiltonian& h) {
    return 2 * max_pauli_weight(h);
}

// Gamma frequencies are eigenvalue differences, hence bounded by 2 * sum|c_k|.
inline double gamma_frequency_bound(const IsingHamiltonian& h) {
    double s = 0.0;
    for (const auto& t : h.terms()) s += std::abs(t.coeff);
    return 2.0 * s;
}

namespace detail {

struct Fraction {
    long long num = 0;  // >= 0
    long long den = 1;  // > 0
};

inline Fraction reduce(long long num, long long den) {
    long long g = std::gcd(num, den);
    if (g > 1) { num /= g; den /= g; }
    return Fraction{num, den};
}

// Smallest-denominator rational approximation of |x| within tol, denominator
// capped at max_den, via continued-fraction convergents. Throws
// IncommensurateError when no convergent lands within tol.
inline Fraction rationalize(double x, long long max_den, double tol) {
    x = std::abs(x);
    if (x < tol) return Fraction{0, 1};
    long long p_prev = 0, q_prev = 1;  // h_{-2}/k_{-2}
    long long p = 1, q = 0;            // h_{-1}/k_{-1}
    double v = x;
    for (int iter = 0; iter < 64; ++iter) {
        double fa = std::floor(v);
        if (!(fa >= 0.0) || fa > 9e15) break;  // digits beyond double precision
        long long a = static_cast<long long>(fa);
        if (q != 0 && (a > max_den || a * q + q_prev > max_den)) break;
        long long p_next = a * p + p_prev;
        long long q_next = a * q + q_prev;
        p_prev = p; q_prev = q;
        p = p_next; q = q_next;
        if (q >= 1 &&
            std::abs(x - static_cast<double>(p) / static_cast<double>(q)) <= tol)
            return reduce(p, q);
        double frac = v - fa;
        if (frac < 1e-15) break;
        v = 1.0 / frac;
    }
    throw IncommensurateError(
        "no rational approximation of coefficient within tolerance (denominator limit " +
        std::to_string(max_den) + ")");
}

// gcd(a/b, c/d) = gcd(a*d, c*b) / (b*d), reduced. 128-bit intermediates keep
// the products exact; the denominator cap rejects degenerate mixes whose
// common period would be astronomically large anyway.
inline Fraction fraction_gcd(const Fraction& a, const Fraction& b) {
    if (a.num == 0) return b;
    if (b.num == 0) return a;
    unsigned __int128 x = static_cast<unsigned __int128>(a.num) * b.den;
    unsigned __int128 y = static_cast<unsigned __int128>(b.num) * a.den;
    while (y != 0) {
        unsigned __int128 r = x % y;
        x = y;
        y = r;
    }
    unsigned __int128 den = static_cast<unsigned __int128>(a.den) * b.den;
    unsigned __int128 g = x;
    // reduce before overflow checks
    unsigned __int128 common = [&] {
        unsigned __int128 u = g, w = den;
        while (w != 0) { unsigned __int128 r = u % w; u = w; w = r; }
        return u;
    }();
    g /= common;
    den /= common;
    constexpr unsigned __int128 limit = 1000000000ull;  // combined denominator cap
    if (den > limit)
        throw IncommensurateError("combined coefficient denominator exceeds limit");
    return Fraction{static_cast<long long>(g), static_cast<long long>(den)};
}

}  // namespace detail

// Upper bound on the landscape period along gamma: pi / GCD(|c_k|), where the
// GCD is computed on rational approximations with denominator <= 10^4.
inline double gamma_period(const IsingHamiltonian& h, double tolerance = 1e-9) {
    if (h.terms().empty())
        throw ConfigError("gamma_period requires at least one non-identity term");
    constexpr long long max_den = 10000;
    detail::Fraction g{0, 1};
    for (const auto& t : h.terms()) {
        detail::Fraction f = detail::rationalize(t.coeff, max_den, tolerance);
        if (f.num == 0)
            throw IncommensurateError("coefficient indistinguishable from zero at tolerance");
        g = detail::fraction_gcd(g, f);
    }
    // period = pi / (num/den)
    return std::numbers::pi * static_cast<double>(g.den) / static_cast<double>(g.num);
}

// Energy of a computational-basis state; bit i of `bits` is qubit i.
inline double eigenvalue_per_bitstring(const IsingHamiltonian& h, std::uint64_t bits) {
    double e = h.offset();
    for (const auto& t : h.terms()) {
        std::uint64_t mask = 0;
        for (int q : t.qubits) mask |= (std::uint64_t{1} << q);
        e += (std::popcount(bits & mask) & 1) ? -t.coeff : t.coeff;
    }
    return e;
}

inline constexpr int kEnumerationQubitGuard = 24;

// All pairwise eigenvalue differences, deduplicated with an absolute
// tolerance. These are the exact gamma frequencies of the landscape.
inline std::vector<double> gamma_frequency_set(const IsingHamiltonian& h,
                                               double tolerance = 1e-9) {
    if (h.n_qubits() > kEnumerationQubitGuard)
        throw EnumerationLimitError("gamma_frequency_set limited to " +
                                    std::to_string(kEnumerationQubitGuard) + " qubits");
    const std::uint64_t n_states = std::uint64_t{1} << h.n_qubits();

    // Precompute term masks once; the per-state loop is the hot path.
    std::vector<std::pair<std::uint64_t, double>> masked;
    masked.reserve(h.terms().size());
    for (const auto& t : h.terms()) {
        std::uint64_t mask = 0;
        for (int q : t.qubits) mask |= (std::uint64_t{1} << q);
        masked.emplace_back(mask, t.coeff);
    }
    std::vector<double> eigs;
    eigs.reserve(n_states);
    for (std::uint64_t z = 0; z < n_states; ++z) {
        double e = 0.0;  // offset shifts all eigenvalues equally; differences unaffected
        for (const auto& [mask, c] : masked)
            e += (std::popcount(z & mask) & 1) ? -c : c;
        eigs.push_back(e);
    }
    std::sort(eigs.begin(), eigs.end());
    std::vector<double> unique_eigs;
    for (double e : eigs)
        if (unique_eigs.empty() || e - unique_eigs.back() > tolerance)
            unique_eigs.push_back(e);

    std::vector<double> diffs;
    diffs.reserve(unique_eigs.size() * unique_eigs.size());
    for (double a : unique_eigs)
        for (double b : unique_eigs)
            diffs.push_back(a - b);
    std::sort(diffs.begin(), diffs.end());
    std::vector<double> out;
    for (double d : diffs)
        if (out.empty() || d - out.back() > tolerance)
            out.push_back(d);
    return out;
}

// ---------------------------------------------------------------------------
// Graphs and graph-derived Hamiltonians

struct WeightedEdge {
    int i = 0;
    int j = 0;
    double weight = 0.0;
};

struct WeightedGraph {
    int n_nodes = 0;
    std::vector<WeightedEdge> edges;  // i < j, unique, endpoints < n_nodes
};

// Normalizes endpoint order and validates the simple-graph invariants.
inline WeightedGraph make_graph(int n_nodes, std::vector<WeightedEdge> edges) {
    if (n_nodes < 0) throw ConfigError("n_nodes must be non-negative");
    for (auto& e : edges) {
        if (e.i == e.j) throw ConfigError("self-loop on node " + std::to_string(e.i));
        if (e.i > e.j) std::swap(e.i, e.j);
        if (e.i < 0 || e.j >= n_nodes)
            throw ConfigError("edge endpoint out of range");
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
        return std::pair(a.i, a.j) < std::pair(b.i, b.j);
    });
    for (std::size_t k = 1; k < edges.size(); ++k)
        if (edges[k].i == edges[k - 1].i && edges[k].j == edges[k - 1].j)
            throw ConfigError("duplicate edge (" + std::to_string(edges[k].i) + "," +
                              std::to_string(edges[k].j) + ")");
    return WeightedGraph{n_nodes, std::move(edges)};
}

// MaxCut encoding with the constant offset dropped: each edge contributes a
// two-body term with coefficient -w_ij/2. Zero-weight edges vanish with the
// zero-coefficient rule.
inline IsingHamiltonian maxcut_hamiltonian(const WeightedGraph& g) {
    std::vector<RawTerm> raw;
    raw.reserve(g.edges.size());
    for (const auto& e : g.edges)
        raw.push_back({{e.i, e.j}, -0.5 * e.weight});
    return IsingHamiltonian::build(g.n_nodes, std::move(raw));
}

// Random simple degree-regular graph via configuration-model pairing with
// whole-shuffle rejection of self-loops and multi-edges. Weights are drawn
// uniformly per edge, in canonical edge order, after a pairing is accepted.
inline WeightedGraph random_regular_graph(int n, int degree,
                                          std::pair<double, double> weight_range,
                                          std::uint64_t seed,
                                          int max_attempts = 1000) {
    if (n <= 0 || degree < 0) throw ConfigError("need n > 0 and degree >= 0");
    if (degree >= n) throw ConfigError("degree must be smaller than n");
    if ((static_cast<long long>(n) * degree) % 2 != 0)
        throw ConfigError("n * degree must be even for a regular graph to exist");

    SplitMix64 rng(seed);
    std::vector<int> stubs;
    stubs.reserve(static_cast<std::size_t>(n) * degree);
    for (int v = 0; v < n; ++v)
        for (int d = 0; d < degree; ++d) stubs.push_back(v);

    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        // Fisher-Yates shuffle, then pair consecutive stubs.
        for (std::size_t k = stubs.size(); k > 1; --k) {
            std::size_t j = static_cast<std::size_t>(rng.below(k));
            std::swap(stubs[k - 1], stubs[j]);
        }
        std::vector<std::pair<int, int>> pairs;
        pairs.reserve(stubs.size() / 2);
        bool simple = true;
        for (std::size_t k = 0; k + 1 < stubs.size(); k += 2) {
            int a = stubs[k], b = stubs[k + 1];
            if (a == b) { simple = false; break; }
            if (a > b) std::swap(a, b);
            pairs.emplace_back(a, b);
        }
        if (simple) {
            std::sort(pairs.begin(), pairs.end());
            simple = std::adjacent_find(pairs.begin(), pairs.end()) == pairs.end();
        }
        if (!simple) continue;
        std::vector<WeightedEdge> edges;
        edges.reserve(pairs.size());
        for (const auto& [a, b] : pairs)
            edges.push_back({a, b, rng.uniform(weight_range.first, weight_range.second)});
        return make_graph(n, std::move(edges));
    }
    throw RetryLimitError("configuration model rejected " + std::to_string(max_attempts) +
                          " pairings; graph too constrained");
}

// Sequence base, base + t_1, base + t_1 + t_2, ... (|added_terms| + 1 entries).
inline std::vector<IsingHamiltonian> interpolation_sequence(
    const IsingHamiltonian& base, const std::vector<PauliZTerm>& added_terms) {
    std::vector<RawTerm> raw;
    for (const auto& t : base.terms()) raw.push_back({t.qubits, t.coeff});
    if (base.offset() != 0.0) raw.push_back({{}, base.offset()});
    std::vector<IsingHamiltonian> seq;
    seq.reserve(added_terms.size() + 1);
    seq.push_back(base);
    for (const auto& t : added_terms) {
        raw.push_back({t.qubits, t.coeff});
        seq.push_back(IsingHamiltonian::build(base.n_qubits(), raw));
    }
    return seq;
}

}  // namespace qls
