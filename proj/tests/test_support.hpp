// Shared helpers for the unit and acceptance suites: random Hamiltonian
// generators, an independent dense-matrix energy oracle, and peak-set
// utilities. The oracle deliberately avoids the library's statevector path:
// it builds the full 2^n x 2^n mixer matrix by Kronecker products and applies
// it with a naive matvec, so the two can check each other.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "qls/energy.hpp"
#include "qls/fourier.hpp"
#include "qls/hamiltonian.hpp"
#include "qls/rng.hpp"

namespace qls_test {

inline qls::IsingHamiltonian random_two_body(qls::SplitMix64& rng, int max_qubits = 6) {
    const int n = 2 + static_cast<int>(rng.below(max_qubits - 1));
    std::vector<qls::RawTerm> raw;
    while (raw.empty()) {
        for (int i = 0; i < n; ++i)
            if (rng.uniform01() < 0.7) raw.push_back({{i}, rng.uniform(-10, 10)});
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (rng.uniform01() < 0.5) raw.push_back({{i, j}, rng.uniform(-10, 10)});
    }
    return qls::IsingHamiltonian::build(n, raw);
}

// Offset-free Hamiltonian with random terms of weight up to max_weight.
inline qls::IsingHamiltonian random_k_body(qls::SplitMix64& rng, int n, int max_weight) {
    max_weight = std::min(max_weight, n);
    std::vector<qls::RawTerm> raw;
    while (raw.empty()) {
        const int n_terms = 2 + static_cast<int>(rng.below(6));
        for (int t = 0; t < n_terms; ++t) {
            const int w = 1 + static_cast<int>(rng.below(max_weight));
            std::set<int> qubits;
            while (static_cast<int>(qubits.size()) < w)
                qubits.insert(static_cast<int>(rng.below(n)));
            raw.push_back({{qubits.begin(), qubits.end()}, rng.uniform(-10, 10)});
        }
    }
    return qls::IsingHamiltonian::build(n, raw);
}

// Independent oracle: dense Kronecker-product mixer applied by naive matvec.
inline double dense_matrix_energy(const qls::IsingHamiltonian& h, double beta, double gamma) {
    const int n = h.n_qubits();
    const std::size_t dim = std::size_t{1} << n;
    using cd = std::complex<double>;

    // diagonal energies straight from the term list
    std::vector<double> diag(dim, 0.0);
    for (std::size_t z = 0; z < dim; ++z) {
        double e = h.offset();
        for (const auto& term : h.terms()) {
            double sign = 1.0;
            for (int q : term.qubits)
                if ((z >> q) & 1) sign = -sign;
            e += sign * term.coeff;
        }
        diag[z] = e;
    }

    // full mixer matrix exp(-i beta X)^{kron n}
    const cd m00(std::cos(beta), 0.0), m01(0.0, -std::sin(beta));
    std::vector<cd> mixer(dim * dim, cd(1.0, 0.0));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c) {
            cd v(1.0, 0.0);
            for (int q = 0; q < n; ++q) {
                const bool rb = (r >> q) & 1, cb = (c >> q) & 1;
                v *= (rb == cb) ? m00 : m01;
            }
            mixer[r * dim + c] = v;
        }

    std::vector<cd> psi(dim);
    const double norm = 1.0 / std::sqrt(static_cast<double>(dim));
    for (std::size_t z = 0; z < dim; ++z)
        psi[z] = std::polar(norm, -gamma * (diag[z] - h.offset()));
    std::vector<cd> out(dim, cd(0.0, 0.0));
    for (std::size_t r = 0; r < dim; ++r)
        for (std::size_t c = 0; c < dim; ++c)
            out[r] += mixer[r * dim + c] * psi[c];

    double energy = 0.0;
    for (std::size_t z = 0; z < dim; ++z) energy += std::norm(out[z]) * diag[z];
    return energy;
}

// Integer edge weights, uniform on +-{1..wmax}: magnitude drawn first, then
// sign, so the stream consumption order is pinned.
inline void assign_integer_weights(qls::WeightedGraph& g, std::uint64_t seed, int wmax) {
    qls::SplitMix64 rng(seed);
    for (auto& e : g.edges) {
        const double mag = 1.0 + static_cast<double>(rng.below(wmax));
        e.weight = rng.below(2) ? mag : -mag;
    }
}

// (|fg|, |fb|) pairs completed with both signs, as integer lattice pairs.
inline std::set<std::pair<long, long>> sign_complete(
    const std::vector<std::pair<double, double>>& abs_pairs) {
    std::set<std::pair<long, long>> out;
    for (const auto& [fg, fb] : abs_pairs)
        for (int sg : {-1, 1})
            for (int sb : {-1, 1})
                out.insert({std::lround(sg * fg), std::lround(sb * fb)});
    return out;
}

inline std::set<std::pair<long, long>> peak_lattice_set(const std::vector<qls::Peak>& peaks) {
    std::set<std::pair<long, long>> out;
    for (const auto& p : peaks) out.insert({std::lround(p.f_gamma), std::lround(p.f_beta)});
    return out;
}

}  // namespace qls_test
