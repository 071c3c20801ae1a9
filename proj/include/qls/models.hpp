// Named model Hamiltonians used throughout the experiments and the CLI:
// the motivating 2-qubit / 6-qubit pair (h1, h2), the tunable 2-qubit toy
// family, the single-k-body family, the dense 6-qubit base with one boosted
// coefficient (h6..h9), and the 1-body -> 3-body interpolation endpoints.

#pragma once

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "qls/errors.hpp"
#include "qls/hamiltonian.hpp"

namespace qls::models {

// H1 = -2.75 Z0 - 3.25 Z1 + 3.75 Z0 Z1
inline IsingHamiltonian h1() {
    return IsingHamiltonian::build(2, {{{0}, -2.75}, {{1}, -3.25}, {{0, 1}, 3.75}});
}

namespace detail {

// Product of Z-strings: repeated indices square to identity, so the product
// acts on the symmetric difference of the index sets.
inline std::vector<int> zmul(std::initializer_list<std::vector<int>> factors) {
    std::vector<int> acc;
    for (const auto& f : factors) {
        for (int q : f) {
            auto it = std::find(acc.begin(), acc.end(), q);
            if (it == acc.end()) acc.push_back(q); else acc.erase(it);
        }
    }
    std::sort(acc.begin(), acc.end());
    return acc;
}

}  // namespace detail

// The 6-qubit Hamiltonian with terms up to weight 4 and coefficients in
// multiples of 1/8. One summand nominally contains Z4 twice; the product
// collapses to Z2 Z5, which then cancels against an equal term of opposite
// sign, leaving 33 distinct terms.
inline IsingHamiltonian h2() {
    using detail::zmul;
    std::vector<RawTerm> raw;
    for (int i = 0; i <= 5; ++i) raw.push_back({{i}, 0.25});
    for (int i : {0, 2, 4}) raw.push_back({{i, i + 1}, 0.75});
    for (int i : {0, 2}) raw.push_back({zmul({{i}, {i + 2}, {4}, {5}}), 0.125});
    for (int i = 2; i <= 5; ++i) raw.push_back({{0, i}, (i % 2 == 0 ? -0.125 : 0.125)});
    for (int i = 2; i <= 5; ++i) raw.push_back({{1, i}, (i % 2 == 0 ? 0.125 : -0.125)});
    for (int i = 2; i <= 3; ++i) raw.push_back({{i, 4}, (i % 2 == 0 ? 0.125 : -0.125)});
    for (int i = 2; i <= 3; ++i) raw.push_back({{i, 5}, (i % 2 == 0 ? -0.125 : 0.125)});
    for (int i = 2; i <= 5; ++i) raw.push_back({{0, 1, i}, -0.125});
    for (int i = 0; i <= 3; ++i) raw.push_back({{i, 4, 5}, -0.125});
    for (int i : {0, 1, 4, 5}) raw.push_back({zmul({{2}, {3}, {i}}), -0.125});
    return IsingHamiltonian::build(6, raw);
}

// H(a, b, c) = a Z0 + b Z1 + c Z0 Z1
inline IsingHamiltonian toy(double a, double b, double c) {
    return IsingHamiltonian::build(2, {{{0}, a}, {{1}, b}, {{0, 1}, c}});
}

// Six 1-body terms plus a single k-body term Z0...Z_{k-1}, k in 2..5.
inline IsingHamiltonian klocal(int k) {
    if (k < 2 || k > 5)
        throw ConfigError("klocal order must be in [2, 5], got " + std::to_string(k));
    std::vector<RawTerm> raw;
    for (int i = 0; i < 6; ++i) raw.push_back({{i}, 1.0});
    std::vector<int> body(k);
    for (int i = 0; i < k; ++i) body[i] = i;
    raw.push_back({body, 1.0});
    return IsingHamiltonian::build(6, raw);
}

namespace detail {

inline std::vector<RawTerm> dense_123_raw() {
    std::vector<RawTerm> raw;
    for (int i = 0; i < 6; ++i) raw.push_back({{i}, 1.0});
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) raw.push_back({{i, j}, 1.0});
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k) raw.push_back({{i, j, k}, 1.0});
    return raw;
}

inline IsingHamiltonian boosted(const std::vector<int>& target) {
    auto raw = dense_123_raw();
    for (auto& [qubits, coeff] : raw)
        if (qubits == target) coeff = 25.0;
    return IsingHamiltonian::build(6, raw);
}

}  // namespace detail

// All 1-, 2- and 3-body terms on 6 qubits, unit coefficients (41 terms).
inline IsingHamiltonian h6() {
    return IsingHamiltonian::build(6, detail::dense_123_raw());
}

// h6 with the first term of order 1, 2 or 3 boosted to coefficient 25.
inline IsingHamiltonian h7() { return detail::boosted({0}); }
inline IsingHamiltonian h8() { return detail::boosted({0, 1}); }
inline IsingHamiltonian h9() { return detail::boosted({0, 1, 2}); }

// Interpolation endpoints: all 1-body terms, extended one 3-body term at a
// time (lexicographic order) until every C(6,3) = 20 triple is present.
inline IsingHamiltonian interpolation_base() {
    std::vector<RawTerm> raw;
    for (int i = 0; i < 6; ++i) raw.push_back({{i}, 1.0});
    return IsingHamiltonian::build(6, raw);
}

inline std::vector<PauliZTerm> interpolation_terms() {
    std::vector<PauliZTerm> terms;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            for (int k = j + 1; k < 6; ++k)
                terms.push_back(PauliZTerm{{i, j, k}, 1.0});
    return terms;
}

}  // namespace qls::models
