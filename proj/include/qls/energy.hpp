// Depth-1 QAOA energy C(beta, gamma) for diagonal Ising Hamiltonians with the
// standard transverse-field mixer, evaluated three ways:
//
//   * statevector  - exact simulation, any term order, up to 24 qubits;
//   * closed_form  - analytic expectation for Hamiltonians of weight <= 2,
//                    built from per-vertex biases and per-edge couplings;
//   * toy          - the literal 2-qubit formula for a Z0 + b Z1 + c Z0 Z1.
//
// All evaluators include the Hamiltonian's identity offset and agree to
// double-precision rounding on their common domains. Evaluation is pure;
// an EnergyEvaluator can be shared freely across threads.

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qls/errors.hpp"
#include "qls/hamiltonian.hpp"

namespace qls {

enum class EnergyMethod { statevector, closed_form, toy };

inline std::string to_string(EnergyMethod m) {
    switch (m) {
        case EnergyMethod::statevector: return "statevector";
        case EnergyMethod::closed_form: return "closed_form";
        case EnergyMethod::toy: return "toy";
    }
    return "?";
}

namespace detail {

// Precomputed diagonal energies (offset excluded; it only adds a global phase).
inline std::vector<double> diagonal_energies(const IsingHamiltonian& h) {
    if (h.n_qubits() > kEnumerationQubitGuard)
        throw EnumerationLimitError("statevector limited to " +
                                    std::to_string(kEnumerationQubitGuard) + " qubits");
    const std::uint64_t n_states = std::uint64_t{1} << h.n_qubits();
    std::vector<std::pair<std::uint64_t, double>> masked;
    for (const auto& t : h.terms()) {
        std::uint64_t mask = 0;
        for (int q : t.qubits) mask |= (std::uint64_t{1} << q);
        masked.emplace_back(mask, t.coeff);
    }
    std::vector<double> diag(n_states);
    for (std::uint64_t z = 0; z < n_states; ++z) {
        double e = 0.0;
        for (const auto& [mask, c] : masked)
            e += (std::popcount(z & mask) & 1) ? -c : c;
        diag[z] = e;
    }
    return diag;
}

inline double statevector_expectation(const std::vector<double>& diag, int n_qubits,
                                      double beta, double gamma) {
    const std::uint64_t n_states = std::uint64_t{1} << n_qubits;
    const double norm = 1.0 / std::sqrt(static_cast<double>(n_states));
    std::vector<std::complex<double>> amp(n_states);
    for (std::uint64_t z = 0; z < n_states; ++z)
        amp[z] = std::polar(norm, -gamma * diag[z]);

    // exp(-i beta X) on every qubit: amplitude pairs mix as a standard
    // single-qubit rotation with matrix [[c, -is], [-is, c]].
    const double c = std::cos(beta);
    const std::complex<double> is(0.0, std::sin(beta));
    for (int q = 0; q < n_qubits; ++q) {
        const std::uint64_t bit = std::uint64_t{1} << q;
        for (std::uint64_t z = 0; z < n_states; ++z) {
            if (z & bit) continue;
            std::complex<double> a0 = amp[z];
            std::complex<double> a1 = amp[z | bit];
            amp[z] = c * a0 - is * a1;
            amp[z | bit] = c * a1 - is * a0;
        }
    }
    double energy = 0.0;
    for (std::uint64_t z = 0; z < n_states; ++z)
        energy += std::norm(amp[z]) * diag[z];
    return energy;
}

// Vertex/edge view of a weight-<=2 Hamiltonian for the closed-form evaluator.
struct TwoBodyView {
    struct Neighbor {
        int vertex;
        int edge;
    };
    int n = 0;
    std::vector<double> bias;                       // h_i, 0 when absent
    std::vector<double> coupling;                   // J per edge
    std::vector<std::pair<int, int>> edge_ends;     // (i, j), i < j
    std::vector<std::vector<Neighbor>> adjacency;   // sorted by neighbor vertex
};

inline TwoBodyView two_body_view(const IsingHamiltonian& h) {
    TwoBodyView v;
    v.n = h.n_qubits();
    v.bias.assign(v.n, 0.0);
    v.adjacency.resize(v.n);
    for (const auto& t : h.terms()) {
        if (t.qubits.size() == 1) {
            v.bias[t.qubits[0]] = t.coeff;
        } else if (t.qubits.size() == 2) {
            int e = static_cast<int>(v.coupling.size());
            v.coupling.push_back(t.coeff);
            v.edge_ends.emplace_back(t.qubits[0], t.qubits[1]);
            v.adjacency[t.qubits[0]].push_back({t.qubits[1], e});
            v.adjacency[t.qubits[1]].push_back({t.qubits[0], e});
        } else {
            throw UnsupportedOrderError(
                "closed-form energy supports terms of weight <= 2; found weight " +
                std::to_string(t.qubits.size()));
        }
    }
    for (auto& adj : v.adjacency)
        std::sort(adj.begin(), adj.end(),
                  [](const TwoBodyView::Neighbor& a, const TwoBodyView::Neighbor& b) {
                      return a.vertex < b.vertex;
                  });
    return v;
}

// Expectation of the 1- and 2-body cost terms on the depth-1 ansatz.
//
// Per edge (i, j) the two-body expectation splits into a sin(4 beta) part with
// products over the neighbors of each endpoint (excluding the other), and a
// sin^2(2 beta) part over the partition of the remaining neighborhood into
// exclusive and shared neighbors; shared neighbors contribute through cosines
// of coupling sums and differences. Empty products are 1.
inline double closed_form_expectation(const TwoBodyView& v, double beta, double gamma) {
    const double s2b = std::sin(2.0 * beta);
    const double s4b = std::sin(4.0 * beta);
    const double s2b_sq = s2b * s2b;

    std::vector<double> cos_bias(v.n);
    for (int i = 0; i < v.n; ++i) cos_bias[i] = std::cos(2.0 * gamma * v.bias[i]);
    std::vector<double> cos_coupling(v.coupling.size());
    std::vector<double> sin_coupling(v.coupling.size());
    for (std::size_t e = 0; e < v.coupling.size(); ++e) {
        cos_coupling[e] = std::cos(2.0 * gamma * v.coupling[e]);
        sin_coupling[e] = std::sin(2.0 * gamma * v.coupling[e]);
    }

    double energy = 0.0;
    for (int i = 0; i < v.n; ++i) {
        if (v.bias[i] == 0.0) continue;
        double prod = 1.0;
        for (const auto& nb : v.adjacency[i]) prod *= cos_coupling[nb.edge];
        energy += v.bias[i] * s2b * std::sin(2.0 * gamma * v.bias[i]) * prod;
    }

    for (std::size_t e = 0; e < v.coupling.size(); ++e) {
        const auto [i, j] = v.edge_ends[e];
        const double J = v.coupling[e];

        double prod_i = 1.0;  // over neighbors of i except j
        for (const auto& nb : v.adjacency[i])
            if (nb.vertex != j) prod_i *= cos_coupling[nb.edge];
        double prod_j = 1.0;
        for (const auto& nb : v.adjacency[j])
            if (nb.vertex != i) prod_j *= cos_coupling[nb.edge];
        const double first =
            0.5 * J * s4b * sin_coupling[e] * (cos_bias[i] * prod_i + cos_bias[j] * prod_j);

        // Merge the two sorted adjacency lists to split neighbors of i and j
        // (other than each other) into exclusive and shared sets.
        double excl = 1.0;
        double shared_sum = 1.0;   // cos(2 gamma (J_ik + J_jk)) factors
        double shared_diff = 1.0;  // cos(2 gamma (J_ik - J_jk)) factors
        std::size_t a = 0, b = 0;
        const auto& adj_i = v.adjacency[i];
        const auto& adj_j = v.adjacency[j];
        while (a < adj_i.size() || b < adj_j.size()) {
            int va = a < adj_i.size() ? adj_i[a].vertex : v.n;
            int vb = b < adj_j.size() ? adj_j[b].vertex : v.n;
            if (va < vb) {
                if (va != j) excl *= cos_coupling[adj_i[a].edge];
                ++a;
            } else if (vb < va) {
                if (vb != i) excl *= cos_coupling[adj_j[b].edge];
                ++b;
            } else {
                const double Jik = v.coupling[adj_i[a].edge];
                const double Jjk = v.coupling[adj_j[b].edge];
                shared_sum *= std::cos(2.0 * gamma * (Jik + Jjk));
                shared_diff *= std::cos(2.0 * gamma * (Jik - Jjk));
                ++a;
                ++b;
            }
        }
        const double hi = v.bias[i], hj = v.bias[j];
        const double second =
            0.5 * J * s2b_sq * excl *
            (std::cos(2.0 * gamma * (hi + hj)) * shared_sum -
             std::cos(2.0 * gamma * (hi - hj)) * shared_diff);

        energy += first - second;
    }
    return energy;
}

}  // namespace detail

// Literal 2-qubit formula for H(a, b, c) = a Z0 + b Z1 + c Z0 Z1.
inline double toy_energy(double a, double b, double c, double beta, double gamma) {
    const double s2b = std::sin(2.0 * beta);
    const double c2c = std::cos(2.0 * c * gamma);
    double e = a * s2b * std::sin(2.0 * a * gamma) * c2c +
               b * s2b * std::sin(2.0 * b * gamma) * c2c;
    e += 0.5 * c *
         (std::sin(4.0 * beta) * std::sin(2.0 * c * gamma) *
              (std::cos(2.0 * a * gamma) + std::cos(2.0 * b * gamma)) -
          s2b * s2b *
              (std::cos(2.0 * (a + b) * gamma) - std::cos(2.0 * (a - b) * gamma)));
    return e;
}

class EnergyEvaluator {
public:
    EnergyEvaluator(IsingHamiltonian h, EnergyMethod method)
        : ham_(std::move(h)), method_(method) {
        switch (method_) {
            case EnergyMethod::statevector:
                diag_ = detail::diagonal_energies(ham_);
                break;
            case EnergyMethod::closed_form:
                view_ = detail::two_body_view(ham_);
                break;
            case EnergyMethod::toy: {
                if (ham_.n_qubits() != 2)
                    throw ConfigError("toy evaluator requires exactly 2 qubits");
                for (const auto& t : ham_.terms()) {
                    if (t.qubits == std::vector<int>{0}) toy_a_ = t.coeff;
                    else if (t.qubits == std::vector<int>{1}) toy_b_ = t.coeff;
                    else if (t.qubits == std::vector<int>{0, 1}) toy_c_ = t.coeff;
                    else throw ConfigError("toy evaluator requires terms Z0, Z1, Z0Z1 only");
                }
                break;
            }
        }
    }

    // C(beta, gamma), identity offset included.
    double operator()(double beta, double gamma) const {
        switch (method_) {
            case EnergyMethod::statevector:
                return detail::statevector_expectation(diag_, ham_.n_qubits(), beta, gamma) +
                       ham_.offset();
            case EnergyMethod::closed_form:
                return detail::closed_form_expectation(view_, beta, gamma) + ham_.offset();
            case EnergyMethod::toy:
                return toy_energy(toy_a_, toy_b_, toy_c_, beta, gamma) + ham_.offset();
        }
        return 0.0;
    }

    const IsingHamiltonian& hamiltonian() const { return ham_; }
    EnergyMethod method() const { return method_; }

private:
    IsingHamiltonian ham_;
    EnergyMethod method_;
    std::vector<double> diag_;
    detail::TwoBodyView view_;
    double toy_a_ = 0.0, toy_b_ = 0.0, toy_c_ = 0.0;
};

inline double statevector_energy(const IsingHamiltonian& h, double beta, double gamma) {
    return EnergyEvaluator(h, EnergyMethod::statevector)(beta, gamma);
}

inline double closed_form_energy(const IsingHamiltonian& h, double beta, double gamma) {
    return EnergyEvaluator(h, EnergyMethod::closed_form)(beta, gamma);
}

// Closed form when the weight allows it, exact statevector otherwise.
inline EnergyEvaluator auto_evaluator(const IsingHamiltonian& h) {
    return EnergyEvaluator(
        h, max_pauli_weight(h) <= 2 ? EnergyMethod::closed_form : EnergyMethod::statevector);
}

}  // namespace qls
