// Copyright 2026 The biaspres Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "biaspres/synth.h"

#include <cmath>

#include "biaspres/distance.h"

namespace biaspres {

namespace {

constexpr long double TWO_PI_L = 2 * 3.14159265358979323846264338327950288L;

/// X on every data qubit whose bit in `pattern` is 0.
void flip_zeros(GateSequence &seq, uint64_t pattern, const std::vector<size_t> &qubits, size_t n) {
    for (size_t q : qubits) {
        if (!((pattern >> (n - 1 - q)) & 1)) {
            seq.append_simplified(Gate::x(q));
        }
    }
}

/// Swaps basis strings a and b that differ in exactly one data qubit.
void append_adjacent_swap(GateSequence &seq, uint64_t a, uint64_t b, size_t n) {
    uint64_t diff = a ^ b;
    size_t target = n - 1 - static_cast<size_t>(__builtin_ctzll(diff));
    std::vector<size_t> controls;
    for (size_t q = 0; q < n; q++) {
        if (q != target) {
            controls.push_back(q);
        }
    }
    flip_zeros(seq, a, controls, n);
    append_multi_controlled_x(seq, controls, target, n);
    flip_zeros(seq, a, controls, n);
}

void append_transposition(GateSequence &seq, uint64_t a, uint64_t b, size_t n) {
    std::vector<uint64_t> path{a};
    for (size_t q = 0; q < n; q++) {
        uint64_t mask = uint64_t{1} << (n - 1 - q);
        if ((a ^ b) & mask) {
            path.push_back(path.back() ^ mask);
        }
    }
    size_t m = path.size() - 1;
    for (size_t i = 0; i + 1 < m; i++) {
        append_adjacent_swap(seq, path[i], path[i + 1], n);
    }
    append_adjacent_swap(seq, path[m - 1], path[m], n);
    for (size_t i = m - 1; i-- > 0;) {
        append_adjacent_swap(seq, path[i], path[i + 1], n);
    }
}

}  // namespace

void append_multi_controlled_x(GateSequence &seq, const std::vector<size_t> &controls, size_t target,
                               size_t first_ancilla) {
    size_t c = controls.size();
    if (c == 0) {
        seq.append_simplified(Gate::x(target));
        return;
    }
    if (c == 1) {
        seq.append_simplified(Gate::cnot(controls[0], target));
        return;
    }
    if (c == 2) {
        seq.append_simplified(Gate::ccnot(controls[0], controls[1], target));
        return;
    }
    size_t needed = c - 2;
    seq.reserve_ancillas(first_ancilla + needed - seq.num_data());
    std::vector<Gate> compute;
    compute.push_back(Gate::ccnot(controls[0], controls[1], first_ancilla));
    for (size_t i = 1; i < needed; i++) {
        compute.push_back(Gate::ccnot(controls[i + 1], first_ancilla + i - 1, first_ancilla + i));
    }
    for (const Gate &g : compute) {
        seq.append_simplified(g);
    }
    seq.append_simplified(Gate::ccnot(controls[c - 1], first_ancilla + needed - 1, target));
    for (size_t i = compute.size(); i-- > 0;) {
        seq.append_simplified(compute[i]);
    }
}

DiagonalTimesPermutation factor_dp(const PermutationWithPhases &p) {
    DiagonalTimesPermutation out{std::vector<double>(p.dim()), p.targets()};
    for (size_t s = 0; s < p.dim(); s++) {
        out.diagonal[p.target(s)] = p.phase(s);
    }
    return out;
}

GateSequence permutation_to_circuit(const std::vector<uint64_t> &permutation, size_t num_qubits, double theta) {
    // Validates the bijection.
    PermutationWithPhases::from_permutation(num_qubits, permutation);
    GateSequence seq(num_qubits, 0, theta);
    std::vector<bool> seen(permutation.size(), false);
    for (uint64_t start = 0; start < permutation.size(); start++) {
        if (seen[start] || permutation[start] == start) {
            seen[start] = true;
            continue;
        }
        std::vector<uint64_t> cycle{start};
        seen[start] = true;
        for (uint64_t x = permutation[start]; x != start; x = permutation[x]) {
            cycle.push_back(x);
            seen[x] = true;
        }
        // (a0 a1 ... am) = apply (a0 a1), then (a0 a2), ..., then (a0 am).
        for (size_t i = 1; i < cycle.size(); i++) {
            append_transposition(seq, cycle[0], cycle[i], num_qubits);
        }
    }
    return seq;
}

uint64_t approximate_phase(double phi, double eps, double theta, uint64_t max_iterations) {
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    if (!std::isfinite(phi) || !std::isfinite(theta)) {
        throw std::invalid_argument("phase and theta must be finite");
    }
    long double target = std::fmod(static_cast<long double>(phi), TWO_PI_L);
    for (uint64_t k = 0; k <= max_iterations; k++) {
        long double d = std::fmod(static_cast<long double>(k) * theta - target, TWO_PI_L);
        if (d < 0) {
            d += TWO_PI_L;
        }
        if (std::min(d, TWO_PI_L - d) < eps) {
            return k;
        }
    }
    throw ApproximationError("no multiple of theta within " + std::to_string(eps) + " of " + std::to_string(phi) +
                             " after " + std::to_string(max_iterations) + " iterations");
}

GateSequence diagonal_to_circuit(const std::vector<double> &phases, double eps, double theta,
                                 std::vector<PhaseFactor> *factors) {
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    size_t n = qubits_for_dim(phases.size());
    GateSequence seq(n, 0, theta);
    std::vector<uint64_t> nontrivial;
    for (uint64_t j = 0; j < phases.size(); j++) {
        if (circular_distance(phases[j], 0.0) > 0) {
            nontrivial.push_back(j);
        }
    }
    if (nontrivial.empty()) {
        return seq;
    }
    double budget = eps / static_cast<double>(nontrivial.size());
    std::vector<size_t> data(n);
    for (size_t q = 0; q < n; q++) {
        data[q] = q;
    }
    long double global = 0;
    for (uint64_t j : nontrivial) {
        uint64_t k = approximate_phase(phases[j], budget, theta);
        double achieved = static_cast<double>(std::fmod(static_cast<long double>(k) * theta, TWO_PI_L));
        double err = 2 * std::sin(circular_distance(achieved, phases[j]) / 2);
        if (factors) {
            factors->push_back({j, phases[j], k, err});
        }
        if (k == 0) {
            continue;
        }
        // P_Z(k theta) = e^{i k theta / 2} Rz(k theta)
        global += static_cast<long double>(k) * theta / 2;
        if (n == 1) {
            flip_zeros(seq, j, data, n);
            seq.append_simplified(Gate::rz(0, k));
            flip_zeros(seq, j, data, n);
            continue;
        }
        // Compute the AND of the (flipped) data qubits into a phase ancilla.
        size_t phase_ancilla = n;
        seq.reserve_ancillas(1);
        flip_zeros(seq, j, data, n);
        append_multi_controlled_x(seq, data, phase_ancilla, n + 1);
        seq.append_simplified(Gate::rz(phase_ancilla, k));
        append_multi_controlled_x(seq, data, phase_ancilla, n + 1);
        flip_zeros(seq, j, data, n);
    }
    seq.set_global_phase(static_cast<double>(std::fmod(global, TWO_PI_L)));
    return seq;
}

SynthesisReport synthesize(const PermutationWithPhases &g, double eps, double theta) {
    if (!(eps > 0)) {
        throw std::invalid_argument("eps must be positive");
    }
    auto dp = factor_dp(g);
    std::vector<PhaseFactor> factors;
    GateSequence diag = diagonal_to_circuit(dp.diagonal, eps, theta, &factors);
    GateSequence seq = permutation_to_circuit(dp.permutation, g.num_qubits(), theta);
    seq.reserve_ancillas(diag.num_ancillas());
    for (const Gate &gate : diag.gates()) {
        seq.append_simplified(gate);
    }
    seq.set_global_phase(diag.global_phase());

    SynthesisReport report{seq, eps, 0, 0, 0, factors, seq.counts()};
    for (const auto &f : factors) {
        report.error_budget += f.error;
    }

    // Exact permutation-level check of the ancilla invariant and of sigma.
    PermutationWithPhases realized = trace_data(seq);
    if (realized.targets() != g.targets()) {
        throw std::logic_error("synthesized permutation differs from the target");
    }
    if (seq.num_qubits() <= DEFAULT_MAX_DENSE_QUBITS) {
        Unitary target = to_unitary(g);
        Unitary got = simulate_data(seq);
        report.achieved_error = worst_case_error_up_to_phase(target, got);
        report.tracked_error = worst_case_error(target, got);
    } else {
        std::vector<double> delta(g.dim());
        double tracked = 0;
        for (size_t s = 0; s < g.dim(); s++) {
            delta[s] = realized.phase(s) - g.phase(s);
            tracked = std::max(tracked, 2 * std::sin(circular_distance(delta[s], 0) / 2));
        }
        report.achieved_error = min_max_chord(delta);
        report.tracked_error = tracked;
    }
    if (report.achieved_error > eps) {
        throw std::logic_error("synthesis exceeded its error target");
    }
    return report;
}

}  // namespace biaspres
