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

#ifndef BIASPRES_SYNTH_H
#define BIASPRES_SYNTH_H

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "biaspres/bp_verify.h"
#include "biaspres/gate_sequence.h"

namespace biaspres {

/// 2 pi (sqrt(5) - 1) / 2. Its continued fraction is all ones, which keeps
/// the multiples k * theta well spread around the circle.
inline const double DEFAULT_THETA = std::numbers::pi * (std::sqrt(5.0) - 1.0);
constexpr uint64_t DEFAULT_MAX_ITERATIONS = 10'000'000;

/// approximate_phase gave up; theta / 2pi behaves like a rational at this eps.
class ApproximationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// G = D P with P|s> = |sigma(s)> and D|sigma(s)> = e^{i phi_s}|sigma(s)>.
struct DiagonalTimesPermutation {
    std::vector<double> diagonal;
    std::vector<uint64_t> permutation;
};

DiagonalTimesPermutation factor_dp(const PermutationWithPhases &p);

/// Exact circuit over {X, CNOT, CCNOT} with |s> -> |P[s]>. Each cycle is split
/// into transpositions sharing its first element and every transposition
/// follows a Gray-code path of multi-controlled X gates. Controls beyond two
/// use a Toffoli ladder on clean ancillas.
GateSequence permutation_to_circuit(const std::vector<uint64_t> &permutation, size_t num_qubits,
                                    double theta = DEFAULT_THETA);

/// Smallest k >= 0 whose multiple k * theta lies within eps of phi on the circle.
uint64_t approximate_phase(double phi, double eps, double theta = DEFAULT_THETA,
                           uint64_t max_iterations = DEFAULT_MAX_ITERATIONS);

/// One nontrivial one-level factor of a diagonal and how it was approximated.
struct PhaseFactor {
    uint64_t index;
    double target;
    uint64_t reps;
    /// |e^{i target} - e^{i reps theta}|.
    double error;
};

/// Circuit for diag(e^{i phi_j}) up to the tracked global phase. Every
/// nontrivial factor gets the budget eps / (number of nontrivial factors).
GateSequence diagonal_to_circuit(const std::vector<double> &phases, double eps, double theta = DEFAULT_THETA,
                                 std::vector<PhaseFactor> *factors = nullptr);

struct SynthesisReport {
    GateSequence sequence;
    double target_eps;
    /// Phase-optimized worst-case error of the data-qubit restriction.
    double achieved_error;
    /// Worst-case error with the tracked global phase applied.
    double tracked_error;
    /// Sum of the per-factor errors; bounds tracked_error.
    double error_budget;
    std::vector<PhaseFactor> factors;
    std::map<std::string, uint64_t> gate_counts;
};

/// Compiles a bias-preserving gate into {X, Rz(theta), CNOT, CCNOT}. The
/// permutation part is exact; all error comes from the phase approximation.
/// Throws std::invalid_argument for eps <= 0 and ApproximationError when the
/// iteration cap is hit.
SynthesisReport synthesize(const PermutationWithPhases &g, double eps, double theta = DEFAULT_THETA);

/// Appends an X on `target` controlled on every qubit in `controls` being 1.
/// Uses ancillas `first_ancilla, first_ancilla + 1, ...` for more than two controls.
void append_multi_controlled_x(GateSequence &seq, const std::vector<size_t> &controls, size_t target,
                               size_t first_ancilla);

}  // namespace biaspres

#endif
