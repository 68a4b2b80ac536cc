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

#ifndef BIASPRES_BP_VERIFY_H
#define BIASPRES_BP_VERIFY_H

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "biaspres/bitstring.h"
#include "biaspres/unitary.h"

namespace biaspres {

/// Maps an angle into [0, 2pi).
double normalize_phase(double phi);
/// Distance between two angles on the circle, in [0, pi].
double circular_distance(double a, double b);

/// Canonical form G = sum_s e^{i phi_s} |sigma(s)><s| of a bias-preserving gate.
class PermutationWithPhases {
   public:
    /// `targets[s]` is sigma(s). Phases are normalized into [0, 2pi).
    /// Throws std::invalid_argument unless targets is a bijection on 2^n indices.
    PermutationWithPhases(size_t num_qubits, std::vector<uint64_t> targets, std::vector<double> phases);

    static PermutationWithPhases identity(size_t num_qubits);
    static PermutationWithPhases from_permutation(size_t num_qubits, std::vector<uint64_t> targets);
    static PermutationWithPhases diagonal(size_t num_qubits, std::vector<double> phases);

    size_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return targets_.size(); }
    const std::vector<uint64_t> &targets() const { return targets_; }
    const std::vector<double> &phases() const { return phases_; }
    uint64_t target(uint64_t s) const { return targets_[s]; }
    double phase(uint64_t s) const { return phases_[s]; }
    bool is_identity_permutation() const;

    /// (this * rhs)|s> = this(rhs|s>).
    PermutationWithPhases operator*(const PermutationWithPhases &rhs) const;
    PermutationWithPhases adjoint() const;
    StateVector apply(const StateVector &psi) const;

    Matrix to_matrix() const;

    /// Same permutation and phases equal mod 2pi within tol.
    bool approx_equal(const PermutationWithPhases &other, double tol) const;
    bool operator==(const PermutationWithPhases &other) const = default;

   private:
    size_t num_qubits_;
    std::vector<uint64_t> targets_;
    std::vector<double> phases_;
};

Unitary to_unitary(const PermutationWithPhases &p);

struct BpVerdict {
    bool is_bp = false;
    std::optional<PermutationWithPhases> canonical;
    std::optional<std::string> witness;
};

/// Decides membership by requiring every column to hold exactly one unit
/// entry (|1 - |g|| <= tol) with every other entry <= tol, and the induced
/// map to be a bijection. Phases come from the argument of the unit entries.
BpVerdict check_permutation(const Unitary &g);

struct ZxCheck {
    bool ok = false;
    /// First (v, w), v != w, with ||A_v A_w^dag||_max > tol.
    std::optional<std::pair<BitString, BitString>> non_orthogonal;
    /// ||sum_v A_v A_v^dag - I||_max.
    double completeness_defect = 0;
    double max_cross_term = 0;
};

/// Block orthogonality and completeness of the ZX-decomposition.
ZxCheck check_zx_detailed(const Unitary &g);
bool check_zx(const Unitary &g);

struct NormalizerCheck {
    bool ok = false;
    /// A Z-string whose conjugate G Z_c G^dag is not Z-type.
    std::optional<BitString> violating;
};

/// Checks that G Z_i G^dag is Z-type for every single-qubit generator Z_i, or
/// for every Z_c with c != 0 when `exhaustive` is set.
NormalizerCheck check_normalizer_detailed(const Unitary &g, bool exhaustive = false);
bool check_normalizer(const Unitary &g, bool exhaustive = false);

/// Number of amplitudes with magnitude > tol. The zero vector has rank 0.
size_t coherence_rank(const StateVector &psi, double tol = DEFAULT_TOL);
/// {s : |amplitude_s| > tol}, ascending.
std::vector<BitString> support_set(const StateVector &psi, double tol = DEFAULT_TOL);

/// Lower bound sqrt(2 (1 - 2^{-n/2})) on E(H^{tensor n}, V) for bias-preserving V.
double hadamard_bound(int n);

/// Machine-readable verdict: `BP yes` + `PERM s->t phase=phi` lines, or `BP no` + `WITNESS ...`.
void render_verdict(std::ostream &out, const BpVerdict &verdict);

}  // namespace biaspres

#endif
