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

#ifndef BIASPRES_GATE_SEQUENCE_H
#define BIASPRES_GATE_SEQUENCE_H

#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "biaspres/bp_verify.h"
#include "biaspres/unitary.h"

namespace biaspres {

enum class GateKind { X, RZ, CNOT, CCNOT };

std::string gate_name(GateKind kind);

/// One primitive from {X, Rz(theta)^k, CNOT, CCNOT}. Controls come first in
/// `qubits`, the target last.
struct Gate {
    GateKind kind;
    std::vector<size_t> qubits;
    /// Repetition count for RZ; zero otherwise.
    uint64_t reps = 0;

    static Gate x(size_t q) { return {GateKind::X, {q}, 0}; }
    static Gate rz(size_t q, uint64_t k) { return {GateKind::RZ, {q}, k}; }
    static Gate cnot(size_t c, size_t t) { return {GateKind::CNOT, {c, t}, 0}; }
    static Gate ccnot(size_t c1, size_t c2, size_t t) { return {GateKind::CCNOT, {c1, c2, t}, 0}; }

    bool operator==(const Gate &other) const = default;
};

/// Ancillas were not returned to |0>.
class AncillaError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Ordered gate list on `num_data + num_ancillas` qubits. Ancillas occupy the
/// highest qubit indices and must start and end in |0>. The represented
/// operator is e^{i global_phase} times the product of the gates, applied in
/// list order.
class GateSequence {
   public:
    GateSequence(size_t num_data, size_t num_ancillas, double theta);

    size_t num_data() const { return num_data_; }
    size_t num_ancillas() const { return num_ancillas_; }
    size_t num_qubits() const { return num_data_ + num_ancillas_; }
    double theta() const { return theta_; }
    double global_phase() const { return global_phase_; }
    const std::vector<Gate> &gates() const { return gates_; }
    bool empty() const { return gates_.empty(); }

    /// Validates qubit indices (in range, pairwise distinct) before appending.
    void append(Gate g);
    /// Appends, cancelling against the previous gate when both are the same
    /// self-inverse gate and merging consecutive RZ on one qubit.
    void append_simplified(Gate g);
    void append_all(const GateSequence &other);
    void add_global_phase(double phi) { global_phase_ += phi; }
    void set_global_phase(double phi) { global_phase_ = phi; }
    /// Grows the ancilla register to at least `count`.
    void reserve_ancillas(size_t count);

    /// Gate totals keyed by gate name; RZ counts gates, RZ_REPS counts repetitions.
    std::map<std::string, uint64_t> counts() const;

    bool operator==(const GateSequence &other) const = default;

   private:
    size_t num_data_;
    size_t num_ancillas_;
    double theta_;
    double global_phase_ = 0;
    std::vector<Gate> gates_;
};

/// Exact basis-state action of the sequence on all qubits, global phase included.
PermutationWithPhases trace(const GateSequence &seq);

/// Dense unitary on all qubits, global phase included.
Unitary simulate(const GateSequence &seq);

/// Dense unitary on the data qubits with ancillas prepared and post-selected
/// in |0>. Throws AncillaError when some data input leaves an ancilla excited.
Unitary simulate_data(const GateSequence &seq);

/// Data-qubit restriction of `trace(seq)`. Throws AncillaError like simulate_data.
PermutationWithPhases trace_data(const GateSequence &seq);

/// Circuit text format:
///   qubits N / ancillas M / theta <rad> / globalphase <rad> headers, then
///   `X q`, `RZ q k`, `CNOT c t`, `CCNOT c1 c2 t` lines; `#` comments.
GateSequence read_circuit(std::istream &in);
void write_circuit(std::ostream &out, const GateSequence &seq);

GateSequence read_circuit_file(const std::string &path);
void write_circuit_file(const std::string &path, const GateSequence &seq);

}  // namespace biaspres

#endif
