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

#ifndef BIASPRES_CSS_H
#define BIASPRES_CSS_H

#include <istream>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "biaspres/binary_code.h"
#include "biaspres/bp_verify.h"
#include "biaspres/unitary.h"

namespace biaspres {

/// Invalid code pair: C1 not inside C2, or no logical qubits.
class CodeError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A physical state (or operator image) left the codespace.
class NotInCodespaceError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotLogicalOperatorError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

class NotBiasPreservingError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// An arbitrary encoding given by the images of the logical basis states.
class GenericEncoding {
   public:
    /// `basis_states[x]` is the image of logical |x>. All must live on the same
    /// number of qubits and be orthonormal within tol.
    GenericEncoding(std::vector<StateVector> basis_states, double tol = DEFAULT_TOL);

    size_t num_physical() const { return num_physical_; }
    size_t num_logical() const { return num_logical_; }
    double tol() const { return tol_; }
    const std::vector<StateVector> &basis_states() const { return basis_; }
    const StateVector &basis_state(const BitString &x) const { return basis_.at(x.value()); }

   private:
    std::vector<StateVector> basis_;
    size_t num_physical_;
    size_t num_logical_;
    double tol_;
};

/// Standard encoding |x> -> |x.B + C1> of the CSS code built from C1 inside C2.
class CssEncoding {
   public:
    CssEncoding(BinaryCode c1, BinaryCode c2, std::vector<BitString> transversal);

    const BinaryCode &c1() const { return c1_; }
    const BinaryCode &c2() const { return c2_; }
    size_t num_physical() const { return c1_.length(); }
    size_t num_logical() const { return transversal_.size(); }
    /// Rows B_i of the coset transversal.
    const std::vector<BitString> &transversal() const { return transversal_; }
    /// Common coherence rank |C1| of the logical basis states.
    size_t coherence_rank() const { return size_t{1} << c1_.dimension(); }

    /// x.B = xor of B_i over the set bits of x.
    BitString offset(const BitString &x) const;
    /// T(|x>_L) = {x.B xor y : y in C1}, ascending.
    std::vector<BitString> basis_support(const BitString &x) const;
    StateVector basis_state(const BitString &x) const;
    GenericEncoding to_generic(double tol = DEFAULT_TOL) const;

   private:
    BinaryCode c1_;
    BinaryCode c2_;
    std::vector<BitString> transversal_;
    std::vector<BitString> c1_words_;
};

/// Validates C1 inside C2 and k > 0, then completes C1's basis to C2's; the
/// added rows are reduced against C1 and among themselves.
CssEncoding build_css(const BinaryCode &c1, const BinaryCode &c2);

struct EquicoherenceReport {
    bool ok = false;
    /// Common rank l when condition 1 holds.
    std::optional<size_t> rank;
    /// 1 or 2 when that condition fails, 0 otherwise.
    int failed_condition = 0;
    std::optional<std::pair<BitString, BitString>> witness;
    std::string violation;
};

EquicoherenceReport check_equicoherent(const GenericEncoding &e);

StateVector encode(const GenericEncoding &e, const StateVector &psi);
StateVector encode(const CssEncoding &e, const StateVector &psi);

/// Inner products with the basis states. Throws NotInCodespaceError when the
/// residual norm exceeds tol.
StateVector decode(const GenericEncoding &e, const StateVector &psi_l);
StateVector decode(const CssEncoding &e, const StateVector &psi_l, double tol = DEFAULT_TOL);

/// chi(encode(psi)) == l * chi(psi).
bool coherence_scaling_check(const CssEncoding &e, const StateVector &psi, double tol = DEFAULT_TOL);
/// chi(psi) == chi(phi) iff chi(encode(psi)) == chi(encode(phi)).
bool coherence_scaling_check(const CssEncoding &e, const StateVector &psi, const StateVector &phi,
                             double tol = DEFAULT_TOL);

/// Physical gate with gamma(s.B xor y) = pi(s).B xor y for y in C1, phase
/// beta_s on every string of T(|s>_L), and identity elsewhere.
PermutationWithPhases lift_logical(const CssEncoding &e, const PermutationWithPhases &g);

/// Logical gate induced by a physical bias-preserving logical operator.
/// Throws NotBiasPreservingError or NotLogicalOperatorError.
PermutationWithPhases restrict_physical(const CssEncoding &e, const Unitary &g_phys);

struct Obstruction {
    size_t rank_s;
    size_t rank_t;
};

/// Non-empty when chi(|s>_L) != chi(|t>_L): no physical bias-preserving gate
/// maps |s>_L to |t>_L.
std::optional<Obstruction> obstruction_check(const GenericEncoding &e, const BitString &s, const BitString &t);

/// Encoding text format: `n <physical> k <logical>`, then 2^k lines of 2^n
/// `a+bi` amplitudes, line x holding the image of logical |x>.
GenericEncoding read_encoding(std::istream &in, double tol = DEFAULT_TOL);
void write_encoding(std::ostream &out, const GenericEncoding &e);
GenericEncoding read_encoding_file(const std::string &path, double tol = DEFAULT_TOL);

}  // namespace biaspres

#endif
