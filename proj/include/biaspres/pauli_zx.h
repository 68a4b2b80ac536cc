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

#ifndef BIASPRES_PAULI_ZX_H
#define BIASPRES_PAULI_ZX_H

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "biaspres/bitstring.h"
#include "biaspres/unitary.h"

namespace biaspres {

/// One X-part block A_v = sum_u alpha_{u,v} Z_u X_v of a ZX-decomposition.
///
/// Equivalently A_v = (sum_s beta_{s,v} |s><s|) X_v with
/// beta_{s,v} = sum_u (-1)^{u.s} alpha_{u,v}. An empty coefficient map is the
/// zero block.
struct ZXBlock {
    size_t num_qubits = 0;
    BitString v;
    std::map<BitString, complex> coeffs;

    /// beta_{s,v} for every s, indexed by s.value(). Computed with a fast
    /// Walsh-Hadamard transform of the coefficients.
    std::vector<complex> diagonal() const;
    Matrix to_matrix() const;
};

/// Support S_v and diagonal values of a block in its basis form.
struct BlockBasisForm {
    BitString v;
    std::vector<BitString> support;
    std::map<BitString, complex> beta;

    /// sigma_v(s) = v xor s.
    BitString shift(const BitString &s) const { return v ^ s; }
    /// Rebuilds the block as a dense matrix from (S_v, beta, sigma_v).
    Matrix to_matrix(size_t num_qubits) const;
};

/// Sparse expansion G = sum_{u,v} alpha_{u,v} Z_u X_v.
///
/// Coefficients with magnitude <= tol are not stored. Keys are (v, u) so that
/// iteration order is lexicographic on (v, u) and each block is contiguous.
class ZXDecomposition {
   public:
    using Key = std::pair<BitString, BitString>;  // (v, u)

    ZXDecomposition(size_t num_qubits, std::map<Key, complex> coeffs, double tol);

    size_t num_qubits() const { return num_qubits_; }
    double tol() const { return tol_; }
    const std::map<Key, complex> &coeffs() const { return coeffs_; }

    /// alpha_{u,v}, or 0 when absent.
    complex coeff(const BitString &u, const BitString &v) const;
    size_t nonzero_count() const { return coeffs_.size(); }
    /// X-parts v with at least one stored coefficient, ascending.
    std::vector<BitString> x_parts() const;

    Matrix reconstruct() const;

   private:
    size_t num_qubits_;
    std::map<Key, complex> coeffs_;
    double tol_;
};

/// alpha_{u,v} = Tr((Z_u X_v)^dag G) / 2^n for all (u, v).
ZXDecomposition zx_decompose(const Unitary &g);

ZXBlock block(const ZXDecomposition &d, const BitString &v);

/// S_v = {s : |beta_{s,v}| > tol} together with the beta values on it.
BlockBasisForm block_basis_form(const ZXBlock &b, double tol = DEFAULT_TOL);

/// Dense A_v A_w^dag.
Matrix block_product_adjoint(const ZXBlock &a, const ZXBlock &b);

/// True iff every coefficient with nonzero X-part is within tol of zero.
bool is_z_type(const Unitary &g);

/// Text form: optional `n <qubits>` header, then `u-bits v-bits re im` lines
/// sorted lexicographically by (u, v).
void write_zx(std::ostream &out, const ZXDecomposition &d);
ZXDecomposition read_zx(std::istream &in, double tol = DEFAULT_TOL);

/// In-place unnormalized Walsh-Hadamard transform: out[s] = sum_u (-1)^{u.s} in[u].
void walsh_hadamard(std::vector<complex> &values);

}  // namespace biaspres

#endif
