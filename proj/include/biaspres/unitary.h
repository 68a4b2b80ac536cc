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

#ifndef BIASPRES_UNITARY_H
#define BIASPRES_UNITARY_H

#include <complex>
#include <cstddef>

#include <Eigen/Dense>

#include "biaspres/bitstring.h"

namespace biaspres {

using complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

constexpr double DEFAULT_TOL = 1e-9;
constexpr size_t DEFAULT_MAX_DENSE_QUBITS = 10;

/// Number of qubits n with 2^n == dim, or throws if dim is not a power of two.
size_t qubits_for_dim(size_t dim);

/// A dense unitary on n qubits with big-endian basis ordering.
///
/// Construction validates squareness, power-of-two dimension, the dense size
/// cap, and U U^dagger = I entrywise within `tol`. Values are immutable.
class Unitary {
   public:
    explicit Unitary(Matrix m, double tol = DEFAULT_TOL, size_t max_qubits = DEFAULT_MAX_DENSE_QUBITS);

    static Unitary identity(size_t num_qubits, double tol = DEFAULT_TOL);
    /// Wraps a matrix known to be unitary (e.g. a product of unitaries) without re-validating.
    static Unitary trusted(Matrix m, double tol = DEFAULT_TOL);

    size_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return static_cast<size_t>(m_.rows()); }
    double tol() const { return tol_; }
    const Matrix &matrix() const { return m_; }
    complex operator()(size_t row, size_t col) const { return m_(row, col); }

    Unitary operator*(const Unitary &rhs) const;
    Unitary adjoint() const;
    Unitary with_tol(double tol) const;

    /// All off-diagonal entries have magnitude <= tol.
    bool is_diagonal() const;
    bool approx_equal(const Unitary &other, double tol) const;

   private:
    struct TrustedTag {};
    Unitary(Matrix m, double tol, TrustedTag);

    Matrix m_;
    size_t num_qubits_ = 0;
    double tol_ = DEFAULT_TOL;
};

/// Kronecker product; `a` acts on the leading (more significant) qubits.
Unitary tensor(const Unitary &a, const Unitary &b);

/// Z_c = tensor over i of Z^{c_i}: diagonal with (-1)^{c.s} at index s.
Unitary pauli_z_string(const BitString &c);
/// X_v: permutation |s> -> |s xor v>.
Unitary pauli_x_string(const BitString &v);

/// Largest entry magnitude of `m`.
double max_abs(const Matrix &m);

namespace gates {
Unitary X();
Unitary Z();
Unitary H();
/// Rz(theta) = diag(e^{-i theta/2}, e^{i theta/2}).
Unitary rz(double theta);
/// P_Z(phi) = diag(1, e^{i phi}).
Unitary phase(double phi);
/// Control is qubit 0, target qubit 1.
Unitary cnot();
Unitary cz();
Unitary swap();
/// Controls are qubits 0 and 1, target qubit 2.
Unitary ccnot();
Unitary hadamard_power(size_t n);
}  // namespace gates

/// A pure state (or, for intermediates, an unnormalized vector) on n qubits.
class StateVector {
   public:
    explicit StateVector(Vector amplitudes);

    static StateVector basis(const BitString &s);
    static StateVector zero(size_t num_qubits);

    size_t num_qubits() const { return num_qubits_; }
    size_t dim() const { return static_cast<size_t>(amps_.size()); }
    const Vector &amplitudes() const { return amps_; }
    complex operator[](size_t i) const { return amps_(i); }

    double norm() const { return amps_.norm(); }
    bool is_normalized(double tol = DEFAULT_TOL) const;
    StateVector normalized() const;

   private:
    Vector amps_;
    size_t num_qubits_ = 0;
};

StateVector operator*(const Unitary &u, const StateVector &psi);

}  // namespace biaspres

#endif
