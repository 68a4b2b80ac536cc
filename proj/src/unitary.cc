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

#include "biaspres/unitary.h"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace biaspres {

size_t qubits_for_dim(size_t dim) {
    if (dim == 0 || (dim & (dim - 1)) != 0) {
        throw std::invalid_argument("dimension " + std::to_string(dim) + " is not a power of two");
    }
    return static_cast<size_t>(__builtin_ctzll(dim));
}

double max_abs(const Matrix &m) {
    return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

Unitary::Unitary(Matrix m, double tol, size_t max_qubits) : m_(std::move(m)), tol_(tol) {
    if (tol < 0) {
        throw std::invalid_argument("negative tolerance");
    }
    if (m_.rows() != m_.cols()) {
        throw std::invalid_argument(
            "matrix is not square: " + std::to_string(m_.rows()) + "x" + std::to_string(m_.cols()));
    }
    num_qubits_ = qubits_for_dim(static_cast<size_t>(m_.rows()));
    if (num_qubits_ > max_qubits) {
        throw std::invalid_argument(
            std::to_string(num_qubits_) + " qubits exceeds the dense cap of " + std::to_string(max_qubits));
    }
    Matrix defect = m_ * m_.adjoint() - Matrix::Identity(m_.rows(), m_.cols());
    double err = max_abs(defect);
    if (!(err <= tol)) {
        throw std::invalid_argument("matrix is not unitary (max |UU^dag - I| = " + std::to_string(err) + ")");
    }
}

Unitary::Unitary(Matrix m, double tol, TrustedTag) : m_(std::move(m)), tol_(tol) {
    num_qubits_ = qubits_for_dim(static_cast<size_t>(m_.rows()));
}

Unitary Unitary::trusted(Matrix m, double tol) {
    if (m.rows() != m.cols()) {
        throw std::invalid_argument("matrix is not square");
    }
    return Unitary(std::move(m), tol, TrustedTag{});
}

Unitary Unitary::identity(size_t num_qubits, double tol) {
    size_t d = size_t{1} << num_qubits;
    return Unitary(Matrix::Identity(d, d), tol, TrustedTag{});
}

Unitary Unitary::operator*(const Unitary &rhs) const {
    if (dim() != rhs.dim()) {
        throw std::invalid_argument("dimension mismatch in unitary product");
    }
    return Unitary(m_ * rhs.m_, std::max(tol_, rhs.tol_), TrustedTag{});
}

Unitary Unitary::adjoint() const {
    return Unitary(m_.adjoint(), tol_, TrustedTag{});
}

Unitary Unitary::with_tol(double tol) const {
    return Unitary(m_, tol, TrustedTag{});
}

bool Unitary::is_diagonal() const {
    for (Eigen::Index c = 0; c < m_.cols(); c++) {
        for (Eigen::Index r = 0; r < m_.rows(); r++) {
            if (r != c && std::abs(m_(r, c)) > tol_) {
                return false;
            }
        }
    }
    return true;
}

bool Unitary::approx_equal(const Unitary &other, double tol) const {
    return dim() == other.dim() && max_abs(m_ - other.m_) <= tol;
}

Unitary tensor(const Unitary &a, const Unitary &b) {
    if (a.num_qubits() + b.num_qubits() > DEFAULT_MAX_DENSE_QUBITS) {
        throw std::invalid_argument("tensor product exceeds the dense qubit cap");
    }
    const Matrix &ma = a.matrix();
    const Matrix &mb = b.matrix();
    Eigen::Index db = mb.rows();
    Matrix out(ma.rows() * db, ma.cols() * db);
    for (Eigen::Index r = 0; r < ma.rows(); r++) {
        for (Eigen::Index c = 0; c < ma.cols(); c++) {
            out.block(r * db, c * db, db, db) = ma(r, c) * mb;
        }
    }
    return Unitary::trusted(std::move(out), std::max(a.tol(), b.tol()));
}

Unitary pauli_z_string(const BitString &c) {
    size_t d = size_t{1} << c.size();
    Matrix m = Matrix::Zero(d, d);
    for (size_t s = 0; s < d; s++) {
        m(s, s) = parity(c.value() & s) ? -1.0 : 1.0;
    }
    return Unitary::trusted(std::move(m));
}

Unitary pauli_x_string(const BitString &v) {
    size_t d = size_t{1} << v.size();
    Matrix m = Matrix::Zero(d, d);
    for (size_t s = 0; s < d; s++) {
        m(s ^ v.value(), s) = 1.0;
    }
    return Unitary::trusted(std::move(m));
}

namespace gates {

namespace {
Unitary from_rows(std::initializer_list<std::initializer_list<complex>> rows) {
    Eigen::Index d = static_cast<Eigen::Index>(rows.size());
    Matrix m(d, d);
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        Eigen::Index c = 0;
        for (const auto &x : row) {
            m(r, c++) = x;
        }
        r++;
    }
    return Unitary::trusted(std::move(m));
}

Unitary permutation_gate(std::initializer_list<size_t> targets) {
    Eigen::Index d = static_cast<Eigen::Index>(targets.size());
    Matrix m = Matrix::Zero(d, d);
    Eigen::Index c = 0;
    for (size_t t : targets) {
        m(static_cast<Eigen::Index>(t), c++) = 1.0;
    }
    return Unitary::trusted(std::move(m));
}
}  // namespace

Unitary X() {
    return from_rows({{0, 1}, {1, 0}});
}

Unitary Z() {
    return from_rows({{1, 0}, {0, -1}});
}

Unitary H() {
    double r = 1.0 / std::numbers::sqrt2;
    return from_rows({{r, r}, {r, -r}});
}

Unitary rz(double theta) {
    return from_rows({{std::polar(1.0, -theta / 2), 0}, {0, std::polar(1.0, theta / 2)}});
}

Unitary phase(double phi) {
    return from_rows({{1, 0}, {0, std::polar(1.0, phi)}});
}

Unitary cnot() {
    return permutation_gate({0, 1, 3, 2});
}

Unitary cz() {
    return from_rows({{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, -1}});
}

Unitary swap() {
    return permutation_gate({0, 2, 1, 3});
}

Unitary ccnot() {
    return permutation_gate({0, 1, 2, 3, 4, 5, 7, 6});
}

Unitary hadamard_power(size_t n) {
    Unitary out = Unitary::identity(0);
    for (size_t k = 0; k < n; k++) {
        out = tensor(out, H());
    }
    return out;
}

}  // namespace gates

StateVector::StateVector(Vector amplitudes) : amps_(std::move(amplitudes)) {
    num_qubits_ = qubits_for_dim(static_cast<size_t>(amps_.size()));
}

StateVector StateVector::basis(const BitString &s) {
    Vector v = Vector::Zero(Eigen::Index{1} << s.size());
    v(static_cast<Eigen::Index>(s.value())) = 1.0;
    return StateVector(std::move(v));
}

StateVector StateVector::zero(size_t num_qubits) {
    return StateVector(Vector::Zero(Eigen::Index{1} << num_qubits));
}

bool StateVector::is_normalized(double tol) const {
    return std::abs(amps_.squaredNorm() - 1.0) <= tol;
}

StateVector StateVector::normalized() const {
    double n = amps_.norm();
    if (n == 0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    return StateVector(amps_ / n);
}

StateVector operator*(const Unitary &u, const StateVector &psi) {
    if (u.dim() != psi.dim()) {
        throw std::invalid_argument("dimension mismatch applying unitary to state");
    }
    return StateVector(u.matrix() * psi.amplitudes());
}

}  // namespace biaspres
