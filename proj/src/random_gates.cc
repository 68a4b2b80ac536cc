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

#include "biaspres/random_gates.h"

#include <algorithm>
#include <numbers>
#include <numeric>

#include <Eigen/QR>

namespace biaspres {

std::vector<uint64_t> random_permutation(size_t dim, std::mt19937_64 &rng) {
    std::vector<uint64_t> p(dim);
    std::iota(p.begin(), p.end(), uint64_t{0});
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

PermutationWithPhases random_bias_preserving(size_t num_qubits, std::mt19937_64 &rng) {
    size_t d = size_t{1} << num_qubits;
    std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
    std::vector<double> phases(d);
    for (double &p : phases) {
        p = angle(rng);
    }
    return PermutationWithPhases(num_qubits, random_permutation(d, rng), std::move(phases));
}

Unitary random_unitary(size_t num_qubits, std::mt19937_64 &rng) {
    Eigen::Index d = Eigen::Index{1} << num_qubits;
    std::normal_distribution<double> normal;
    Matrix z(d, d);
    for (Eigen::Index r = 0; r < d; r++) {
        for (Eigen::Index c = 0; c < d; c++) {
            z(r, c) = complex(normal(rng), normal(rng));
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    Matrix rr = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index c = 0; c < d; c++) {
        complex diag = rr(c, c);
        q.col(c) *= diag / std::abs(diag);
    }
    return Unitary(std::move(q));
}

StateVector random_state(size_t num_qubits, std::mt19937_64 &rng) {
    Eigen::Index d = Eigen::Index{1} << num_qubits;
    std::normal_distribution<double> normal;
    Vector v(d);
    for (Eigen::Index i = 0; i < d; i++) {
        v(i) = complex(normal(rng), normal(rng));
    }
    return StateVector(v / v.norm());
}

StateVector random_sparse_state(size_t num_qubits, std::mt19937_64 &rng) {
    size_t d = size_t{1} << num_qubits;
    std::uniform_int_distribution<size_t> size_dist(1, d);
    size_t support = size_dist(rng);
    auto order = random_permutation(d, rng);
    std::normal_distribution<double> normal;
    Vector v = Vector::Zero(static_cast<Eigen::Index>(d));
    for (size_t i = 0; i < support; i++) {
        complex a;
        do {
            a = complex(normal(rng), normal(rng));
        } while (std::abs(a) < 1e-3);
        v(static_cast<Eigen::Index>(order[i])) = a;
    }
    return StateVector(v / v.norm());
}

}  // namespace biaspres
