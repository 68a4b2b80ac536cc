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

#include "biaspres/distance.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace biaspres {

double operator_norm(const Matrix &m) {
    if (m.size() == 0) {
        return 0.0;
    }
    Eigen::BDCSVD<Matrix> svd(m);
    return svd.singularValues()(0);
}

double worst_case_error(const Unitary &u, const Unitary &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("worst_case_error: dimension mismatch");
    }
    return operator_norm(u.matrix() - v.matrix());
}

double min_max_chord(std::span<const double> angles) {
    if (angles.empty()) {
        return 0.0;
    }
    constexpr double two_pi = 2 * std::numbers::pi;
    std::vector<double> a;
    a.reserve(angles.size());
    for (double x : angles) {
        double r = std::fmod(x, two_pi);
        a.push_back(r < 0 ? r + two_pi : r);
    }
    std::sort(a.begin(), a.end());
    double largest_gap = a.front() + two_pi - a.back();
    for (size_t k = 1; k < a.size(); k++) {
        largest_gap = std::max(largest_gap, a[k] - a[k - 1]);
    }
    double arc = std::max(0.0, two_pi - largest_gap);
    return 2 * std::sin(arc / 4);
}

double worst_case_error_up_to_phase(const Unitary &u, const Unitary &v) {
    if (u.dim() != v.dim()) {
        throw std::invalid_argument("worst_case_error_up_to_phase: dimension mismatch");
    }
    Matrix w = v.matrix().adjoint() * u.matrix();
    Eigen::ComplexEigenSolver<Matrix> solver(w, false);
    const auto &ev = solver.eigenvalues();
    std::vector<double> phases(static_cast<size_t>(ev.size()));
    for (Eigen::Index k = 0; k < ev.size(); k++) {
        phases[static_cast<size_t>(k)] = std::arg(ev(k));
    }
    return min_max_chord(phases);
}

}  // namespace biaspres
