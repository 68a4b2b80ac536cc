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

#include "biaspres/bp_verify.h"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "biaspres/matrix_io.h"
#include "biaspres/pauli_zx.h"

namespace biaspres {

namespace {
constexpr double TWO_PI = 2 * std::numbers::pi;
}

double normalize_phase(double phi) {
    double r = std::fmod(phi, TWO_PI);
    if (r < 0) {
        r += TWO_PI;
    }
    return r >= TWO_PI ? 0.0 : r;
}

double circular_distance(double a, double b) {
    double d = normalize_phase(a - b);
    return std::min(d, TWO_PI - d);
}

PermutationWithPhases::PermutationWithPhases(size_t num_qubits, std::vector<uint64_t> targets,
                                             std::vector<double> phases)
    : num_qubits_(num_qubits), targets_(std::move(targets)), phases_(std::move(phases)) {
    size_t d = size_t{1} << num_qubits;
    if (targets_.size() != d || phases_.size() != d) {
        throw std::invalid_argument("permutation-with-phases needs " + std::to_string(d) + " targets and phases");
    }
    std::vector<bool> hit(d, false);
    for (uint64_t t : targets_) {
        if (t >= d || hit[t]) {
            throw std::invalid_argument("targets do not form a bijection");
        }
        hit[t] = true;
    }
    for (double &p : phases_) {
        if (!std::isfinite(p)) {
            throw std::invalid_argument("phase is not finite");
        }
        p = normalize_phase(p);
    }
}

PermutationWithPhases PermutationWithPhases::identity(size_t num_qubits) {
    return diagonal(num_qubits, std::vector<double>(size_t{1} << num_qubits, 0.0));
}

PermutationWithPhases PermutationWithPhases::from_permutation(size_t num_qubits, std::vector<uint64_t> targets) {
    std::vector<double> phases(targets.size(), 0.0);
    return PermutationWithPhases(num_qubits, std::move(targets), std::move(phases));
}

PermutationWithPhases PermutationWithPhases::diagonal(size_t num_qubits, std::vector<double> phases) {
    std::vector<uint64_t> targets(size_t{1} << num_qubits);
    for (size_t s = 0; s < targets.size(); s++) {
        targets[s] = s;
    }
    return PermutationWithPhases(num_qubits, std::move(targets), std::move(phases));
}

bool PermutationWithPhases::is_identity_permutation() const {
    for (size_t s = 0; s < targets_.size(); s++) {
        if (targets_[s] != s) {
            return false;
        }
    }
    return true;
}

PermutationWithPhases PermutationWithPhases::operator*(const PermutationWithPhases &rhs) const {
    if (num_qubits_ != rhs.num_qubits_) {
        throw std::invalid_argument("qubit count mismatch composing permutations");
    }
    std::vector<uint64_t> t(dim());
    std::vector<double> p(dim());
    for (size_t s = 0; s < dim(); s++) {
        uint64_t mid = rhs.targets_[s];
        t[s] = targets_[mid];
        p[s] = rhs.phases_[s] + phases_[mid];
    }
    return PermutationWithPhases(num_qubits_, std::move(t), std::move(p));
}

PermutationWithPhases PermutationWithPhases::adjoint() const {
    std::vector<uint64_t> t(dim());
    std::vector<double> p(dim());
    for (size_t s = 0; s < dim(); s++) {
        t[targets_[s]] = s;
        p[targets_[s]] = -phases_[s];
    }
    return PermutationWithPhases(num_qubits_, std::move(t), std::move(p));
}

StateVector PermutationWithPhases::apply(const StateVector &psi) const {
    if (psi.dim() != dim()) {
        throw std::invalid_argument("dimension mismatch applying permutation to state");
    }
    Vector out = Vector::Zero(static_cast<Eigen::Index>(dim()));
    for (size_t s = 0; s < dim(); s++) {
        out(static_cast<Eigen::Index>(targets_[s])) = std::polar(1.0, phases_[s]) * psi[s];
    }
    return StateVector(std::move(out));
}

Matrix PermutationWithPhases::to_matrix() const {
    Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (size_t s = 0; s < dim(); s++) {
        m(static_cast<Eigen::Index>(targets_[s]), static_cast<Eigen::Index>(s)) = std::polar(1.0, phases_[s]);
    }
    return m;
}

bool PermutationWithPhases::approx_equal(const PermutationWithPhases &other, double tol) const {
    if (num_qubits_ != other.num_qubits_ || targets_ != other.targets_) {
        return false;
    }
    for (size_t s = 0; s < dim(); s++) {
        if (circular_distance(phases_[s], other.phases_[s]) > tol) {
            return false;
        }
    }
    return true;
}

Unitary to_unitary(const PermutationWithPhases &p) {
    if (p.num_qubits() > DEFAULT_MAX_DENSE_QUBITS) {
        throw std::invalid_argument("permutation exceeds the dense qubit cap");
    }
    return Unitary::trusted(p.to_matrix());
}

BpVerdict check_permutation(const Unitary &g) {
    const double tol = g.tol();
    const size_t d = g.dim();
    std::vector<uint64_t> targets(d);
    std::vector<double> phases(d);
    std::vector<bool> hit(d, false);
    for (size_t c = 0; c < d; c++) {
        std::vector<size_t> big;
        std::optional<size_t> unit;
        bool in_band = false;
        for (size_t r = 0; r < d; r++) {
            double mag = std::abs(g(r, c));
            if (mag <= tol) {
                continue;
            }
            big.push_back(r);
            if (std::abs(1.0 - mag) <= tol) {
                unit = r;
            } else {
                in_band = true;
            }
        }
        if (in_band || big.size() != 1 || !unit) {
            std::ostringstream w;
            w << "column " << BitString(g.num_qubits(), c).str() << " has " << big.size() << " entries above tol:";
            for (size_t r : big) {
                w << " row " << BitString(g.num_qubits(), r).str() << " |g|=" << format_real(std::abs(g(r, c)));
            }
            return {false, std::nullopt, w.str()};
        }
        if (hit[*unit]) {
            std::ostringstream w;
            w << "column " << BitString(g.num_qubits(), c).str() << " maps to row "
              << BitString(g.num_qubits(), *unit).str() << " already hit by another column";
            return {false, std::nullopt, w.str()};
        }
        hit[*unit] = true;
        targets[c] = *unit;
        phases[c] = std::arg(g(*unit, c));
    }
    return {true, PermutationWithPhases(g.num_qubits(), std::move(targets), std::move(phases)), std::nullopt};
}

ZxCheck check_zx_detailed(const Unitary &g) {
    const double tol = g.tol();
    const size_t d = g.dim();
    auto decomposition = zx_decompose(g);
    std::vector<BitString> parts = decomposition.x_parts();
    std::vector<std::vector<complex>> beta;
    beta.reserve(parts.size());
    for (const BitString &v : parts) {
        beta.push_back(block(decomposition, v).diagonal());
    }

    ZxCheck out;
    // A_v A_w^dag = D_v X_{v xor w} D_w^*, so its (r, r xor v xor w) entry is
    // beta_{r,v} conj(beta_{r xor v xor w, w}) and all other entries vanish.
    for (size_t i = 0; i < parts.size(); i++) {
        for (size_t j = 0; j < parts.size(); j++) {
            if (i == j) {
                continue;
            }
            uint64_t shift = parts[i].value() ^ parts[j].value();
            for (size_t r = 0; r < d; r++) {
                double m = std::abs(beta[i][r] * std::conj(beta[j][r ^ shift]));
                if (m > out.max_cross_term) {
                    out.max_cross_term = m;
                }
                if (m > tol && !out.non_orthogonal) {
                    out.non_orthogonal = {parts[i], parts[j]};
                }
            }
        }
    }
    for (size_t s = 0; s < d; s++) {
        double diag = 0;
        for (const auto &b : beta) {
            diag += std::norm(b[s]);
        }
        out.completeness_defect = std::max(out.completeness_defect, std::abs(diag - 1.0));
    }
    out.ok = !out.non_orthogonal && out.completeness_defect <= tol;
    return out;
}

bool check_zx(const Unitary &g) {
    return check_zx_detailed(g).ok;
}

NormalizerCheck check_normalizer_detailed(const Unitary &g, bool exhaustive) {
    const size_t n = g.num_qubits();
    std::vector<BitString> generators;
    if (exhaustive) {
        for (uint64_t c = 1; c < g.dim(); c++) {
            generators.emplace_back(n, c);
        }
    } else {
        for (size_t q = 0; q < n; q++) {
            generators.push_back(BitString::zeros(n).with_bit(q, true));
        }
    }
    Unitary g_dag = g.adjoint();
    for (const BitString &c : generators) {
        Unitary conj = g * pauli_z_string(c).with_tol(g.tol()) * g_dag;
        if (!is_z_type(conj)) {
            return {false, c};
        }
    }
    return {true, std::nullopt};
}

bool check_normalizer(const Unitary &g, bool exhaustive) {
    return check_normalizer_detailed(g, exhaustive).ok;
}

size_t coherence_rank(const StateVector &psi, double tol) {
    size_t count = 0;
    for (size_t s = 0; s < psi.dim(); s++) {
        if (std::abs(psi[s]) > tol) {
            count++;
        }
    }
    return count;
}

std::vector<BitString> support_set(const StateVector &psi, double tol) {
    std::vector<BitString> out;
    for (size_t s = 0; s < psi.dim(); s++) {
        if (std::abs(psi[s]) > tol) {
            out.emplace_back(psi.num_qubits(), s);
        }
    }
    return out;
}

double hadamard_bound(int n) {
    if (n < 1) {
        throw std::invalid_argument("hadamard_bound requires n >= 1");
    }
    return std::sqrt(2.0 * (1.0 - std::pow(2.0, -n / 2.0)));
}

void render_verdict(std::ostream &out, const BpVerdict &verdict) {
    out << "BP " << (verdict.is_bp ? "yes" : "no") << "\n";
    if (verdict.canonical) {
        const auto &p = *verdict.canonical;
        for (size_t s = 0; s < p.dim(); s++) {
            out << "PERM " << BitString(p.num_qubits(), s).str() << "->"
                << BitString(p.num_qubits(), p.target(s)).str() << " phase=" << format_real(p.phase(s)) << "\n";
        }
    }
    if (verdict.witness) {
        out << "WITNESS " << *verdict.witness << "\n";
    }
}

}  // namespace biaspres
