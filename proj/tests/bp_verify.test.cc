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

#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "biaspres/distance.h"
#include "biaspres/pauli_zx.h"
#include "biaspres/random_gates.h"
#include "test_util.h"

using namespace biaspres;

namespace {

constexpr double pi = std::numbers::pi;

bool all_three(const Unitary &g) {
    return check_permutation(g).is_bp && check_zx(g) && check_normalizer(g) && check_normalizer(g, true);
}

bool none_of_three(const Unitary &g) {
    return !check_permutation(g).is_bp && !check_zx(g) && !check_normalizer(g) && !check_normalizer(g, true);
}

/// Independent membership oracle: every column has exactly one nonzero entry.
bool dense_monomial_oracle(const Unitary &g) {
    for (size_t c = 0; c < g.dim(); c++) {
        int nonzero = 0;
        for (size_t r = 0; r < g.dim(); r++) {
            if (std::abs(g(r, c)) > 1e-6) {
                nonzero++;
            }
        }
        if (nonzero != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST(check_permutation, cnot) {
    BpVerdict v = check_permutation(gates::cnot());
    ASSERT_TRUE(v.is_bp);
    ASSERT_TRUE(v.canonical.has_value());
    EXPECT_EQ(v.canonical->targets(), (std::vector<uint64_t>{0, 1, 3, 2}));
    for (double phi : v.canonical->phases()) {
        EXPECT_EQ(phi, 0.0);
    }
}

TEST(check_permutation, hadamard_has_witness) {
    BpVerdict v = check_permutation(gates::H());
    EXPECT_FALSE(v.is_bp);
    ASSERT_TRUE(v.witness.has_value());
    EXPECT_NE(v.witness->find("column 0"), std::string::npos);
    EXPECT_NE(v.witness->find("2 entries"), std::string::npos);
}

TEST(check_permutation, rz_phases) {
    const double theta = 0.7;
    BpVerdict v = check_permutation(gates::rz(theta));
    ASSERT_TRUE(v.is_bp);
    EXPECT_TRUE(v.canonical->is_identity_permutation());
    EXPECT_NEAR(circular_distance(v.canonical->phase(0), -theta / 2), 0.0, 1e-12);
    EXPECT_NEAR(circular_distance(v.canonical->phase(1), theta / 2), 0.0, 1e-12);
    EXPECT_GE(v.canonical->phase(0), 0.0);
    EXPECT_LT(v.canonical->phase(0), 2 * pi);
}

TEST(check_permutation, band_entries_are_rejected) {
    // A rotation by a tiny angle is close to the identity but not monomial.
    Matrix m(2, 2);
    double a = 1e-5;
    m << std::cos(a), -std::sin(a), std::sin(a), std::cos(a);
    EXPECT_TRUE(none_of_three(Unitary(m)));
}

TEST(check_zx, examples) {
    EXPECT_TRUE(check_zx(gates::ccnot()));
    EXPECT_TRUE(check_zx(gates::rz(1.3)));
    EXPECT_TRUE(check_zx(tensor(gates::phase(0.2), gates::rz(2.5))));
    ZxCheck h = check_zx_detailed(gates::H());
    EXPECT_FALSE(h.ok);
    ASSERT_TRUE(h.non_orthogonal.has_value());
    EXPECT_EQ(h.non_orthogonal->first.str(), "0");
    EXPECT_EQ(h.non_orthogonal->second.str(), "1");
    EXPECT_NEAR(h.max_cross_term, 0.5, 1e-12);
}

TEST(check_zx, structured_cross_terms_match_dense_products) {
    // The detailed check reports max ||A_v A_w^dag||_max; recompute densely.
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 5; trial++) {
        Unitary g = random_unitary(2, rng);
        ZXDecomposition d = zx_decompose(g);
        double dense_max = 0;
        Matrix sum = Matrix::Zero(4, 4);
        for (uint64_t v = 0; v < 4; v++) {
            Matrix av = block(d, BitString(2, v)).to_matrix();
            sum += av * av.adjoint();
            for (uint64_t w = 0; w < 4; w++) {
                if (v != w) {
                    dense_max = std::max(dense_max, max_abs(av * block(d, BitString(2, w)).to_matrix().adjoint()));
                }
            }
        }
        ZxCheck c = check_zx_detailed(g);
        EXPECT_NEAR(c.max_cross_term, dense_max, 1e-12);
        EXPECT_NEAR(c.completeness_defect, max_abs(sum - Matrix::Identity(4, 4)), 1e-12);
    }
}

TEST(check_normalizer, examples) {
    EXPECT_TRUE(check_normalizer(gates::cnot()));
    Matrix conj = gates::cnot().matrix() * pauli_z_string(BitString::parse("01")).matrix() *
                  gates::cnot().matrix().adjoint();
    EXPECT_LT(max_abs(conj - pauli_z_string(BitString::parse("11")).matrix()), 1e-15);
    NormalizerCheck h = check_normalizer_detailed(gates::H());
    EXPECT_FALSE(h.ok);
    ASSERT_TRUE(h.violating.has_value());
    EXPECT_EQ(h.violating->str(), "1");
    for (uint64_t c = 0; c < 8; c++) {
        EXPECT_TRUE(check_normalizer(pauli_z_string(BitString(3, c)), true));
    }
}

TEST(three_way_agreement, random_bias_preserving_and_haar) {
    std::mt19937_64 rng(32);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Unitary bp = to_unitary(random_bias_preserving(n, rng));
            EXPECT_TRUE(all_three(bp));
            EXPECT_TRUE(dense_monomial_oracle(bp));
            Unitary haar = random_unitary(n, rng);
            EXPECT_TRUE(none_of_three(haar));
            EXPECT_FALSE(dense_monomial_oracle(haar));
        }
    }
}

TEST(three_way_agreement, structured_non_bp_gates) {
    // Gates that are bias-preserving on a subspace only.
    std::mt19937_64 rng(33);
    for (int trial = 0; trial < 10; trial++) {
        Unitary partial = tensor(gates::rz(0.4), random_unitary(1, rng));
        EXPECT_TRUE(none_of_three(partial));
        Matrix controlled_h = Matrix::Identity(4, 4);
        controlled_h.block(2, 2, 2, 2) = gates::H().matrix();
        EXPECT_TRUE(none_of_three(Unitary(controlled_h)));
    }
    EXPECT_TRUE(none_of_three(gates::hadamard_power(3)));
    EXPECT_TRUE(all_three(gates::swap()));
    EXPECT_TRUE(all_three(gates::cz()));
}

TEST(group_closure, products_and_adjoints) {
    std::mt19937_64 rng(34);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 20; trial++) {
            PermutationWithPhases a = random_bias_preserving(n, rng);
            PermutationWithPhases b = random_bias_preserving(n, rng);
            Unitary prod = to_unitary(a) * to_unitary(b);
            EXPECT_TRUE(all_three(prod));
            EXPECT_TRUE(all_three(to_unitary(a).adjoint()));
            EXPECT_LT(max_abs(to_unitary(a * b).matrix() - prod.matrix()), 1e-12);
            EXPECT_LT(max_abs(to_unitary(a.adjoint()).matrix() - to_unitary(a).adjoint().matrix()), 1e-12);
            EXPECT_TRUE(check_permutation(prod).canonical->approx_equal(a * b, 1e-9));
        }
    }
}

TEST(canonical_form, round_trip) {
    std::mt19937_64 rng(35);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 20; trial++) {
            PermutationWithPhases p = random_bias_preserving(n, rng);
            BpVerdict v = check_permutation(to_unitary(p));
            ASSERT_TRUE(v.is_bp);
            EXPECT_TRUE(v.canonical->approx_equal(p, 1e-9));
            EXPECT_LT(max_abs(to_unitary(*v.canonical).matrix() - to_unitary(p).matrix()), 1e-9);
        }
    }
}

TEST(canonical_form, to_unitary_examples) {
    EXPECT_EQ(to_unitary(PermutationWithPhases::identity(2)).matrix(), Matrix::Identity(4, 4));
    EXPECT_EQ(to_unitary(PermutationWithPhases::from_permutation(1, {1, 0})).matrix(), gates::X().matrix());
    EXPECT_LT(max_abs(to_unitary(PermutationWithPhases::diagonal(1, {0, pi})).matrix() - gates::Z().matrix()),
              1e-15);
}

TEST(canonical_form, validation_and_normalization) {
    EXPECT_THROW(PermutationWithPhases(1, {0, 0}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(PermutationWithPhases(2, {0, 1}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(PermutationWithPhases(1, {0, 1}, {0}), std::invalid_argument);
    PermutationWithPhases p(1, {1, 0}, {-pi / 2, 5 * pi});
    EXPECT_NEAR(p.phase(0), 3 * pi / 2, 1e-12);
    EXPECT_NEAR(p.phase(1), pi, 1e-12);
    EXPECT_TRUE(p.approx_equal(PermutationWithPhases(1, {1, 0}, {3 * pi / 2 + 2 * pi, -pi}), 1e-12));
    // Angles straddling zero are close on the circle.
    EXPECT_NEAR(circular_distance(1e-12, 2 * pi - 1e-12), 2e-12, 1e-15);
}

TEST(canonical_form, apply_matches_dense) {
    std::mt19937_64 rng(36);
    PermutationWithPhases p = random_bias_preserving(3, rng);
    StateVector psi = random_state(3, rng);
    EXPECT_LT((p.apply(psi).amplitudes() - to_unitary(p).matrix() * psi.amplitudes()).norm(), 1e-12);
}

TEST(coherence_rank, examples) {
    EXPECT_EQ(coherence_rank(StateVector::basis(BitString::parse("010"))), 1u);
    Vector plus(2);
    plus << 1, 1;
    EXPECT_EQ(coherence_rank(StateVector(plus / std::sqrt(2.0))), 2u);
    Vector code = Vector::Zero(8);
    for (uint64_t s : {0b000, 0b011, 0b101, 0b110}) {
        code(s) = 0.5;
    }
    StateVector psi(code);
    EXPECT_EQ(coherence_rank(psi), 4u);
    std::vector<BitString> support = support_set(psi);
    std::vector<std::string> strs;
    for (const auto &s : support) {
        strs.push_back(s.str());
    }
    EXPECT_EQ(strs, (std::vector<std::string>{"000", "011", "101", "110"}));
    EXPECT_EQ(coherence_rank(StateVector::zero(2)), 0u);
    EXPECT_TRUE(support_set(StateVector::zero(2)).empty());
    EXPECT_EQ(support_set(StateVector::basis(BitString::parse("01")))[0].str(), "01");
}

TEST(coherence_rank, preserved_by_bias_preserving_gates) {
    std::mt19937_64 rng(37);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 30; trial++) {
            Unitary g = to_unitary(random_bias_preserving(n, rng));
            StateVector psi = random_sparse_state(n, rng);
            EXPECT_EQ(coherence_rank(g * psi), coherence_rank(psi));
            for (uint64_t x = 0; x < g.dim(); x++) {
                EXPECT_EQ(coherence_rank(g * StateVector::basis(BitString(n, x))), 1u);
            }
        }
    }
    EXPECT_EQ(coherence_rank(gates::H() * StateVector::basis(BitString::parse("0"))), 2u);
}

TEST(hadamard_bound, values) {
    EXPECT_NEAR(hadamard_bound(1), std::sqrt(2 - std::sqrt(2.0)), 1e-15);
    EXPECT_NEAR(hadamard_bound(1), 0.765367, 1e-6);
    EXPECT_NEAR(hadamard_bound(2), 1.0, 1e-15);
    EXPECT_NEAR(hadamard_bound(40), std::sqrt(2.0), 1e-5);
    EXPECT_THROW(hadamard_bound(0), std::invalid_argument);
}

TEST(hadamard_bound, holds_on_samples) {
    std::mt19937_64 rng(38);
    for (int n = 1; n <= 3; n++) {
        Unitary h = gates::hadamard_power(n);
        for (int trial = 0; trial < 100; trial++) {
            Unitary v = to_unitary(random_bias_preserving(n, rng));
            EXPECT_GE(worst_case_error(h, v), hadamard_bound(n) - 10 * DEFAULT_TOL);
        }
    }
}

TEST(render_verdict, text_forms) {
    std::ostringstream yes;
    render_verdict(yes, check_permutation(gates::X()));
    EXPECT_EQ(yes.str(), "BP yes\nPERM 0->1 phase=0\nPERM 1->0 phase=0\n");
    std::ostringstream no;
    render_verdict(no, check_permutation(gates::H()));
    EXPECT_EQ(no.str().rfind("BP no\nWITNESS ", 0), 0u);
}
