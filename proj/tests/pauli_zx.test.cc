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

#include "biaspres/pauli_zx.h"

#include <numbers>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "biaspres/matrix_io.h"
#include "biaspres/random_gates.h"
#include "test_util.h"

using namespace biaspres;

namespace {

void expect_matches_oracle(const Unitary &g) {
    ZXDecomposition d = zx_decompose(g);
    size_t n = g.num_qubits();
    for (uint64_t u = 0; u < g.dim(); u++) {
        for (uint64_t v = 0; v < g.dim(); v++) {
            BitString bu(n, u), bv(n, v);
            EXPECT_LT(std::abs(d.coeff(bu, bv) - oracle::zx_coeff_oracle(g, bu, bv)), 1e-12);
        }
    }
}

}  // namespace

TEST(zx_decompose, coefficients_match_trace_oracle) {
    std::mt19937_64 rng(21);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 5; trial++) {
            expect_matches_oracle(random_unitary(n, rng));
            expect_matches_oracle(to_unitary(random_bias_preserving(n, rng)));
        }
    }
    expect_matches_oracle(gates::H());
    expect_matches_oracle(gates::ccnot());
}

TEST(zx_decompose, reconstructs_input) {
    std::mt19937_64 rng(22);
    for (size_t n = 1; n <= 4; n++) {
        Unitary g = random_unitary(n, rng);
        EXPECT_LT(max_abs(zx_decompose(g).reconstruct() - g.matrix()), 1e-12);
    }
}

TEST(zx_decompose, cnot_blocks) {
    // CNOT = (I + Z_1)/2 + (I - Z_1)/2 X_2 in the big-endian convention:
    // X-parts 00 and 01, each with Z-parts 00 and 10.
    ZXDecomposition d = zx_decompose(gates::cnot());
    EXPECT_EQ(d.nonzero_count(), 4u);
    std::vector<BitString> parts = d.x_parts();
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0].str(), "00");
    EXPECT_EQ(parts[1].str(), "01");
    EXPECT_NEAR(d.coeff(BitString::parse("00"), BitString::parse("00")).real(), 0.5, 1e-15);
    EXPECT_NEAR(d.coeff(BitString::parse("10"), BitString::parse("00")).real(), 0.5, 1e-15);
    EXPECT_NEAR(d.coeff(BitString::parse("00"), BitString::parse("01")).real(), 0.5, 1e-15);
    EXPECT_NEAR(d.coeff(BitString::parse("10"), BitString::parse("01")).real(), -0.5, 1e-15);
}

TEST(zx_decompose, block_supports_of_bias_preserving_gates_partition) {
    std::mt19937_64 rng(23);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 10; trial++) {
            PermutationWithPhases p = random_bias_preserving(n, rng);
            ZXDecomposition d = zx_decompose(to_unitary(p));
            std::vector<int> covered(p.dim(), 0);
            for (const BitString &v : d.x_parts()) {
                BlockBasisForm f = block_basis_form(block(d, v));
                EXPECT_LT(max_abs(f.to_matrix(n) - block(d, v).to_matrix()), 1e-12);
                for (const BitString &s : f.support) {
                    covered[s.value()]++;
                    // A_v = diag(beta) X_v sends |s xor v> to beta_{s,v} |s>.
                    EXPECT_EQ(p.target(f.shift(s).value()), s.value());
                    EXPECT_LT(std::abs(std::abs(f.beta.at(s)) - 1.0), 1e-12);
                }
            }
            for (int c : covered) {
                EXPECT_EQ(c, 1);
            }
        }
    }
}

TEST(zx_decompose, block_diagonal_matches_dense_block) {
    std::mt19937_64 rng(24);
    Unitary g = random_unitary(3, rng);
    ZXDecomposition d = zx_decompose(g);
    for (uint64_t v = 0; v < 8; v++) {
        ZXBlock b = block(d, BitString(3, v));
        std::vector<complex> beta = b.diagonal();
        // A_v = diag(beta) X_v, and A_v X_v has beta on the diagonal.
        Matrix av_xv = b.to_matrix() * pauli_x_string(BitString(3, v)).matrix();
        for (uint64_t s = 0; s < 8; s++) {
            EXPECT_LT(std::abs(beta[s] - av_xv(s, s)), 1e-12);
        }
    }
}

TEST(zx_decompose, block_product_adjoint_matches_dense) {
    std::mt19937_64 rng(25);
    Unitary g = random_unitary(2, rng);
    ZXDecomposition d = zx_decompose(g);
    for (uint64_t v = 0; v < 4; v++) {
        for (uint64_t w = 0; w < 4; w++) {
            ZXBlock a = block(d, BitString(2, v)), b = block(d, BitString(2, w));
            Matrix expected = a.to_matrix() * b.to_matrix().adjoint();
            EXPECT_LT(max_abs(block_product_adjoint(a, b) - expected), 1e-12);
        }
    }
}

TEST(is_z_type, examples) {
    EXPECT_TRUE(is_z_type(gates::cz()));
    EXPECT_TRUE(is_z_type(gates::rz(0.4)));
    EXPECT_FALSE(is_z_type(gates::X()));
    EXPECT_FALSE(is_z_type(gates::H()));
}

TEST(walsh_hadamard, matches_direct_sum) {
    std::vector<complex> in = {1, complex(0, 2), -3, 0.5, 2, 1, complex(1, 1), 0};
    std::vector<complex> out = in;
    walsh_hadamard(out);
    for (uint64_t s = 0; s < 8; s++) {
        complex expected = 0;
        for (uint64_t u = 0; u < 8; u++) {
            expected += (parity(u & s) ? -1.0 : 1.0) * in[u];
        }
        EXPECT_LT(std::abs(out[s] - expected), 1e-12);
    }
}

TEST(zx_format, round_trip_and_ordering) {
    std::mt19937_64 rng(26);
    Unitary g = random_unitary(2, rng);
    ZXDecomposition d = zx_decompose(g);
    std::stringstream ss;
    write_zx(ss, d);
    ZXDecomposition back = read_zx(ss);
    EXPECT_EQ(back.nonzero_count(), d.nonzero_count());
    for (const auto &[key, value] : d.coeffs()) {
        EXPECT_EQ(back.coeff(key.second, key.first), value);
    }
    // Lines are sorted by (u, v).
    std::stringstream again;
    write_zx(again, d);
    std::string line, prev;
    std::getline(again, line);  // header
    while (std::getline(again, line)) {
        std::string key = line.substr(0, 6);
        EXPECT_LT(prev, key);
        prev = key;
    }
}

TEST(zx_format, rejects_malformed) {
    std::istringstream bad("n 1\n0 1 0.5\n");
    EXPECT_THROW(read_zx(bad), ParseError);
    std::istringstream mixed("0 1 0.5 0\n01 1 0.5 0\n");
    EXPECT_THROW(read_zx(mixed), ParseError);
}

TEST(zx_decompose, single_qubit_examples) {
    const BitString zero = BitString::parse("0"), one = BitString::parse("1");
    ZXDecomposition x = zx_decompose(gates::X());
    EXPECT_EQ(x.nonzero_count(), 1u);
    EXPECT_NEAR(std::abs(x.coeff(zero, one) - 1.0), 0, 1e-15);
    ZXDecomposition h = zx_decompose(gates::H());
    EXPECT_EQ(h.nonzero_count(), 2u);
    EXPECT_NEAR(std::abs(h.coeff(zero, one) - (1 / std::numbers::sqrt2)), 0, 1e-15);
    EXPECT_NEAR(std::abs(h.coeff(one, zero) - (1 / std::numbers::sqrt2)), 0, 1e-15);

    EXPECT_LT(max_abs(block(x, one).to_matrix() - gates::X().matrix()), 1e-15);
    EXPECT_TRUE(block(x, zero).coeffs.empty());
    EXPECT_EQ(block(x, zero).to_matrix(), Matrix::Zero(2, 2));
    EXPECT_LT(max_abs(block(h, zero).to_matrix() - (1 / std::numbers::sqrt2) * gates::Z().matrix()), 1e-15);
}

TEST(block_basis_form, examples) {
    BlockBasisForm x = block_basis_form(block(zx_decompose(gates::X()), BitString::parse("1")));
    ASSERT_EQ(x.support.size(), 2u);
    for (const BitString &s : x.support) {
        EXPECT_NEAR(std::abs(x.beta.at(s) - 1.0), 0, 1e-15);
    }
    EXPECT_TRUE(block_basis_form(block(zx_decompose(gates::X()), BitString::parse("0"))).support.empty());
    BlockBasisForm c = block_basis_form(block(zx_decompose(gates::cnot()), BitString::parse("01")));
    ASSERT_EQ(c.support.size(), 2u);
    EXPECT_EQ(c.support[0].str(), "10");
    EXPECT_EQ(c.support[1].str(), "11");
    for (const BitString &s : c.support) {
        EXPECT_NEAR(std::abs(c.beta.at(s) - 1.0), 0, 1e-15);
    }
}

TEST(block_product_adjoint, examples) {
    ZXDecomposition x = zx_decompose(gates::X());
    ZXBlock bx = block(x, BitString::parse("1"));
    EXPECT_LT(max_abs(block_product_adjoint(bx, bx) - Matrix::Identity(2, 2)), 1e-15);
    ZXDecomposition c = zx_decompose(gates::cnot());
    EXPECT_LT(max_abs(block_product_adjoint(block(c, BitString::parse("00")), block(c, BitString::parse("01")))), 1e-15);
    ZXDecomposition h = zx_decompose(gates::H());
    Matrix zx = gates::Z().matrix() * gates::X().matrix() / 2.0;
    EXPECT_LT(max_abs(block_product_adjoint(block(h, BitString::parse("0")), block(h, BitString::parse("1"))) - zx),
              1e-15);
}

TEST(zx_decompose, parseval_and_round_trip) {
    std::mt19937_64 rng(27);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 100; trial++) {
            Unitary g = random_unitary(n, rng);
            ZXDecomposition d = zx_decompose(g);
            double total = 0;
            for (const auto &entry : d.coeffs()) {
                total += std::norm(entry.second);
            }
            EXPECT_NEAR(total, 1.0, 10 * DEFAULT_TOL);
            EXPECT_LT(max_abs(d.reconstruct() - g.matrix()), DEFAULT_TOL);
        }
    }
}

TEST(is_z_type, agrees_with_diagonality) {
    std::mt19937_64 rng(28);
    std::uniform_real_distribution<double> angle(0, 6.3);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 20; trial++) {
            std::vector<double> phases(size_t{1} << n);
            for (double &p : phases) {
                p = angle(rng);
            }
            Unitary diag = to_unitary(PermutationWithPhases::diagonal(n, phases));
            Unitary bp = to_unitary(random_bias_preserving(n, rng));
            Unitary haar = random_unitary(n, rng);
            for (const Unitary &g : {diag, bp, haar}) {
                EXPECT_EQ(is_z_type(g), g.is_diagonal());
            }
            EXPECT_TRUE(is_z_type(diag));
        }
    }
}

TEST(zx_decompose, conjugation_identity) {
    // G Z_x G^dag = Z_x sum_{v,w} (-1)^{x.v} A_v A_w^dag
    std::mt19937_64 rng(29);
    for (size_t n = 1; n <= 3; n++) {
        for (int trial = 0; trial < 3; trial++) {
            Unitary g = trial % 2 ? random_unitary(n, rng) : to_unitary(random_bias_preserving(n, rng));
            ZXDecomposition d = zx_decompose(g);
            std::vector<ZXBlock> blocks;
            for (uint64_t v = 0; v < g.dim(); v++) {
                blocks.push_back(block(d, BitString(n, v)));
            }
            for (uint64_t x = 0; x < g.dim(); x++) {
                BitString bx(n, x);
                Matrix sum = Matrix::Zero(g.dim(), g.dim());
                for (uint64_t v = 0; v < g.dim(); v++) {
                    double sign = bx.dot(BitString(n, v)) ? -1.0 : 1.0;
                    for (uint64_t w = 0; w < g.dim(); w++) {
                        sum += sign * block_product_adjoint(blocks[v], blocks[w]);
                    }
                }
                Matrix dense = g.matrix() * pauli_z_string(bx).matrix() * g.matrix().adjoint();
                EXPECT_LT(max_abs(dense - pauli_z_string(bx).matrix() * sum), 10 * DEFAULT_TOL);
            }
        }
    }
}
