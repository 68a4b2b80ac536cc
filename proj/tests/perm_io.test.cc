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

#include "biaspres/perm_io.h"

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "biaspres/matrix_io.h"
#include "biaspres/random_gates.h"

using namespace biaspres;

TEST(perm_format, round_trip_is_bit_exact) {
    std::mt19937_64 rng(41);
    for (size_t n = 1; n <= 4; n++) {
        PermutationWithPhases p = random_bias_preserving(n, rng);
        std::stringstream ss;
        write_permutation(ss, p);
        EXPECT_EQ(read_permutation(ss), p);
    }
}

TEST(perm_format, omitted_strings_are_fixed_points) {
    std::istringstream in("# swap two strings\n10 -> 11 phase=0.5\n11 -> 10 phase=0\n");
    PermutationWithPhases p = read_permutation(in);
    EXPECT_EQ(p.num_qubits(), 2u);
    EXPECT_EQ(p.targets(), (std::vector<uint64_t>{0, 1, 3, 2}));
    EXPECT_EQ(p.phase(2), 0.5);
    EXPECT_EQ(p.phase(0), 0.0);
}

TEST(perm_format, header_only_is_identity) {
    std::istringstream in("n 3\n");
    EXPECT_EQ(read_permutation(in), PermutationWithPhases::identity(3));
}

TEST(perm_format, rejects_malformed) {
    auto fails_at = [](const std::string &text, size_t line) {
        std::istringstream in(text);
        try {
            read_permutation(in);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const ParseError &e) {
            EXPECT_EQ(e.line(), line) << text << " -> " << e.what();
        }
    };
    fails_at("0 -> 1 phase=0\n0 -> 0 phase=0\n", 2);
    fails_at("n 2\n0 -> 1 phase=0\n", 2);
    fails_at("01 => 10 phase=0\n", 1);
    fails_at("01 -> 10 phase=abc\n", 1);
    fails_at("n 2\n01 -> 10 phase=0\n10 -> 01 phase=0\n00 -> 01 phase=0\n", 0);
    std::istringstream not_bijective("0 -> 1 phase=0\n");
    EXPECT_THROW(read_permutation(not_bijective), ParseError);
    std::istringstream empty("");
    EXPECT_THROW(read_permutation(empty), ParseError);
}
