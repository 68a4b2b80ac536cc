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

#include "biaspres/binary_code.h"

#include <random>
#include <set>
#include <sstream>

#include <gtest/gtest.h>

#include "biaspres/matrix_io.h"
#include "codes.h"

using namespace biaspres;

namespace {

/// Span of `rows` by enumerating all subsets.
std::set<uint64_t> span_oracle(const std::vector<std::string> &rows) {
    std::set<uint64_t> out;
    for (uint64_t mask = 0; mask < (uint64_t{1} << rows.size()); mask++) {
        uint64_t w = 0;
        for (size_t i = 0; i < rows.size(); i++) {
            if ((mask >> i) & 1) {
                w ^= BitString::parse(rows[i]).value();
            }
        }
        out.insert(w);
    }
    return out;
}

}  // namespace

TEST(binary_code, reduced_row_echelon_form) {
    BinaryCode c = BinaryCode::from_strings({"0111", "1100"});
    ASSERT_EQ(c.dimension(), 2u);
    EXPECT_EQ(c.generator()[0].str(), "1011");
    EXPECT_EQ(c.generator()[1].str(), "0111");
    EXPECT_EQ(c.pivots(), (std::vector<size_t>{0, 1}));
}

TEST(binary_code, codewords_match_span_oracle) {
    std::vector<std::string> rows = {"1110000", "1001100", "0101010", "1101001"};
    BinaryCode c = BinaryCode::from_strings(rows);
    std::set<uint64_t> words;
    for (const BitString &w : c.codewords()) {
        words.insert(w.value());
        EXPECT_TRUE(c.contains(w));
    }
    EXPECT_EQ(words, span_oracle(rows));
    EXPECT_EQ(words.size(), 16u);
    for (uint64_t w = 0; w < 128; w++) {
        EXPECT_EQ(c.contains(BitString(7, w)), words.count(w) == 1);
    }
}

TEST(binary_code, hamming_and_simplex_are_dual) {
    BinaryCode h = oracle::hamming7(), s = oracle::simplex7();
    for (const BitString &a : h.codewords()) {
        for (const BitString &b : s.codewords()) {
            EXPECT_FALSE(a.dot(b));
        }
    }
    EXPECT_TRUE(h.contains(s));
    EXPECT_FALSE(s.contains(h));
    EXPECT_TRUE(oracle::even_weight4().contains(oracle::repetition4()));
}

TEST(binary_code, encode_and_reduce) {
    BinaryCode c = oracle::even_weight4();
    EXPECT_EQ(c.encode(BitString(3, 0)).str(), "0000");
    for (uint64_t m = 0; m < 8; m++) {
        EXPECT_EQ(c.encode(BitString(3, m)), c.codewords()[m]);
        EXPECT_EQ(c.reduce(c.encode(BitString(3, m))).value(), 0u);
    }
    EXPECT_THROW(c.encode(BitString(2, 0)), std::invalid_argument);
}

TEST(binary_code, rejects_dependent_and_misshapen_rows) {
    EXPECT_THROW(BinaryCode::from_strings({"110", "011", "101"}), std::invalid_argument);
    EXPECT_THROW(BinaryCode::from_strings({"110", "110"}), std::invalid_argument);
    EXPECT_THROW(BinaryCode::from_strings({"000"}), std::invalid_argument);
    EXPECT_THROW(BinaryCode::from_strings({"110", "01"}), std::invalid_argument);
    EXPECT_EQ(BinaryCode(3, {}).dimension(), 0u);
}

TEST(code_format, round_trip) {
    std::stringstream ss;
    write_code(ss, oracle::hamming7());
    BinaryCode back = read_code(ss);
    EXPECT_EQ(back.generator(), oracle::hamming7().generator());
    std::istringstream with_comments("# simplex\nn 7 k 3\n0001111\n0110011 # row two\n1010101\n");
    EXPECT_EQ(read_code(with_comments).generator(), oracle::simplex7().generator());
}

TEST(code_format, errors) {
    auto fails_at = [](const std::string &text, size_t line) {
        std::istringstream in(text);
        try {
            read_code(in);
            ADD_FAILURE() << "accepted: " << text;
        } catch (const ParseError &e) {
            EXPECT_EQ(e.line(), line) << e.what();
        }
    };
    fails_at("n 3 k 2\n110\n01\n", 3);
    fails_at("n 3 k 2\n110\n0a1\n", 3);
    fails_at("n 3 x 2\n110\n011\n", 1);
    fails_at("n 3 k 2\n110\n", 2);
    std::istringstream dependent("n 3 k 2\n110\n110\n");
    EXPECT_THROW(read_code(dependent), ParseError);
}
