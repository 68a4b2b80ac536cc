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

#ifndef BIASPRES_BINARY_CODE_H
#define BIASPRES_BINARY_CODE_H

#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "biaspres/bitstring.h"

namespace biaspres {

/// Row-reduces `rows` over GF(2) in place (pivots scanned from the leftmost
/// bit) and drops zero rows. Returns the pivot positions.
std::vector<size_t> row_reduce(std::vector<BitString> &rows);

/// A binary linear [n, k] code held by its generator in reduced row echelon form.
class BinaryCode {
   public:
    /// Throws std::invalid_argument if rows have the wrong length or are
    /// linearly dependent.
    BinaryCode(size_t length, std::vector<BitString> rows);
    static BinaryCode from_strings(const std::vector<std::string> &rows);

    size_t length() const { return length_; }
    size_t dimension() const { return generator_.size(); }
    const std::vector<BitString> &generator() const { return generator_; }
    const std::vector<size_t> &pivots() const { return pivots_; }

    /// Clears every pivot column of `word` using the generator rows.
    BitString reduce(const BitString &word) const;
    bool contains(const BitString &word) const;
    bool contains(const BinaryCode &other) const;
    /// message . G, with message bit 0 selecting generator row 0.
    BitString encode(const BitString &message) const;
    /// All 2^k codewords in message order.
    std::vector<BitString> codewords() const;

   private:
    size_t length_;
    std::vector<BitString> generator_;
    std::vector<size_t> pivots_;
};

/// Text format: `n <len> k <dim>` header, then k rows of n characters from {0,1}.
BinaryCode read_code(std::istream &in);
void write_code(std::ostream &out, const BinaryCode &code);
BinaryCode read_code_file(const std::string &path);
void write_code_file(const std::string &path, const BinaryCode &code);

}  // namespace biaspres

#endif
