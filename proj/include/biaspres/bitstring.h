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

#ifndef BIASPRES_BITSTRING_H
#define BIASPRES_BITSTRING_H

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace biaspres {

/// A length-n binary string indexing computational basis states.
///
/// Ordering is big-endian: qubit 0 is the leftmost character and the most
/// significant bit of `value()`. Basis index s of a 2^n-dimensional space
/// corresponds to the BitString with value s.
class BitString {
   public:
    static constexpr size_t MAX_BITS = 63;

    BitString() = default;
    BitString(size_t num_bits, uint64_t value);

    /// Parses a string of '0'/'1' characters. Throws std::invalid_argument.
    static BitString parse(std::string_view text);
    static BitString zeros(size_t num_bits) { return BitString(num_bits, 0); }

    size_t size() const { return num_bits_; }
    uint64_t value() const { return value_; }

    /// Bit carried by qubit q (0 = leftmost).
    bool bit(size_t q) const { return (value_ >> (num_bits_ - 1 - q)) & 1; }
    BitString with_bit(size_t q, bool b) const;

    size_t weight() const;
    /// Parity of the bitwise AND, i.e. the GF(2) dot product.
    bool dot(const BitString &other) const;

    BitString operator^(const BitString &other) const;
    bool operator==(const BitString &other) const = default;
    std::strong_ordering operator<=>(const BitString &other) const;

    std::string str() const;

   private:
    size_t num_bits_ = 0;
    uint64_t value_ = 0;
};

inline bool parity(uint64_t x) { return __builtin_parityll(x); }

}  // namespace biaspres

#endif
