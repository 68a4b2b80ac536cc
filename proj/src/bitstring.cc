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

#include "biaspres/bitstring.h"

#include <stdexcept>

namespace biaspres {

BitString::BitString(size_t num_bits, uint64_t value) : num_bits_(num_bits), value_(value) {
    if (num_bits > MAX_BITS) {
        throw std::invalid_argument("BitString supports at most 63 bits, got " + std::to_string(num_bits));
    }
    if (num_bits < 64 && (value >> num_bits) != 0) {
        throw std::invalid_argument(
            "value " + std::to_string(value) + " does not fit in " + std::to_string(num_bits) + " bits");
    }
}

BitString BitString::parse(std::string_view text) {
    if (text.empty()) {
        throw std::invalid_argument("empty bit string");
    }
    if (text.size() > MAX_BITS) {
        throw std::invalid_argument("bit string too long: " + std::string(text));
    }
    uint64_t v = 0;
    for (char c : text) {
        if (c != '0' && c != '1') {
            throw std::invalid_argument("not a bit string: '" + std::string(text) + "'");
        }
        v = (v << 1) | static_cast<uint64_t>(c == '1');
    }
    return BitString(text.size(), v);
}

BitString BitString::with_bit(size_t q, bool b) const {
    uint64_t mask = uint64_t{1} << (num_bits_ - 1 - q);
    return BitString(num_bits_, b ? (value_ | mask) : (value_ & ~mask));
}

size_t BitString::weight() const {
    return static_cast<size_t>(__builtin_popcountll(value_));
}

bool BitString::dot(const BitString &other) const {
    return parity(value_ & other.value_);
}

BitString BitString::operator^(const BitString &other) const {
    if (num_bits_ != other.num_bits_) {
        throw std::invalid_argument("xor of bit strings with different lengths");
    }
    return BitString(num_bits_, value_ ^ other.value_);
}

std::strong_ordering BitString::operator<=>(const BitString &other) const {
    if (auto c = num_bits_ <=> other.num_bits_; c != 0) {
        return c;
    }
    return value_ <=> other.value_;
}

std::string BitString::str() const {
    std::string out(num_bits_, '0');
    for (size_t q = 0; q < num_bits_; q++) {
        if (bit(q)) {
            out[q] = '1';
        }
    }
    return out;
}

}  // namespace biaspres
