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

#include <fstream>
#include <stdexcept>

#include "biaspres/matrix_io.h"

namespace biaspres {

std::vector<size_t> row_reduce(std::vector<BitString> &rows) {
    std::vector<size_t> pivots;
    if (rows.empty()) {
        return pivots;
    }
    size_t n = rows[0].size();
    size_t next = 0;
    for (size_t col = 0; col < n && next < rows.size(); col++) {
        size_t found = next;
        while (found < rows.size() && !rows[found].bit(col)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != next && rows[r].bit(col)) {
                rows[r] = rows[r] ^ rows[next];
            }
        }
        pivots.push_back(col);
        next++;
    }
    rows.resize(next);
    return pivots;
}

BinaryCode::BinaryCode(size_t length, std::vector<BitString> rows) : length_(length) {
    for (const auto &r : rows) {
        if (r.size() != length) {
            throw std::invalid_argument("code row " + r.str() + " does not have length " + std::to_string(length));
        }
    }
    size_t given = rows.size();
    pivots_ = row_reduce(rows);
    if (rows.size() != given) {
        throw std::invalid_argument("generator rows are linearly dependent (rank " + std::to_string(rows.size()) +
                                    " < " + std::to_string(given) + ")");
    }
    generator_ = std::move(rows);
}

BinaryCode BinaryCode::from_strings(const std::vector<std::string> &rows) {
    if (rows.empty()) {
        throw std::invalid_argument("from_strings needs at least one row to infer the length");
    }
    std::vector<BitString> parsed;
    for (const auto &r : rows) {
        parsed.push_back(BitString::parse(r));
    }
    size_t n = parsed[0].size();
    return BinaryCode(n, std::move(parsed));
}

BitString BinaryCode::reduce(const BitString &word) const {
    BitString w = word;
    for (size_t i = 0; i < generator_.size(); i++) {
        if (w.bit(pivots_[i])) {
            w = w ^ generator_[i];
        }
    }
    return w;
}

bool BinaryCode::contains(const BitString &word) const {
    return reduce(word).value() == 0;
}

bool BinaryCode::contains(const BinaryCode &other) const {
    if (other.length_ != length_) {
        return false;
    }
    for (const auto &r : other.generator_) {
        if (!contains(r)) {
            return false;
        }
    }
    return true;
}

BitString BinaryCode::encode(const BitString &message) const {
    if (message.size() != dimension()) {
        throw std::invalid_argument("message length differs from code dimension");
    }
    BitString out = BitString::zeros(length_);
    for (size_t i = 0; i < generator_.size(); i++) {
        if (message.bit(i)) {
            out = out ^ generator_[i];
        }
    }
    return out;
}

std::vector<BitString> BinaryCode::codewords() const {
    std::vector<BitString> out;
    size_t count = size_t{1} << dimension();
    out.reserve(count);
    for (uint64_t m = 0; m < count; m++) {
        out.push_back(encode(BitString(dimension(), m)));
    }
    return out;
}

BinaryCode read_code(std::istream &in) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) {
        throw ParseError(0, "empty code file");
    }
    auto header = split_ws(lines[0].text);
    if (header.size() != 4 || header[0] != "n" || header[2] != "k") {
        throw ParseError(lines[0].number, "expected header 'n <len> k <dim>'");
    }
    size_t n = 0;
    size_t k = 0;
    try {
        n = std::stoul(header[1]);
        k = std::stoul(header[3]);
    } catch (const std::exception &) {
        throw ParseError(lines[0].number, "bad length or dimension");
    }
    if (n == 0 || n > BitString::MAX_BITS) {
        throw ParseError(lines[0].number, "code length must be in [1, 63]");
    }
    if (lines.size() != k + 1) {
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(k) + " rows, found " + std::to_string(lines.size() - 1));
    }
    std::vector<BitString> rows;
    for (size_t i = 1; i < lines.size(); i++) {
        auto toks = split_ws(lines[i].text);
        try {
            if (toks.size() != 1) {
                throw std::invalid_argument("expected a single row of bits");
            }
            BitString r = BitString::parse(toks[0]);
            if (r.size() != n) {
                throw std::invalid_argument("row has length " + std::to_string(r.size()) + ", expected " +
                                            std::to_string(n));
            }
            rows.push_back(r);
        } catch (const std::invalid_argument &e) {
            throw ParseError(lines[i].number, e.what());
        }
    }
    try {
        return BinaryCode(n, std::move(rows));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

void write_code(std::ostream &out, const BinaryCode &code) {
    out << "n " << code.length() << " k " << code.dimension() << "\n";
    for (const auto &r : code.generator()) {
        out << r.str() << "\n";
    }
}

BinaryCode read_code_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_code(in);
}

void write_code_file(const std::string &path, const BinaryCode &code) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    write_code(out, code);
}

}  // namespace biaspres
