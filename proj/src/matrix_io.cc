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

#include "biaspres/matrix_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace biaspres {

ParseError::ParseError(size_t line, const std::string &message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message), line_(line) {
}

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_real(std::string_view token) {
    double x = 0;
    const char *begin = token.data();
    const char *end = begin + token.size();
    if (!token.empty() && token.front() == '+') {
        begin++;
    }
    auto [ptr, ec] = std::from_chars(begin, end, x);
    if (ec != std::errc() || ptr != end || begin == end) {
        throw std::invalid_argument("not a real number: '" + std::string(token) + "'");
    }
    return x;
}

std::string format_complex(complex z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

complex parse_complex(std::string_view token) {
    if (token.empty()) {
        throw std::invalid_argument("empty complex token");
    }
    if (token.back() != 'i') {
        return {parse_real(token), 0.0};
    }
    std::string_view body = token.substr(0, token.size() - 1);
    // The imaginary part starts at the last sign that is not an exponent sign.
    size_t split = std::string_view::npos;
    for (size_t k = body.size(); k-- > 1;) {
        char c = body[k];
        if ((c == '+' || c == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string_view::npos) {
        // Pure imaginary, e.g. "-2.5i".
        return {0.0, parse_real(body)};
    }
    return {parse_real(body.substr(0, split)), parse_real(body.substr(split))};
}

std::vector<std::string> split_ws(std::string_view line) {
    std::vector<std::string> out;
    std::istringstream ss{std::string(line)};
    std::string tok;
    while (ss >> tok) {
        out.push_back(tok);
    }
    return out;
}

std::vector<SourceLine> meaningful_lines(std::istream &in) {
    std::vector<SourceLine> out;
    std::string line;
    size_t number = 0;
    while (std::getline(in, line)) {
        number++;
        if (size_t hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.find_first_not_of(" \t") == std::string::npos) {
            continue;
        }
        out.push_back({number, line});
    }
    return out;
}

Matrix read_matrix(std::istream &in) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) {
        throw ParseError(0, "empty matrix file");
    }
    auto header = split_ws(lines[0].text);
    if (header.size() != 2 || header[0] != "n") {
        throw ParseError(lines[0].number, "expected header 'n <qubits>'");
    }
    size_t n = 0;
    try {
        n = std::stoul(header[1]);
    } catch (const std::exception &) {
        throw ParseError(lines[0].number, "bad qubit count '" + header[1] + "'");
    }
    if (n > DEFAULT_MAX_DENSE_QUBITS) {
        throw ParseError(lines[0].number, std::to_string(n) + " qubits exceeds the dense cap");
    }
    size_t dim = size_t{1} << n;
    if (lines.size() != dim + 1) {
        throw ParseError(lines.back().number,
                         "expected " + std::to_string(dim) + " matrix rows, found " + std::to_string(lines.size() - 1));
    }
    Matrix m(dim, dim);
    for (size_t r = 0; r < dim; r++) {
        const SourceLine &src = lines[r + 1];
        auto toks = split_ws(src.text);
        if (toks.size() != dim) {
            throw ParseError(src.number, "expected " + std::to_string(dim) + " entries, found " +
                                             std::to_string(toks.size()));
        }
        for (size_t c = 0; c < dim; c++) {
            try {
                m(r, c) = parse_complex(toks[c]);
            } catch (const std::invalid_argument &e) {
                throw ParseError(src.number, e.what());
            }
        }
    }
    return m;
}

Unitary read_unitary(std::istream &in, double tol) {
    Matrix m = read_matrix(in);
    try {
        return Unitary(std::move(m), tol);
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

void write_matrix(std::ostream &out, const Matrix &m) {
    out << "n " << qubits_for_dim(static_cast<size_t>(m.rows())) << "\n";
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            if (c) {
                out << ' ';
            }
            out << format_complex(m(r, c));
        }
        out << "\n";
    }
}

Unitary read_unitary_file(const std::string &path, double tol) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_unitary(in, tol);
}

void write_matrix_file(const std::string &path, const Matrix &m) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    write_matrix(out, m);
}

}  // namespace biaspres
