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

#ifndef BIASPRES_MATRIX_IO_H
#define BIASPRES_MATRIX_IO_H

#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "biaspres/unitary.h"

namespace biaspres {

/// Malformed input file. `line()` is 1-based, or 0 when the problem is not tied to a line.
class ParseError : public std::runtime_error {
   public:
    ParseError(size_t line, const std::string &message);
    size_t line() const { return line_; }

   private:
    size_t line_;
};

/// Formats a complex value as `a+bi` / `a-bi` with 17 significant digits.
std::string format_complex(complex z);
/// Parses the `a{+|-}bi` form written by format_complex. Throws std::invalid_argument.
complex parse_complex(std::string_view token);

/// Formats a real with enough digits to round trip exactly.
std::string format_real(double x);
double parse_real(std::string_view token);

/// Splits `text` into lines, stripping `#` comments and dropping blank lines.
/// Each returned line carries its 1-based line number.
struct SourceLine {
    size_t number;
    std::string text;
};
std::vector<SourceLine> meaningful_lines(std::istream &in);
std::vector<std::string> split_ws(std::string_view line);

/// Matrix text format:
///   n <qubits>
///   2^n rows of 2^n space-separated `a+bi` entries.
/// Parsing does not check unitarity; see read_unitary.
Matrix read_matrix(std::istream &in);
Unitary read_unitary(std::istream &in, double tol = DEFAULT_TOL);
void write_matrix(std::ostream &out, const Matrix &m);

Unitary read_unitary_file(const std::string &path, double tol = DEFAULT_TOL);
void write_matrix_file(const std::string &path, const Matrix &m);

}  // namespace biaspres

#endif
