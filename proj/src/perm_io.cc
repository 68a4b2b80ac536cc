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

#include <fstream>
#include <optional>

#include "biaspres/matrix_io.h"

namespace biaspres {

PermutationWithPhases read_permutation(std::istream &in) {
    auto lines = meaningful_lines(in);
    std::optional<size_t> n;
    size_t first = 0;
    if (!lines.empty()) {
        auto toks = split_ws(lines[0].text);
        if (toks.size() == 2 && toks[0] == "n") {
            try {
                n = std::stoul(toks[1]);
            } catch (const std::exception &) {
                throw ParseError(lines[0].number, "bad qubit count '" + toks[1] + "'");
            }
            if (*n > BitString::MAX_BITS || *n > 24) {
                throw ParseError(lines[0].number, "qubit count too large for a permutation table");
            }
            first = 1;
        }
    }

    struct Entry {
        size_t line;
        BitString s, t;
        double phase;
    };
    std::vector<Entry> entries;
    for (size_t k = first; k < lines.size(); k++) {
        const auto &src = lines[k];
        auto toks = split_ws(src.text);
        if (toks.size() != 4 || toks[1] != "->" || toks[3].rfind("phase=", 0) != 0) {
            throw ParseError(src.number, "expected '<s-bits> -> <t-bits> phase=<radians>'");
        }
        try {
            BitString s = BitString::parse(toks[0]);
            BitString t = BitString::parse(toks[2]);
            if (!n) {
                n = s.size();
            }
            if (s.size() != *n || t.size() != *n) {
                throw std::invalid_argument("bit strings must have length " + std::to_string(*n));
            }
            entries.push_back({src.number, s, t, parse_real(toks[3].substr(6))});
        } catch (const std::invalid_argument &e) {
            throw ParseError(src.number, e.what());
        }
    }
    if (!n) {
        throw ParseError(0, "empty permutation file");
    }

    size_t d = size_t{1} << *n;
    std::vector<uint64_t> targets(d);
    std::vector<double> phases(d, 0.0);
    std::vector<bool> listed(d, false);
    for (size_t s = 0; s < d; s++) {
        targets[s] = s;
    }
    for (const auto &e : entries) {
        if (listed[e.s.value()]) {
            throw ParseError(e.line, "duplicate mapping for " + e.s.str());
        }
        listed[e.s.value()] = true;
        targets[e.s.value()] = e.t.value();
        phases[e.s.value()] = e.phase;
    }
    try {
        return PermutationWithPhases(*n, std::move(targets), std::move(phases));
    } catch (const std::invalid_argument &e) {
        throw ParseError(0, e.what());
    }
}

void write_permutation(std::ostream &out, const PermutationWithPhases &p) {
    out << "n " << p.num_qubits() << "\n";
    for (size_t s = 0; s < p.dim(); s++) {
        out << BitString(p.num_qubits(), s).str() << " -> " << BitString(p.num_qubits(), p.target(s)).str()
            << " phase=" << format_real(p.phase(s)) << "\n";
    }
}

PermutationWithPhases read_permutation_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_permutation(in);
}

void write_permutation_file(const std::string &path, const PermutationWithPhases &p) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    write_permutation(out, p);
}

}  // namespace biaspres
