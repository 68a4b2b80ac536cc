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

#include "biaspres/gate_sequence.h"

#include <cmath>
#include <fstream>
#include <optional>

#include "biaspres/matrix_io.h"

namespace biaspres {

namespace {

constexpr size_t MAX_TRACE_QUBITS = 24;

size_t arity(GateKind kind) {
    switch (kind) {
        case GateKind::X:
        case GateKind::RZ:
            return 1;
        case GateKind::CNOT:
            return 2;
        case GateKind::CCNOT:
            return 3;
    }
    return 0;
}

bool self_inverse(GateKind kind) {
    return kind != GateKind::RZ;
}

/// Action of one gate on basis index x of an n-qubit register: returns the
/// image index and writes the acquired phase.
uint64_t act(const Gate &g, size_t n, double theta, uint64_t x, long double &phase) {
    auto bit = [&](size_t q) { return (x >> (n - 1 - q)) & 1; };
    auto flip = [&](size_t q) { return x ^ (uint64_t{1} << (n - 1 - q)); };
    switch (g.kind) {
        case GateKind::X:
            return flip(g.qubits[0]);
        case GateKind::RZ: {
            long double half = static_cast<long double>(g.reps) * theta / 2;
            phase += bit(g.qubits[0]) ? half : -half;
            return x;
        }
        case GateKind::CNOT:
            return bit(g.qubits[0]) ? flip(g.qubits[1]) : x;
        case GateKind::CCNOT:
            return bit(g.qubits[0]) && bit(g.qubits[1]) ? flip(g.qubits[2]) : x;
    }
    return x;
}

}  // namespace

std::string gate_name(GateKind kind) {
    switch (kind) {
        case GateKind::X:
            return "X";
        case GateKind::RZ:
            return "RZ";
        case GateKind::CNOT:
            return "CNOT";
        case GateKind::CCNOT:
            return "CCNOT";
    }
    return "?";
}

GateSequence::GateSequence(size_t num_data, size_t num_ancillas, double theta)
    : num_data_(num_data), num_ancillas_(num_ancillas), theta_(theta) {
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("theta must be finite");
    }
}

void GateSequence::append(Gate g) {
    if (g.qubits.size() != arity(g.kind)) {
        throw std::invalid_argument(gate_name(g.kind) + " takes " + std::to_string(arity(g.kind)) + " qubits");
    }
    for (size_t i = 0; i < g.qubits.size(); i++) {
        if (g.qubits[i] >= num_qubits()) {
            throw std::invalid_argument("qubit index " + std::to_string(g.qubits[i]) + " out of range");
        }
        for (size_t j = 0; j < i; j++) {
            if (g.qubits[i] == g.qubits[j]) {
                throw std::invalid_argument(gate_name(g.kind) + " qubit indices must be distinct");
            }
        }
    }
    if (g.kind != GateKind::RZ && g.reps != 0) {
        throw std::invalid_argument("only RZ carries a repetition count");
    }
    gates_.push_back(std::move(g));
}

void GateSequence::append_simplified(Gate g) {
    if (!gates_.empty()) {
        Gate &last = gates_.back();
        if (self_inverse(g.kind) && last == g) {
            gates_.pop_back();
            return;
        }
        if (g.kind == GateKind::RZ && last.kind == GateKind::RZ && last.qubits == g.qubits) {
            last.reps += g.reps;
            return;
        }
    }
    if (g.kind == GateKind::RZ && g.reps == 0) {
        return;
    }
    append(std::move(g));
}

void GateSequence::append_all(const GateSequence &other) {
    if (other.theta_ != theta_ || other.num_data_ != num_data_) {
        throw std::invalid_argument("appending a sequence with different theta or data width");
    }
    reserve_ancillas(other.num_ancillas_);
    for (const Gate &g : other.gates_) {
        append(g);
    }
    global_phase_ += other.global_phase_;
}

void GateSequence::reserve_ancillas(size_t count) {
    num_ancillas_ = std::max(num_ancillas_, count);
}

std::map<std::string, uint64_t> GateSequence::counts() const {
    std::map<std::string, uint64_t> out{{"X", 0}, {"RZ", 0}, {"RZ_REPS", 0}, {"CNOT", 0}, {"CCNOT", 0}};
    for (const Gate &g : gates_) {
        out[gate_name(g.kind)]++;
        if (g.kind == GateKind::RZ) {
            out["RZ_REPS"] += g.reps;
        }
    }
    return out;
}

PermutationWithPhases trace(const GateSequence &seq) {
    size_t n = seq.num_qubits();
    if (n > MAX_TRACE_QUBITS) {
        throw std::invalid_argument("sequence too wide to trace");
    }
    size_t d = size_t{1} << n;
    std::vector<uint64_t> targets(d);
    std::vector<double> phases(d);
    for (uint64_t s = 0; s < d; s++) {
        uint64_t x = s;
        long double phase = seq.global_phase();
        for (const Gate &g : seq.gates()) {
            x = act(g, n, seq.theta(), x, phase);
        }
        targets[s] = x;
        phases[s] = static_cast<double>(std::fmod(phase, 2 * 3.14159265358979323846264338327950288L));
    }
    return PermutationWithPhases(n, std::move(targets), std::move(phases));
}

Unitary simulate(const GateSequence &seq) {
    size_t n = seq.num_qubits();
    if (n > DEFAULT_MAX_DENSE_QUBITS) {
        throw std::invalid_argument("sequence exceeds the dense qubit cap");
    }
    size_t d = size_t{1} << n;
    Matrix m = Matrix::Identity(d, d);
    Matrix next(d, d);
    for (const Gate &g : seq.gates()) {
        for (uint64_t x = 0; x < d; x++) {
            long double phase = 0;
            uint64_t y = act(g, n, seq.theta(), x, phase);
            next.row(y) = std::polar(1.0, static_cast<double>(phase)) * m.row(x);
        }
        m.swap(next);
    }
    m *= std::polar(1.0, seq.global_phase());
    return Unitary::trusted(std::move(m));
}

Unitary simulate_data(const GateSequence &seq) {
    Unitary full = simulate(seq);
    size_t shift = seq.num_ancillas();
    size_t dd = size_t{1} << seq.num_data();
    uint64_t anc_mask = (uint64_t{1} << shift) - 1;
    Matrix m(dd, dd);
    for (uint64_t c = 0; c < dd; c++) {
        uint64_t col = c << shift;
        double leak = 0;
        for (uint64_t r = 0; r < full.dim(); r++) {
            if (r & anc_mask) {
                leak += std::norm(full(r, col));
            }
        }
        if (leak > full.tol()) {
            throw AncillaError("ancillas not restored to |0> for data input " + BitString(seq.num_data(), c).str());
        }
        for (uint64_t r = 0; r < dd; r++) {
            m(r, c) = full(r << shift, col);
        }
    }
    return Unitary::trusted(std::move(m));
}

PermutationWithPhases trace_data(const GateSequence &seq) {
    PermutationWithPhases full = trace(seq);
    size_t shift = seq.num_ancillas();
    size_t dd = size_t{1} << seq.num_data();
    uint64_t anc_mask = (uint64_t{1} << shift) - 1;
    std::vector<uint64_t> targets(dd);
    std::vector<double> phases(dd);
    for (uint64_t c = 0; c < dd; c++) {
        uint64_t y = full.target(c << shift);
        if (y & anc_mask) {
            throw AncillaError("ancillas not restored to |0> for data input " + BitString(seq.num_data(), c).str());
        }
        targets[c] = y >> shift;
        phases[c] = full.phase(c << shift);
    }
    return PermutationWithPhases(seq.num_data(), std::move(targets), std::move(phases));
}

GateSequence read_circuit(std::istream &in) {
    auto lines = meaningful_lines(in);
    std::optional<size_t> qubits;
    size_t ancillas = 0;
    std::optional<double> theta;
    double global_phase = 0;
    std::vector<std::pair<size_t, Gate>> gates;

    auto parse_index = [](const std::string &tok) -> size_t {
        size_t pos = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(tok, &pos);
        } catch (const std::exception &) {
            pos = 0;
        }
        if (pos != tok.size() || tok.empty() || tok[0] == '-') {
            throw std::invalid_argument("bad integer '" + tok + "'");
        }
        return v;
    };

    for (const auto &src : lines) {
        auto toks = split_ws(src.text);
        try {
            const std::string &op = toks[0];
            auto want = [&](size_t count) {
                if (toks.size() != count + 1) {
                    throw std::invalid_argument(op + " expects " + std::to_string(count) + " argument(s)");
                }
            };
            if (op == "qubits") {
                want(1);
                qubits = parse_index(toks[1]);
            } else if (op == "ancillas") {
                want(1);
                ancillas = parse_index(toks[1]);
            } else if (op == "theta") {
                want(1);
                theta = parse_real(toks[1]);
            } else if (op == "globalphase") {
                want(1);
                global_phase = parse_real(toks[1]);
            } else if (op == "X") {
                want(1);
                gates.push_back({src.number, Gate::x(parse_index(toks[1]))});
            } else if (op == "RZ") {
                want(2);
                gates.push_back({src.number, Gate::rz(parse_index(toks[1]), parse_index(toks[2]))});
            } else if (op == "CNOT") {
                want(2);
                gates.push_back({src.number, Gate::cnot(parse_index(toks[1]), parse_index(toks[2]))});
            } else if (op == "CCNOT") {
                want(3);
                gates.push_back(
                    {src.number, Gate::ccnot(parse_index(toks[1]), parse_index(toks[2]), parse_index(toks[3]))});
            } else {
                throw std::invalid_argument("unknown instruction '" + op + "'");
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(src.number, e.what());
        }
    }
    if (!qubits) {
        throw ParseError(0, "missing 'qubits' header");
    }
    if (!theta) {
        throw ParseError(0, "missing 'theta' header");
    }
    GateSequence seq(*qubits, ancillas, *theta);
    seq.set_global_phase(global_phase);
    for (auto &[line, g] : gates) {
        try {
            seq.append(std::move(g));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line, e.what());
        }
    }
    return seq;
}

void write_circuit(std::ostream &out, const GateSequence &seq) {
    out << "qubits " << seq.num_data() << "\n";
    out << "ancillas " << seq.num_ancillas() << "\n";
    out << "theta " << format_real(seq.theta()) << "\n";
    out << "globalphase " << format_real(seq.global_phase()) << "\n";
    for (const Gate &g : seq.gates()) {
        out << gate_name(g.kind);
        for (size_t q : g.qubits) {
            out << ' ' << q;
        }
        if (g.kind == GateKind::RZ) {
            out << ' ' << g.reps;
        }
        out << "\n";
    }
}

GateSequence read_circuit_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_circuit(in);
}

void write_circuit_file(const std::string &path, const GateSequence &seq) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot write '" + path + "'");
    }
    write_circuit(out, seq);
}

}  // namespace biaspres
