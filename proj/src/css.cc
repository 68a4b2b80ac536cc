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

#include "biaspres/css.h"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include "biaspres/matrix_io.h"

namespace biaspres {

namespace {
constexpr size_t MAX_PHYSICAL_QUBITS = 20;
}

GenericEncoding::GenericEncoding(std::vector<StateVector> basis_states, double tol)
    : basis_(std::move(basis_states)), tol_(tol) {
    if (basis_.empty()) {
        throw std::invalid_argument("encoding has no basis states");
    }
    num_logical_ = qubits_for_dim(basis_.size());
    num_physical_ = basis_[0].num_qubits();
    for (size_t x = 0; x < basis_.size(); x++) {
        if (basis_[x].num_qubits() != num_physical_) {
            throw std::invalid_argument("basis states live on different numbers of qubits");
        }
        for (size_t y = 0; y <= x; y++) {
            complex ip = basis_[y].amplitudes().dot(basis_[x].amplitudes());
            double expected = x == y ? 1.0 : 0.0;
            if (std::abs(ip - expected) > tol) {
                throw std::invalid_argument("basis states " + std::to_string(y) + " and " + std::to_string(x) +
                                            " are not orthonormal");
            }
        }
    }
}

CssEncoding::CssEncoding(BinaryCode c1, BinaryCode c2, std::vector<BitString> transversal)
    : c1_(std::move(c1)), c2_(std::move(c2)), transversal_(std::move(transversal)) {
    if (c1_.length() > MAX_PHYSICAL_QUBITS) {
        throw CodeError("code length exceeds " + std::to_string(MAX_PHYSICAL_QUBITS));
    }
    for (const auto &b : transversal_) {
        if (b.size() != c1_.length() || !c2_.contains(b)) {
            throw CodeError("transversal row " + b.str() + " is not a codeword of C2");
        }
    }
    c1_words_ = c1_.codewords();
}

BitString CssEncoding::offset(const BitString &x) const {
    if (x.size() != num_logical()) {
        throw std::invalid_argument("logical string has the wrong length");
    }
    BitString out = BitString::zeros(num_physical());
    for (size_t i = 0; i < transversal_.size(); i++) {
        if (x.bit(i)) {
            out = out ^ transversal_[i];
        }
    }
    return out;
}

std::vector<BitString> CssEncoding::basis_support(const BitString &x) const {
    BitString base = offset(x);
    std::vector<BitString> out;
    out.reserve(c1_words_.size());
    for (const auto &y : c1_words_) {
        out.push_back(base ^ y);
    }
    std::sort(out.begin(), out.end());
    return out;
}

StateVector CssEncoding::basis_state(const BitString &x) const {
    Vector v = Vector::Zero(Eigen::Index{1} << num_physical());
    double amp = 1.0 / std::sqrt(static_cast<double>(coherence_rank()));
    for (const auto &s : basis_support(x)) {
        v(static_cast<Eigen::Index>(s.value())) = amp;
    }
    return StateVector(std::move(v));
}

GenericEncoding CssEncoding::to_generic(double tol) const {
    std::vector<StateVector> states;
    for (uint64_t x = 0; x < (uint64_t{1} << num_logical()); x++) {
        states.push_back(basis_state(BitString(num_logical(), x)));
    }
    return GenericEncoding(std::move(states), tol);
}

CssEncoding build_css(const BinaryCode &c1, const BinaryCode &c2) {
    if (c1.length() != c2.length()) {
        throw CodeError("C1 and C2 have different lengths");
    }
    if (!c2.contains(c1)) {
        throw CodeError("C1 is not a subcode of C2");
    }
    if (c2.dimension() == c1.dimension()) {
        throw CodeError("degenerate code: C1 = C2 encodes no logical qubits");
    }
    std::vector<BitString> extra;
    for (const auto &row : c2.generator()) {
        BitString r = c1.reduce(row);
        if (r.value() != 0) {
            extra.push_back(r);
        }
    }
    row_reduce(extra);
    if (extra.size() != c2.dimension() - c1.dimension()) {
        throw CodeError("rank deficiency completing C1 to C2");
    }
    return CssEncoding(c1, c2, std::move(extra));
}

EquicoherenceReport check_equicoherent(const GenericEncoding &e) {
    EquicoherenceReport out;
    const size_t k = e.num_logical();
    const auto &basis = e.basis_states();
    std::vector<size_t> ranks;
    for (const auto &b : basis) {
        ranks.push_back(coherence_rank(b, e.tol()));
    }
    for (size_t x = 1; x < basis.size(); x++) {
        if (ranks[x] != ranks[0]) {
            out.failed_condition = 1;
            out.witness = {BitString(k, 0), BitString(k, x)};
            out.violation = "coherence ranks differ: " + std::to_string(ranks[0]) + " vs " + std::to_string(ranks[x]);
            return out;
        }
    }
    out.rank = ranks[0];
    std::unordered_map<uint64_t, uint64_t> owner;
    for (size_t x = 0; x < basis.size(); x++) {
        std::vector<std::string> overlap;
        std::optional<uint64_t> other;
        for (const auto &s : support_set(basis[x], e.tol())) {
            auto [it, inserted] = owner.emplace(s.value(), x);
            if (!inserted) {
                other = other.value_or(it->second);
                if (it->second == *other) {
                    overlap.push_back(s.str());
                }
            }
        }
        if (other) {
            out.failed_condition = 2;
            out.witness = {BitString(k, *other), BitString(k, x)};
            std::string joined;
            for (const auto &o : overlap) {
                joined += (joined.empty() ? "" : ", ") + o;
            }
            out.violation = "supports overlap: {" + joined + "}";
            return out;
        }
    }
    out.ok = true;
    return out;
}

StateVector encode(const GenericEncoding &e, const StateVector &psi) {
    if (psi.dim() != e.basis_states().size()) {
        throw std::invalid_argument("encode: logical state has the wrong dimension");
    }
    Vector out = Vector::Zero(Eigen::Index{1} << e.num_physical());
    for (size_t x = 0; x < psi.dim(); x++) {
        if (psi[x] != complex{0.0}) {
            out += psi[x] * e.basis_states()[x].amplitudes();
        }
    }
    return StateVector(std::move(out));
}

StateVector encode(const CssEncoding &e, const StateVector &psi) {
    if (psi.dim() != (size_t{1} << e.num_logical())) {
        throw std::invalid_argument("encode: logical state has the wrong dimension");
    }
    Vector out = Vector::Zero(Eigen::Index{1} << e.num_physical());
    double amp = 1.0 / std::sqrt(static_cast<double>(e.coherence_rank()));
    for (size_t x = 0; x < psi.dim(); x++) {
        if (psi[x] == complex{0.0}) {
            continue;
        }
        for (const auto &s : e.basis_support(BitString(e.num_logical(), x))) {
            out(static_cast<Eigen::Index>(s.value())) += amp * psi[x];
        }
    }
    return StateVector(std::move(out));
}

namespace {
StateVector decode_with(const std::vector<StateVector> &basis, const StateVector &psi_l, double tol) {
    if (basis.empty() || psi_l.dim() != basis[0].dim()) {
        throw std::invalid_argument("decode: physical state has the wrong dimension");
    }
    Vector coeffs(static_cast<Eigen::Index>(basis.size()));
    Vector residual = psi_l.amplitudes();
    for (size_t x = 0; x < basis.size(); x++) {
        complex c = basis[x].amplitudes().dot(psi_l.amplitudes());
        coeffs(static_cast<Eigen::Index>(x)) = c;
        residual -= c * basis[x].amplitudes();
    }
    double r = residual.norm();
    if (r > tol) {
        throw NotInCodespaceError("state is not in the codespace (residual norm " + format_real(r) + ")");
    }
    return StateVector(std::move(coeffs));
}
}  // namespace

StateVector decode(const GenericEncoding &e, const StateVector &psi_l) {
    return decode_with(e.basis_states(), psi_l, e.tol());
}

StateVector decode(const CssEncoding &e, const StateVector &psi_l, double tol) {
    return decode_with(e.to_generic(tol).basis_states(), psi_l, tol);
}

bool coherence_scaling_check(const CssEncoding &e, const StateVector &psi, double tol) {
    return coherence_rank(encode(e, psi), tol) == e.coherence_rank() * coherence_rank(psi, tol);
}

bool coherence_scaling_check(const CssEncoding &e, const StateVector &psi, const StateVector &phi, double tol) {
    bool logical_equal = coherence_rank(psi, tol) == coherence_rank(phi, tol);
    bool physical_equal = coherence_rank(encode(e, psi), tol) == coherence_rank(encode(e, phi), tol);
    return logical_equal == physical_equal;
}

PermutationWithPhases lift_logical(const CssEncoding &e, const PermutationWithPhases &g) {
    const size_t k = e.num_logical();
    const size_t n = e.num_physical();
    if (g.num_qubits() != k) {
        throw std::invalid_argument("logical gate acts on " + std::to_string(g.num_qubits()) + " qubits, code has " +
                                    std::to_string(k));
    }
    size_t d = size_t{1} << n;
    std::vector<uint64_t> targets(d);
    std::vector<double> phases(d, 0.0);
    for (uint64_t s = 0; s < d; s++) {
        targets[s] = s;
    }
    auto c1_words = e.c1().codewords();
    for (uint64_t s = 0; s < g.dim(); s++) {
        BitString from = e.offset(BitString(k, s));
        BitString to = e.offset(BitString(k, g.target(s)));
        for (const auto &y : c1_words) {
            targets[(from ^ y).value()] = (to ^ y).value();
            phases[(from ^ y).value()] = g.phase(s);
        }
    }
    return PermutationWithPhases(n, std::move(targets), std::move(phases));
}

PermutationWithPhases restrict_physical(const CssEncoding &e, const Unitary &g_phys) {
    const size_t k = e.num_logical();
    if (g_phys.num_qubits() != e.num_physical()) {
        throw std::invalid_argument("physical gate has the wrong number of qubits");
    }
    BpVerdict verdict = check_permutation(g_phys);
    if (!verdict.is_bp) {
        throw NotBiasPreservingError("physical gate is not bias-preserving: " + verdict.witness.value_or(""));
    }
    GenericEncoding generic = e.to_generic(g_phys.tol());
    size_t dk = size_t{1} << k;
    std::vector<uint64_t> targets(dk);
    std::vector<double> phases(dk);
    for (uint64_t s = 0; s < dk; s++) {
        StateVector image = g_phys * generic.basis_states()[s];
        StateVector logical = StateVector::zero(k);
        try {
            logical = decode(generic, image);
        } catch (const NotInCodespaceError &) {
            throw NotLogicalOperatorError("physical gate maps logical " + BitString(k, s).str() +
                                          " out of the codespace");
        }
        auto support = support_set(logical, g_phys.tol());
        if (support.size() != 1) {
            throw NotLogicalOperatorError("image of logical " + BitString(k, s).str() +
                                          " is not a single logical basis state");
        }
        targets[s] = support[0].value();
        phases[s] = std::arg(logical[support[0].value()]);
    }
    try {
        return PermutationWithPhases(k, std::move(targets), std::move(phases));
    } catch (const std::invalid_argument &ex) {
        throw NotLogicalOperatorError(std::string("induced logical map is not a bijection: ") + ex.what());
    }
}

std::optional<Obstruction> obstruction_check(const GenericEncoding &e, const BitString &s, const BitString &t) {
    if (s == t) {
        throw std::invalid_argument("obstruction_check needs distinct logical strings");
    }
    size_t rs = coherence_rank(e.basis_state(s), e.tol());
    size_t rt = coherence_rank(e.basis_state(t), e.tol());
    if (rs != rt) {
        return Obstruction{rs, rt};
    }
    return std::nullopt;
}

GenericEncoding read_encoding(std::istream &in, double tol) {
    auto lines = meaningful_lines(in);
    if (lines.empty()) {
        throw ParseError(0, "empty encoding file");
    }
    auto header = split_ws(lines[0].text);
    if (header.size() != 4 || header[0] != "n" || header[2] != "k") {
        throw ParseError(lines[0].number, "expected header 'n <physical> k <logical>'");
    }
    size_t n = 0;
    size_t k = 0;
    try {
        n = std::stoul(header[1]);
        k = std::stoul(header[3]);
    } catch (const std::exception &) {
        throw ParseError(lines[0].number, "bad qubit counts");
    }
    if (n > MAX_PHYSICAL_QUBITS || k > n) {
        throw ParseError(lines[0].number, "unsupported qubit counts");
    }
    size_t rows = size_t{1} << k;
    size_t cols = size_t{1} << n;
    if (lines.size() != rows + 1) {
        throw ParseError(lines.back().number, "expected " + std::to_string(rows) + " basis states");
    }
    std::vector<StateVector> basis;
    for (size_t x = 0; x < rows; x++) {
        const auto &src = lines[x + 1];
        auto toks = split_ws(src.text);
        if (toks.size() != cols) {
            throw ParseError(src.number, "expected " + std::to_string(cols) + " amplitudes");
        }
        Vector v(static_cast<Eigen::Index>(cols));
        for (size_t c = 0; c < cols; c++) {
            try {
                v(static_cast<Eigen::Index>(c)) = parse_complex(toks[c]);
            } catch (const std::invalid_argument &ex) {
                throw ParseError(src.number, ex.what());
            }
        }
        basis.emplace_back(std::move(v));
    }
    try {
        return GenericEncoding(std::move(basis), tol);
    } catch (const std::invalid_argument &ex) {
        throw ParseError(0, ex.what());
    }
}

void write_encoding(std::ostream &out, const GenericEncoding &e) {
    out << "n " << e.num_physical() << " k " << e.num_logical() << "\n";
    for (const auto &b : e.basis_states()) {
        for (size_t s = 0; s < b.dim(); s++) {
            out << (s ? " " : "") << format_complex(b[s]);
        }
        out << "\n";
    }
}

GenericEncoding read_encoding_file(const std::string &path, double tol) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open '" + path + "'");
    }
    return read_encoding(in, tol);
}

}  // namespace biaspres
