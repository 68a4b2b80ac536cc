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

#include "biaspres/pauli_zx.h"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "biaspres/matrix_io.h"

namespace biaspres {

void walsh_hadamard(std::vector<complex> &values) {
    size_t d = values.size();
    for (size_t h = 1; h < d; h <<= 1) {
        for (size_t i = 0; i < d; i += h << 1) {
            for (size_t j = i; j < i + h; j++) {
                complex a = values[j];
                complex b = values[j + h];
                values[j] = a + b;
                values[j + h] = a - b;
            }
        }
    }
}

std::vector<complex> ZXBlock::diagonal() const {
    size_t d = size_t{1} << num_qubits;
    std::vector<complex> values(d, 0.0);
    for (const auto &[u, a] : coeffs) {
        values[u.value()] = a;
    }
    walsh_hadamard(values);
    return values;
}

Matrix ZXBlock::to_matrix() const {
    size_t d = size_t{1} << num_qubits;
    Matrix m = Matrix::Zero(d, d);
    if (coeffs.empty()) {
        return m;
    }
    auto beta = diagonal();
    for (size_t r = 0; r < d; r++) {
        m(r, r ^ v.value()) = beta[r];
    }
    return m;
}

Matrix BlockBasisForm::to_matrix(size_t num_qubits) const {
    size_t d = size_t{1} << num_qubits;
    Matrix m = Matrix::Zero(d, d);
    for (const BitString &s : support) {
        m(s.value(), shift(s).value()) = beta.at(s);
    }
    return m;
}

ZXDecomposition::ZXDecomposition(size_t num_qubits, std::map<Key, complex> coeffs, double tol)
    : num_qubits_(num_qubits), coeffs_(std::move(coeffs)), tol_(tol) {
    for (auto it = coeffs_.begin(); it != coeffs_.end();) {
        const auto &[v, u] = it->first;
        if (u.size() != num_qubits_ || v.size() != num_qubits_) {
            throw std::invalid_argument("ZX coefficient key has the wrong number of bits");
        }
        if (std::abs(it->second) <= tol_) {
            it = coeffs_.erase(it);
        } else {
            ++it;
        }
    }
}

complex ZXDecomposition::coeff(const BitString &u, const BitString &v) const {
    auto it = coeffs_.find({v, u});
    return it == coeffs_.end() ? complex{0.0} : it->second;
}

std::vector<BitString> ZXDecomposition::x_parts() const {
    std::vector<BitString> out;
    for (const auto &[key, a] : coeffs_) {
        if (out.empty() || out.back() != key.first) {
            out.push_back(key.first);
        }
    }
    return out;
}

Matrix ZXDecomposition::reconstruct() const {
    size_t d = size_t{1} << num_qubits_;
    Matrix m = Matrix::Zero(d, d);
    for (const BitString &v : x_parts()) {
        m += block(*this, v).to_matrix();
    }
    return m;
}

ZXDecomposition zx_decompose(const Unitary &g) {
    size_t n = g.num_qubits();
    size_t d = g.dim();
    double scale = 1.0 / static_cast<double>(d);
    std::map<ZXDecomposition::Key, complex> coeffs;
    std::vector<complex> f(d);
    for (size_t v = 0; v < d; v++) {
        // alpha_{u,v} = 2^-n sum_t (-1)^{u.t} G[t, t xor v]
        for (size_t t = 0; t < d; t++) {
            f[t] = g(t, t ^ v);
        }
        walsh_hadamard(f);
        for (size_t u = 0; u < d; u++) {
            complex a = f[u] * scale;
            if (std::abs(a) > g.tol()) {
                coeffs.emplace(ZXDecomposition::Key{BitString(n, v), BitString(n, u)}, a);
            }
        }
    }
    return ZXDecomposition(n, std::move(coeffs), g.tol());
}

ZXBlock block(const ZXDecomposition &d, const BitString &v) {
    if (v.size() != d.num_qubits()) {
        throw std::invalid_argument("block: X-part has the wrong number of bits");
    }
    ZXBlock out{d.num_qubits(), v, {}};
    BitString zero = BitString::zeros(d.num_qubits());
    for (auto it = d.coeffs().lower_bound({v, zero}); it != d.coeffs().end() && it->first.first == v; ++it) {
        out.coeffs.emplace(it->first.second, it->second);
    }
    return out;
}

BlockBasisForm block_basis_form(const ZXBlock &b, double tol) {
    BlockBasisForm out{b.v, {}, {}};
    if (b.coeffs.empty()) {
        return out;
    }
    auto beta = b.diagonal();
    for (size_t s = 0; s < beta.size(); s++) {
        if (std::abs(beta[s]) > tol) {
            BitString bs(b.num_qubits, s);
            out.support.push_back(bs);
            out.beta.emplace(bs, beta[s]);
        }
    }
    return out;
}

Matrix block_product_adjoint(const ZXBlock &a, const ZXBlock &b) {
    if (a.num_qubits != b.num_qubits) {
        throw std::invalid_argument("block_product_adjoint: qubit count mismatch");
    }
    return a.to_matrix() * b.to_matrix().adjoint();
}

bool is_z_type(const Unitary &g) {
    auto d = zx_decompose(g);
    BitString zero = BitString::zeros(g.num_qubits());
    for (const auto &[key, a] : d.coeffs()) {
        if (key.first != zero && std::abs(a) > g.tol()) {
            return false;
        }
    }
    return true;
}

void write_zx(std::ostream &out, const ZXDecomposition &d) {
    std::vector<std::tuple<BitString, BitString, complex>> rows;
    for (const auto &[key, a] : d.coeffs()) {
        rows.emplace_back(key.second, key.first, a);
    }
    std::sort(rows.begin(), rows.end(), [](const auto &x, const auto &y) {
        return std::tie(std::get<0>(x), std::get<1>(x)) < std::tie(std::get<0>(y), std::get<1>(y));
    });
    out << "n " << d.num_qubits() << "\n";
    for (const auto &[u, v, a] : rows) {
        out << u.str() << ' ' << v.str() << ' ' << format_real(a.real()) << ' ' << format_real(a.imag()) << "\n";
    }
}

ZXDecomposition read_zx(std::istream &in, double tol) {
    auto lines = meaningful_lines(in);
    size_t first = 0;
    std::optional<size_t> n;
    if (!lines.empty()) {
        auto toks = split_ws(lines[0].text);
        if (toks.size() == 2 && toks[0] == "n") {
            try {
                n = std::stoul(toks[1]);
            } catch (const std::exception &) {
                throw ParseError(lines[0].number, "bad qubit count");
            }
            first = 1;
        }
    }
    std::map<ZXDecomposition::Key, complex> coeffs;
    for (size_t k = first; k < lines.size(); k++) {
        const auto &src = lines[k];
        auto toks = split_ws(src.text);
        if (toks.size() != 4) {
            throw ParseError(src.number, "expected 'u-bits v-bits re im'");
        }
        try {
            BitString u = BitString::parse(toks[0]);
            BitString v = BitString::parse(toks[1]);
            if (!n) {
                n = u.size();
            }
            if (u.size() != *n || v.size() != *n) {
                throw std::invalid_argument("bit strings must have length " + std::to_string(*n));
            }
            complex a{parse_real(toks[2]), parse_real(toks[3])};
            if (!coeffs.emplace(ZXDecomposition::Key{v, u}, a).second) {
                throw std::invalid_argument("duplicate coefficient for " + toks[0] + " " + toks[1]);
            }
        } catch (const std::invalid_argument &e) {
            throw ParseError(src.number, e.what());
        }
    }
    if (!n) {
        throw ParseError(0, "empty decomposition");
    }
    return ZXDecomposition(*n, std::move(coeffs), tol);
}

}  // namespace biaspres
