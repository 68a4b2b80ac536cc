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

#include "biaspres/cli.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "biaspres/bp_verify.h"
#include "biaspres/css.h"
#include "biaspres/distance.h"
#include "biaspres/gate_sequence.h"
#include "biaspres/matrix_io.h"
#include "biaspres/pauli_zx.h"
#include "biaspres/perm_io.h"
#include "biaspres/synth.h"

namespace biaspres {

namespace {

using json = nlohmann::json;

/// Negative outcome that should be reported with exit status 1.
struct NegativeResult : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    double tol = DEFAULT_TOL;
    double eps = 1e-3;
    double theta = DEFAULT_THETA;
    bool json = false;
    bool exhaustive_normalizer = false;
    bool up_to_phase = false;
    bool full = false;
    std::string method = "all";
    std::string matrix, perm, circuit, a, b, out;
    std::string c1, c2, encoding;
    std::string out_c1, out_c2, out_encoding, out_matrix;
    std::vector<std::string> obstruction;
};

json perm_json(const PermutationWithPhases &p) {
    json rows = json::array();
    for (size_t s = 0; s < p.dim(); s++) {
        rows.push_back({{"s", BitString(p.num_qubits(), s).str()},
                        {"t", BitString(p.num_qubits(), p.target(s)).str()},
                        {"phase", p.phase(s)}});
    }
    return rows;
}

/// Writes `body` to `path`, or to `out` when path is empty.
void emit(const std::string &path, std::ostream &out, const std::function<void(std::ostream &)> &body) {
    if (path.empty()) {
        body(out);
        return;
    }
    std::ofstream f(path);
    if (!f) {
        throw std::invalid_argument("cannot write '" + path + "'");
    }
    body(f);
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

int cmd_check(const Options &o, std::ostream &out) {
    Unitary g = read_unitary_file(o.matrix, o.tol);
    bool want_perm = o.method == "all" || o.method == "permutation";
    bool want_zx = o.method == "all" || o.method == "zx";
    bool want_norm = o.method == "all" || o.method == "normalizer";

    BpVerdict perm = check_permutation(g);
    std::optional<ZxCheck> zx;
    std::optional<NormalizerCheck> norm;
    if (want_zx) {
        zx = check_zx_detailed(g);
    }
    if (want_norm) {
        norm = check_normalizer_detailed(g, o.exhaustive_normalizer);
    }

    bool is_bp = perm.is_bp;
    std::string witness = perm.witness.value_or("");
    if (!want_perm && want_zx) {
        is_bp = zx->ok;
        if (!is_bp) {
            witness = zx->non_orthogonal ? "blocks v=" + zx->non_orthogonal->first.str() +
                                               " w=" + zx->non_orthogonal->second.str() + " are not orthogonal"
                                         : "blocks are not complete";
        }
    } else if (!want_perm && want_norm) {
        is_bp = norm->ok;
        if (!is_bp) {
            witness = "G Z_" + norm->violating->str() + " G^dag is not Z-type";
        }
    }
    bool agree = (!zx || zx->ok == perm.is_bp) && (!norm || norm->ok == perm.is_bp);

    BpVerdict shown{is_bp, is_bp ? perm.canonical : std::nullopt,
                    is_bp ? std::nullopt : std::optional<std::string>(witness)};
    if (o.json) {
        json j{{"bp", is_bp}, {"method", o.method}};
        if (is_bp && shown.canonical) {
            j["perm"] = perm_json(*shown.canonical);
        } else {
            j["witness"] = witness;
        }
        if (o.method == "all") {
            j["checks"] = {{"permutation", perm.is_bp}, {"zx", zx->ok}, {"normalizer", norm->ok}};
            j["agree"] = agree;
        }
        out << j.dump(2) << "\n";
    } else {
        render_verdict(out, shown);
        if (o.method == "all") {
            out << "CHECKS permutation=" << yes_no(perm.is_bp) << " zx=" << yes_no(zx->ok)
                << " normalizer=" << yes_no(norm->ok) << "\n";
        }
    }
    if (!agree) {
        throw std::logic_error("verifiers disagree on this matrix");
    }
    return is_bp ? EXIT_AFFIRMATIVE : EXIT_NEGATIVE;
}

int cmd_decompose(const Options &o, std::ostream &out) {
    Unitary g = read_unitary_file(o.matrix, o.tol);
    auto d = zx_decompose(g);
    if (o.json) {
        json rows = json::array();
        for (const auto &[key, a] : d.coeffs()) {
            rows.push_back({{"u", key.second.str()}, {"v", key.first.str()}, {"re", a.real()}, {"im", a.imag()}});
        }
        std::sort(rows.begin(), rows.end(), [](const json &x, const json &y) {
            return std::pair(x["u"].get<std::string>(), x["v"].get<std::string>()) <
                   std::pair(y["u"].get<std::string>(), y["v"].get<std::string>());
        });
        out << json{{"n", d.num_qubits()}, {"coefficients", rows}}.dump(2) << "\n";
        if (!o.out.empty()) {
            emit(o.out, out, [&](std::ostream &f) { write_zx(f, d); });
        }
        return EXIT_AFFIRMATIVE;
    }
    emit(o.out, out, [&](std::ostream &f) { write_zx(f, d); });
    return EXIT_AFFIRMATIVE;
}

int cmd_distance(const Options &o, std::ostream &out) {
    Unitary a = read_unitary_file(o.a, o.tol);
    Unitary b = read_unitary_file(o.b, o.tol);
    if (a.dim() != b.dim()) {
        throw std::invalid_argument("matrices have different dimensions");
    }
    double e = o.up_to_phase ? worst_case_error_up_to_phase(a, b) : worst_case_error(a, b);
    if (o.json) {
        out << json{{"error", e}, {"up_to_phase", o.up_to_phase}}.dump(2) << "\n";
    } else {
        out << "E " << format_real(e) << "\n";
    }
    return EXIT_AFFIRMATIVE;
}

/// Reads a bias-preserving gate from --perm or --matrix; a non-BP matrix is a negative result.
PermutationWithPhases load_bp_gate(const Options &o) {
    if (!o.perm.empty()) {
        return read_permutation_file(o.perm);
    }
    Unitary g = read_unitary_file(o.matrix, o.tol);
    BpVerdict v = check_permutation(g);
    if (!v.is_bp) {
        throw NegativeResult("gate is not bias-preserving: " + v.witness.value_or(""));
    }
    return *v.canonical;
}

int cmd_synth(const Options &o, std::ostream &out) {
    PermutationWithPhases g = load_bp_gate(o);
    SynthesisReport r = synthesize(g, o.eps, o.theta);
    if (!o.out.empty()) {
        write_circuit_file(o.out, r.sequence);
    }
    if (o.json) {
        json counts(r.gate_counts);
        json j{{"eps", r.target_eps},
               {"achieved_error", r.achieved_error},
               {"tracked_error", r.tracked_error},
               {"error_budget", r.error_budget},
               {"qubits", r.sequence.num_data()},
               {"ancillas", r.sequence.num_ancillas()},
               {"gate_counts", counts}};
        if (o.out.empty()) {
            std::ostringstream circ;
            write_circuit(circ, r.sequence);
            j["circuit"] = circ.str();
        }
        out << j.dump(2) << "\n";
        return EXIT_AFFIRMATIVE;
    }
    if (o.out.empty()) {
        write_circuit(out, r.sequence);
    }
    out << "# eps " << format_real(r.target_eps) << "\n";
    out << "# achieved_error " << format_real(r.achieved_error) << "\n";
    out << "# tracked_error " << format_real(r.tracked_error) << "\n";
    out << "# error_budget " << format_real(r.error_budget) << "\n";
    out << "# gates";
    for (const auto &[name, count] : r.gate_counts) {
        out << ' ' << name << '=' << count;
    }
    out << "\n";
    return EXIT_AFFIRMATIVE;
}

int cmd_simulate(const Options &o, std::ostream &out) {
    GateSequence seq = read_circuit_file(o.circuit);
    if (seq.num_qubits() > DEFAULT_MAX_DENSE_QUBITS) {
        throw std::invalid_argument("circuit exceeds the dense qubit cap");
    }
    Unitary u = Unitary::identity(0);
    try {
        u = o.full ? simulate(seq) : simulate_data(seq);
    } catch (const AncillaError &e) {
        throw NegativeResult(e.what());
    }
    if (o.json) {
        json rows = json::array();
        for (size_t r = 0; r < u.dim(); r++) {
            json row = json::array();
            for (size_t c = 0; c < u.dim(); c++) {
                row.push_back(format_complex(u(r, c)));
            }
            rows.push_back(row);
        }
        out << json{{"n", u.num_qubits()}, {"matrix", rows}}.dump(2) << "\n";
        if (!o.out.empty()) {
            write_matrix_file(o.out, u.matrix());
        }
        return EXIT_AFFIRMATIVE;
    }
    emit(o.out, out, [&](std::ostream &f) { write_matrix(f, u.matrix()); });
    return EXIT_AFFIRMATIVE;
}

CssEncoding load_css(const Options &o) {
    return build_css(read_code_file(o.c1), read_code_file(o.c2));
}

int cmd_css_build(const Options &o, std::ostream &out) {
    CssEncoding e = load_css(o);
    if (!o.out_c1.empty()) {
        write_code_file(o.out_c1, e.c1());
    }
    if (!o.out_c2.empty()) {
        write_code_file(o.out_c2, e.c2());
    }
    if (!o.out_encoding.empty()) {
        std::ofstream f(o.out_encoding);
        if (!f) {
            throw std::invalid_argument("cannot write '" + o.out_encoding + "'");
        }
        write_encoding(f, e.to_generic(o.tol));
    }
    size_t k = e.num_logical();
    if (o.json) {
        json transversal = json::array();
        for (const auto &b : e.transversal()) {
            transversal.push_back(b.str());
        }
        json supports = json::object();
        for (uint64_t x = 0; x < (uint64_t{1} << k); x++) {
            json strings = json::array();
            for (const auto &s : e.basis_support(BitString(k, x))) {
                strings.push_back(s.str());
            }
            supports[BitString(k, x).str()] = strings;
        }
        out << json{{"n", e.num_physical()}, {"k", k}, {"l", e.coherence_rank()},
                    {"transversal", transversal}, {"supports", supports}}
                   .dump(2)
            << "\n";
        return EXIT_AFFIRMATIVE;
    }
    out << "n " << e.num_physical() << " k " << k << " l " << e.coherence_rank() << "\n";
    for (const auto &b : e.transversal()) {
        out << "TRANSVERSAL " << b.str() << "\n";
    }
    for (uint64_t x = 0; x < (uint64_t{1} << k); x++) {
        out << "SUPPORT " << BitString(k, x).str() << ":";
        for (const auto &s : e.basis_support(BitString(k, x))) {
            out << ' ' << s.str();
        }
        out << "\n";
    }
    return EXIT_AFFIRMATIVE;
}

int cmd_css_check(const Options &o, std::ostream &out) {
    std::optional<GenericEncoding> generic;
    if (!o.encoding.empty()) {
        generic = read_encoding_file(o.encoding, o.tol);
    } else {
        generic = load_css(o).to_generic(o.tol);
    }
    EquicoherenceReport rep = check_equicoherent(*generic);
    std::optional<Obstruction> obstruction;
    if (!o.obstruction.empty()) {
        BitString s = BitString::parse(o.obstruction.at(0));
        BitString t = BitString::parse(o.obstruction.at(1));
        if (s.size() != generic->num_logical() || t.size() != generic->num_logical()) {
            throw std::invalid_argument("obstruction strings must have " + std::to_string(generic->num_logical()) +
                                        " bits");
        }
        obstruction = obstruction_check(*generic, s, t);
    }
    if (o.json) {
        json j{{"equicoherent", rep.ok}, {"failed_condition", rep.failed_condition}};
        if (rep.rank) {
            j["l"] = *rep.rank;
        }
        if (!rep.ok) {
            j["violation"] = rep.violation;
            j["witness"] = {rep.witness->first.str(), rep.witness->second.str()};
        }
        if (!o.obstruction.empty()) {
            j["obstruction"] = obstruction ? json{obstruction->rank_s, obstruction->rank_t} : json(nullptr);
        }
        out << j.dump(2) << "\n";
    } else {
        out << "EQUICOHERENT " << yes_no(rep.ok) << "\n";
        if (rep.rank) {
            out << "l " << *rep.rank << "\n";
        }
        if (!rep.ok) {
            out << "VIOLATION condition=" << rep.failed_condition << " pair=" << rep.witness->first.str() << ","
                << rep.witness->second.str() << " " << rep.violation << "\n";
        }
        if (!o.obstruction.empty()) {
            if (obstruction) {
                out << "OBSTRUCTION ranks=" << obstruction->rank_s << "," << obstruction->rank_t << "\n";
            } else {
                out << "OBSTRUCTION none\n";
            }
        }
    }
    return rep.ok && !obstruction ? EXIT_AFFIRMATIVE : EXIT_NEGATIVE;
}

int cmd_css_lift(const Options &o, std::ostream &out) {
    CssEncoding e = load_css(o);
    PermutationWithPhases g = load_bp_gate(o);
    PermutationWithPhases lifted = lift_logical(e, g);
    if (!o.out_matrix.empty()) {
        write_matrix_file(o.out_matrix, lifted.to_matrix());
    }
    if (o.json) {
        out << json{{"n", lifted.num_qubits()}, {"perm", perm_json(lifted)}}.dump(2) << "\n";
        if (!o.out.empty()) {
            write_permutation_file(o.out, lifted);
        }
        return EXIT_AFFIRMATIVE;
    }
    emit(o.out, out, [&](std::ostream &f) { write_permutation(f, lifted); });
    return EXIT_AFFIRMATIVE;
}

int cmd_css_restrict(const Options &o, std::ostream &out) {
    CssEncoding e = load_css(o);
    Unitary g = !o.perm.empty() ? to_unitary(read_permutation_file(o.perm)).with_tol(o.tol)
                                : read_unitary_file(o.matrix, o.tol);
    std::optional<PermutationWithPhases> logical;
    try {
        logical = restrict_physical(e, g);
    } catch (const NotBiasPreservingError &ex) {
        throw NegativeResult(ex.what());
    } catch (const NotLogicalOperatorError &ex) {
        throw NegativeResult(ex.what());
    }
    if (o.json) {
        out << json{{"k", logical->num_qubits()}, {"perm", perm_json(*logical)}}.dump(2) << "\n";
        if (!o.out.empty()) {
            write_permutation_file(o.out, *logical);
        }
        return EXIT_AFFIRMATIVE;
    }
    emit(o.out, out, [&](std::ostream &f) { write_permutation(f, *logical); });
    return EXIT_AFFIRMATIVE;
}

}  // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Verification and synthesis of Z-bias-preserving gates", "biaspres"};
    app.require_subcommand(1, 1);
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--tol", o.tol, "Numerical tolerance")->check(CLI::NonNegativeNumber);
        sub->add_flag("--json", o.json, "Emit a JSON object instead of text");
    };

    auto *check = app.add_subcommand("check", "Decide bias preservation of a matrix");
    check->add_option("--matrix", o.matrix, "Matrix file")->required();
    check->add_option("--method", o.method, "Verifier to report")
        ->check(CLI::IsMember({"all", "permutation", "zx", "normalizer"}));
    check->add_flag("--exhaustive-normalizer", o.exhaustive_normalizer, "Conjugate every Z string, not just Z_i");
    common(check);

    auto *decompose = app.add_subcommand("decompose-zx", "Print the ZX-decomposition of a matrix");
    decompose->add_option("--matrix", o.matrix, "Matrix file")->required();
    decompose->add_option("--out", o.out, "Output file");
    common(decompose);

    auto *distance = app.add_subcommand("distance", "Worst-case error between two matrices");
    distance->add_option("--a", o.a, "First matrix file")->required();
    distance->add_option("--b", o.b, "Second matrix file")->required();
    distance->add_flag("--up-to-phase", o.up_to_phase, "Minimize over a global phase");
    common(distance);

    auto *synth = app.add_subcommand("synth", "Compile a bias-preserving gate to {X, Rz, CNOT, CCNOT}");
    auto *synth_perm = synth->add_option("--target,--perm", o.perm, "Permutation-with-phases file");
    auto *synth_mat = synth->add_option("--matrix", o.matrix, "Matrix file");
    synth_perm->excludes(synth_mat);
    synth->add_option("--eps", o.eps, "Target worst-case error")->check(CLI::PositiveNumber);
    synth->add_option("--theta", o.theta, "Rz angle in radians");
    synth->add_option("--out", o.out, "Circuit output file");
    common(synth);

    auto *simulate_cmd = app.add_subcommand("simulate", "Simulate a circuit file densely");
    simulate_cmd->add_option("--circuit", o.circuit, "Circuit file")->required();
    simulate_cmd->add_flag("--full", o.full, "Include ancilla qubits instead of restricting to data");
    simulate_cmd->add_option("--out", o.out, "Matrix output file");
    common(simulate_cmd);

    auto code_pair = [&](CLI::App *sub, bool required) {
        auto *c1 = sub->add_option("--c1", o.c1, "Classical code C1 file");
        auto *c2 = sub->add_option("--c2", o.c2, "Classical code C2 file (C1 inside C2)");
        if (required) {
            c1->required();
            c2->required();
        }
        return std::pair{c1, c2};
    };

    auto *css_build = app.add_subcommand("css-build", "Build the standard encoding of a CSS code");
    code_pair(css_build, true);
    css_build->add_option("--out-c1", o.out_c1, "Write C1 in reduced form");
    css_build->add_option("--out-c2", o.out_c2, "Write C2 in reduced form");
    css_build->add_option("--out-encoding", o.out_encoding, "Write the logical basis states");
    common(css_build);

    auto *css_check = app.add_subcommand("css-check", "Check equicoherence of an encoding");
    auto [cc1, cc2] = code_pair(css_check, false);
    auto *enc = css_check->add_option("--encoding", o.encoding, "Generic encoding file");
    enc->excludes(cc1)->excludes(cc2);
    css_check->add_option("--obstruction", o.obstruction, "Logical strings s t to test for a lifting obstruction")
        ->expected(2);
    common(css_check);

    auto *css_lift = app.add_subcommand("css-lift", "Lift a logical bias-preserving gate to physical qubits");
    code_pair(css_lift, true);
    auto *lift_perm = css_lift->add_option("--gate,--perm", o.perm, "Logical permutation-with-phases file");
    auto *lift_mat = css_lift->add_option("--matrix", o.matrix, "Logical matrix file");
    lift_perm->excludes(lift_mat);
    css_lift->add_option("--out", o.out, "Physical permutation output file");
    css_lift->add_option("--out-matrix", o.out_matrix, "Physical matrix output file");
    common(css_lift);

    auto *css_restrict = app.add_subcommand("css-restrict", "Restrict a physical gate to the logical qubits");
    code_pair(css_restrict, true);
    auto *restrict_mat = css_restrict->add_option("--matrix", o.matrix, "Physical matrix file");
    auto *restrict_perm = css_restrict->add_option("--perm", o.perm, "Physical permutation-with-phases file");
    restrict_mat->excludes(restrict_perm);
    css_restrict->add_option("--out", o.out, "Logical permutation output file");
    common(css_restrict);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return EXIT_AFFIRMATIVE;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }

    auto need_one = [](const std::string &a, const std::string &b, const char *what) {
        if (a.empty() && b.empty()) {
            throw std::invalid_argument(std::string("one of ") + what + " is required");
        }
    };

    try {
        if (check->parsed()) {
            return cmd_check(o, out);
        }
        if (decompose->parsed()) {
            return cmd_decompose(o, out);
        }
        if (distance->parsed()) {
            return cmd_distance(o, out);
        }
        if (synth->parsed()) {
            need_one(o.perm, o.matrix, "--target/--matrix");
            return cmd_synth(o, out);
        }
        if (simulate_cmd->parsed()) {
            return cmd_simulate(o, out);
        }
        if (css_build->parsed()) {
            return cmd_css_build(o, out);
        }
        if (css_check->parsed()) {
            if (o.encoding.empty() && (o.c1.empty() || o.c2.empty())) {
                throw std::invalid_argument("css-check needs --c1 and --c2, or --encoding");
            }
            return cmd_css_check(o, out);
        }
        if (css_lift->parsed()) {
            need_one(o.perm, o.matrix, "--gate/--matrix");
            return cmd_css_lift(o, out);
        }
        if (css_restrict->parsed()) {
            need_one(o.perm, o.matrix, "--matrix/--perm");
            return cmd_css_restrict(o, out);
        }
    } catch (const NegativeResult &e) {
        if (o.json) {
            out << json{{"ok", false}, {"reason", e.what()}}.dump(2) << "\n";
        } else {
            out << "NEGATIVE " << e.what() << "\n";
        }
        return EXIT_NEGATIVE;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return EXIT_USAGE;
    }
    return EXIT_USAGE;
}

}  // namespace biaspres
