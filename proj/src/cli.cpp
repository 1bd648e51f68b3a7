#include "farq/cli.hpp"

#include <fstream>
#include <iostream>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "farq/complexcert.hpp"
#include "farq/errors.hpp"
#include "farq/farkas.hpp"
#include "farq/interval.hpp"
#include "farq/oracle.hpp"
#include "farq/verify.hpp"
#include "farq/version.hpp"

// Result document contract:
//   {"body": ..., "engine_version": "...", "result": "...", "verified": bool}
// result        exit  meaning
// certificate     0   multiplier object found (body carries it, verified by
//                     independent re-evaluation, never copied from the engine)
// holds           0   inclusion/membership holds (interval, oracle)
// valid           0   submitted complex certificate checks out
// witness         1   refuting point found
// violation       1   inclusion/membership refuted
// no-solution     1   reconstruction impossible (body names the stratum)
// invalid         1   submitted complex certificate refuted
// inconsistent-stratum 1  premises unsatisfiable on the named strata
// error           2   unreadable/malformed input or misuse
// undecided       3   refinement or search budget exhausted, nothing settled
// Keys are emitted sorted, rationals as canonical "p/q" strings, complex
// scalars as [re, im]; the same input yields byte-identical output.

namespace farq {

namespace {

using nlohmann::json;

struct CliOptions {
    std::uint64_t seed = 0;
    int sides = 8;
    int depth = 10;  // smallest r with 4^-r <= --precision
    int orthant_budget = 12;
    ExecPolicy exec;
};

struct Outcome {
    std::string result;
    json body;
    bool verified = false;
    int code = 0;
};

// ---- input parsing ------------------------------------------------------

[[noreturn]] void bad_input(const std::string& msg) { throw std::invalid_argument(msg); }

const json& field(const json& j, const char* key) {
    const auto it = j.find(key);
    if (it == j.end()) bad_input(std::string("missing field \"") + key + "\"");
    return *it;
}

int int_field(const json& j, const char* key) {
    const json& v = field(j, key);
    if (!v.is_number_integer()) bad_input(std::string("field \"") + key + "\" must be an integer");
    const long long raw = v.get<long long>();
    if (raw < -1000000 || raw > 1000000) bad_input(std::string("field \"") + key + "\" out of range");
    return static_cast<int>(raw);
}

Rat rat_value(const json& v, const char* what) {
    if (v.is_number_integer()) return rat(static_cast<long>(v.get<long long>()));
    if (v.is_string()) return parse_rat(v.get<std::string>());
    bad_input(std::string(what) + ": rationals are \"p/q\" strings or integers");
}

Vec vec_value(const json& v, int len, const char* what) {
    if (!v.is_array() || static_cast<int>(v.size()) != len)
        bad_input(std::string(what) + ": expected an array of " + std::to_string(len) +
                  " rationals");
    Vec out(len);
    for (int i = 0; i < len; ++i) out[i] = rat_value(v[i], what);
    return out;
}

Matrix matrix_value(const json& v, int rows, int cols, const char* what) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows * cols)
        bad_input(std::string(what) + ": expected a flat row-major array of " +
                  std::to_string(rows * cols) + " rationals");
    std::vector<Rat> entries(static_cast<std::size_t>(rows) * cols);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = rat_value(v[i], what);
    return Matrix(rows, cols, std::move(entries));
}

GaussRat gauss_value(const json& v, const char* what) {
    if (!v.is_array() || v.size() != 2)
        bad_input(std::string(what) + ": complex scalars are [re, im] pairs");
    return {rat_value(v[0], what), rat_value(v[1], what)};
}

CMatrix cmatrix_value(const json& v, int rows, int cols, const char* what) {
    if (!v.is_array() || static_cast<int>(v.size()) != rows * cols)
        bad_input(std::string(what) + ": expected a flat row-major array of " +
                  std::to_string(rows * cols) + " complex pairs");
    std::vector<GaussRat> entries(static_cast<std::size_t>(rows) * cols);
    for (std::size_t i = 0; i < entries.size(); ++i) entries[i] = gauss_value(v[i], what);
    return CMatrix(rows, cols, std::move(entries));
}

IntervalOperator interval_value(const json& v, int rows, int cols, const char* what) {
    return {matrix_value(field(v, "lower"), rows, cols, what),
            matrix_value(field(v, "upper"), rows, cols, what)};
}

// ---- output serialization ------------------------------------------------

json rat_json(const Rat& r) { return to_string(r); }

json vec_json(const Vec& v) {
    json out = json::array();
    for (const auto& e : v) out.push_back(rat_json(e));
    return out;
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) out.push_back(rat_json(m.at(i, j)));
    return out;
}

json band_json(const Band& b) {
    json out = json::array();
    for (int i : b.members) out.push_back(i);
    return out;
}

json alphas_json(const std::vector<DiagOrtho>& alphas) {
    json out = json::array();
    for (const auto& a : alphas) out.push_back(vec_json(a.diag));
    return out;
}

json gauss_json(const GaussRat& z) { return json::array({rat_json(z.re), rat_json(z.im)}); }

json cdiag_json(const ComplexDiag& c) {
    json out = json::array();
    for (const auto& z : c.diag) out.push_back(gauss_json(z));
    return out;
}

// ---- per-kind handlers ---------------------------------------------------

Outcome run_dominance(const json& in, const CliOptions& opts) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    HomogeneousInstance inst;
    const json& as = field(in, "a_list");
    if (!as.is_array() || as.empty()) bad_input("a_list: expected a nonempty array of matrices");
    for (const auto& a : as) inst.a_list.push_back(matrix_value(a, m, n, "a_list"));
    inst.b = matrix_value(field(in, "b"), m, n, "b");

    const auto res = decide_dominance(inst, opts.exec);
    if (const auto* cert = std::get_if<DominanceCertificate>(&res)) {
        json body{{"alphas", alphas_json(cert->alphas)}};
        return {"certificate", body, verify_dominance_certificate(inst, *cert), 0};
    }
    const auto& wit = std::get<AlternativeWitness>(res);
    json body{{"x", vec_json(wit.x)},
              {"band", band_json(wit.b)},
              {"band_prime", band_json(wit.b_prime)}};
    return {"witness", body, verify_alternative_witness(inst, wit), 1};
}

Outcome run_inhomogeneous(const json& in, const CliOptions& opts) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    InhomogeneousInstance inst;
    const json& as = field(in, "a_list");
    if (!as.is_array() || as.empty()) bad_input("a_list: expected a nonempty array of matrices");
    for (const auto& a : as) inst.base.a_list.push_back(matrix_value(a, m, n, "a_list"));
    inst.base.b = matrix_value(field(in, "b"), m, n, "b");
    const json& us = field(in, "u_list");
    if (!us.is_array() || us.size() != as.size())
        bad_input("u_list: expected one bound per operator in a_list");
    for (const auto& u : us) inst.u_list.push_back(vec_value(u, m, "u_list"));
    inst.v = vec_value(field(in, "v"), m, "v");

    const auto res = decide_inhomogeneous(inst, opts.exec);
    if (const auto* cert = std::get_if<InhomogeneousCertificate>(&res)) {
        json body{{"alphas", alphas_json(cert->alphas)}};
        return {"certificate", body, verify_inhomogeneous_certificate(inst, *cert), 0};
    }
    if (const auto* wit = std::get_if<InhomogeneousWitness>(&res)) {
        json body{{"x", vec_json(wit->x)}, {"band", band_json(wit->b)}};
        return {"witness", body, verify_inhomogeneous_witness(inst, *wit), 1};
    }
    const auto& inc = std::get<InconsistentStratum>(res);
    json proofs = json::array();
    for (const auto& y : inc.proofs) proofs.push_back(vec_json(y));
    json body{{"members", band_json(inc.where)}, {"proofs", proofs}};
    return {"inconsistent-stratum", body,
            verify_inconsistency(inst.base.a_list, inst.u_list, inc), 1};
}

Outcome run_matrix(const json& in, const CliOptions& opts) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    MatrixInstance inst;
    const json& as = field(in, "a_blocks");
    const json& bs = field(in, "b_blocks");
    if (!as.is_array() || as.empty()) bad_input("a_blocks: expected a nonempty array of matrices");
    if (!bs.is_array() || bs.empty()) bad_input("b_blocks: expected a nonempty array of matrices");
    for (const auto& a : as) inst.a_blocks.push_back(matrix_value(a, m, n, "a_blocks"));
    for (const auto& b : bs) inst.b_blocks.push_back(matrix_value(b, m, n, "b_blocks"));
    const json& us = field(in, "u");
    const json& vs = field(in, "v");
    if (!us.is_array() || us.size() != as.size())
        bad_input("u: expected one point per block of a_blocks");
    if (!vs.is_array() || vs.size() != bs.size())
        bad_input("v: expected one point per block of b_blocks");
    for (const auto& u : us) inst.u.push_back(vec_value(u, m, "u"));
    for (const auto& v : vs) inst.v.push_back(vec_value(v, m, "v"));

    const auto res = decide_matrix_dominance(inst, opts.exec);
    if (const auto* cert = std::get_if<MatrixCertificate>(&res)) {
        json grid = json::array();
        for (const auto& row : cert->grid) {
            json cells = json::array();
            for (const auto& d : row) cells.push_back(vec_json(d.diag));
            grid.push_back(cells);
        }
        json body{{"grid", grid}};
        return {"certificate", body, verify_matrix_certificate(inst, *cert), 0};
    }
    if (const auto* wit = std::get_if<MatrixWitness>(&res)) {
        json body{{"x", vec_json(wit->x)}, {"band", band_json(wit->b)}, {"block", wit->block}};
        return {"witness", body, verify_matrix_witness(inst, *wit), 1};
    }
    const auto& inc = std::get<InconsistentStratum>(res);
    json proofs = json::array();
    for (const auto& y : inc.proofs) proofs.push_back(vec_json(y));
    json body{{"members", band_json(inc.where)}, {"proofs", proofs}};
    return {"inconsistent-stratum", body, verify_inconsistency(inst.a_blocks, inst.u, inc), 1};
}

Outcome run_reconstruct(const json& in, const CliOptions&) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    const Matrix a = matrix_value(field(in, "a"), m, n, "a");
    const Matrix b = matrix_value(field(in, "b"), m, n, "b");

    const auto res = reconstruct(a, b);
    if (const auto* rec = std::get_if<ReconstructionResult>(&res)) {
        json body{{"alpha", vec_json(rec->alpha.diag)}, {"kappa", band_json(rec->kappa)}};
        return {"certificate", body, verify_reconstruction(a, b, *rec), 0};
    }
    const int stratum = std::get<NoReconstruction>(res).stratum;
    json body{{"stratum", stratum}};
    return {"no-solution", body, verify_no_reconstruction(a, b, stratum), 1};
}

Outcome run_interval(const json& in, const CliOptions& opts) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    std::vector<IntervalOperator> a_intervals;
    const json& as = field(in, "a_intervals");
    if (!as.is_array() || as.empty())
        bad_input("a_intervals: expected a nonempty array of {lower, upper} operators");
    for (const auto& a : as) a_intervals.push_back(interval_value(a, m, n, "a_intervals"));
    const IntervalOperator b_interval = interval_value(field(in, "b_interval"), m, n, "b_interval");

    // Both roads are taken: the multiplier search and the pointwise orthant
    // check must agree, and each positive answer is re-verified on its own.
    const auto weak = find_weak_solution(a_intervals, b_interval, opts.exec);
    const auto incl =
        check_interval_inclusion(a_intervals, b_interval, opts.orthant_budget, opts.exec);

    if (const auto* sol = std::get_if<WeakSolution>(&weak)) {
        if (!std::holds_alternative<InclusionHolds>(incl))
            throw std::logic_error("interval engines disagree on a weak solution instance");
        json sels = json::array();
        for (const auto& s : sol->a_selections) sels.push_back(matrix_json(s));
        json body{{"weak_solution",
                   json{{"alphas", alphas_json(sol->alphas)},
                        {"a_selections", sels},
                        {"b_selection", matrix_json(sol->b_selection)}}}};
        return {"holds", body, verify_weak_solution(a_intervals, b_interval, *sol), 0};
    }
    const int stratum = std::get<NoWeakSolution>(weak).stratum;
    const auto* viol = std::get_if<InclusionViolation>(&incl);
    if (!viol) throw std::logic_error("interval engines disagree on a violated instance");
    json body{{"x", vec_json(viol->x)}, {"band", band_json(viol->b)}, {"stratum", stratum}};
    return {"violation", body, verify_inclusion_violation(a_intervals, b_interval, *viol), 1};
}

struct ComplexPayload {
    std::vector<CMatrix> a_list;
    CMatrix b;
    std::vector<Vec> u_list;
    Vec v;
};

ComplexPayload complex_payload(const json& in) {
    const int m = int_field(in, "m"), n = int_field(in, "n");
    ComplexPayload p;
    const json& as = field(in, "a_list");
    if (!as.is_array() || as.empty()) bad_input("a_list: expected a nonempty array of matrices");
    for (const auto& a : as) p.a_list.push_back(cmatrix_value(a, m, n, "a_list"));
    p.b = cmatrix_value(field(in, "b"), m, n, "b");
    const json& us = field(in, "u_list");
    if (!us.is_array() || us.size() != as.size())
        bad_input("u_list: expected one bound per operator in a_list");
    for (const auto& u : us) p.u_list.push_back(vec_value(u, m, "u_list"));
    p.v = vec_value(field(in, "v"), m, "v");
    return p;
}

Outcome run_complex_verify(const json& in, const CliOptions& opts) {
    const ComplexPayload p = complex_payload(in);
    const int m = int_field(in, "m");
    std::vector<ComplexDiag> c_list;
    const json& cs = field(in, "c_list");
    if (!cs.is_array() || cs.size() != p.a_list.size())
        bad_input("c_list: expected one diagonal per operator in a_list");
    for (const auto& c : cs) {
        if (!c.is_array() || static_cast<int>(c.size()) != m)
            bad_input("c_list: each diagonal carries m complex pairs");
        ComplexDiag d;
        for (const auto& z : c) d.diag.push_back(gauss_value(z, "c_list"));
        c_list.push_back(std::move(d));
    }

    const auto status =
        verify_complex_certificate(c_list, p.a_list, p.b, p.u_list, p.v, opts.depth);
    // The checker is itself the verification primitive, so "verified" is a
    // literal re-run; Undecided establishes nothing and stays unverified.
    const auto again =
        verify_complex_certificate(c_list, p.a_list, p.b, p.u_list, p.v, opts.depth);
    switch (status) {
        case CertCheck::Valid:
            return {"valid", json::object(), again == status, 0};
        case CertCheck::Invalid:
            return {"invalid", json::object(), again == status, 1};
        case CertCheck::Undecided:
        default:
            return {"undecided",
                    json{{"message", "modulus refinement budget exhausted before the budget "
                                     "row settled; raise --precision"}},
                    false, 3};
    }
}

Outcome run_complex_search(const json& in, const CliOptions& opts) {
    const ComplexPayload p = complex_payload(in);
    const auto res =
        search_complex_certificate(p.a_list, p.b, p.u_list, p.v, opts.sides, opts.exec);
    if (const auto* found = std::get_if<std::vector<ComplexDiag>>(&res)) {
        json cs = json::array();
        for (const auto& c : *found) cs.push_back(cdiag_json(c));
        json body{{"c_list", cs}};
        const bool ok = verify_complex_certificate(*found, p.a_list, p.b, p.u_list, p.v,
                                                   opts.depth) == CertCheck::Valid;
        return {"certificate", body, ok, 0};
    }
    return {"undecided",
            json{{"message",
                  "no certificate over this polygon; a larger --sides covers more of the disc"}},
            false, 3};
}

Outcome run_factor(const json& in, const CliOptions&, bool positive) {
    const int n = int_field(in, "n");
    const int a_rows = int_field(in, "a_rows"), b_rows = int_field(in, "b_rows");
    const Matrix a = matrix_value(field(in, "a"), a_rows, n, "a");
    const Matrix b = matrix_value(field(in, "b"), b_rows, n, "b");

    if (positive) {
        const auto res = factor_positive(a, b);
        if (const auto* x = std::get_if<Matrix>(&res)) {
            json body{{"factor", matrix_json(*x)}, {"rows", x->rows()}, {"cols", x->cols()}};
            return {"certificate", body, verify_factorization(a, b, *x, true), 0};
        }
        const auto& wit = std::get<PositiveFactorWitness>(res);
        json body{{"x", vec_json(wit.x)}, {"row", wit.row}};
        return {"witness", body, verify_positive_factor_witness(a, b, wit), 1};
    }
    const auto res = factor_through(a, b);
    if (const auto* x = std::get_if<Matrix>(&res)) {
        json body{{"factor", matrix_json(*x)}, {"rows", x->rows()}, {"cols", x->cols()}};
        return {"certificate", body, verify_factorization(a, b, *x, false), 0};
    }
    const auto& obs = std::get<FactorObstruction>(res);
    json body{{"x", vec_json(obs.x)}, {"row", obs.row}};
    return {"witness", body, verify_factor_obstruction(a, b, obs), 1};
}

Outcome run_oracle(const json& in, const CliOptions& opts) {
    const int rows = int_field(in, "rows"), n = int_field(in, "n");
    const Matrix m = matrix_value(field(in, "matrix"), rows, n, "matrix");
    const Vec c = vec_value(field(in, "c"), n, "c");

    json probe;  // null unless sampling is requested
    if (in.contains("trials")) {
        const int trials = int_field(in, "trials");
        if (trials < 0) bad_input("trials: must be nonnegative");
        const auto hit = falsify_by_sampling(m, c, trials, opts.seed);
        probe = hit ? vec_json(*hit) : json();
    }

    const auto dir = inclusion_oracle(m, c);
    if (!dir) {
        json body = json::object();
        if (in.contains("trials")) body["probe"] = probe;
        return {"holds", body, verify_oracle_holds(m, c), 0};
    }
    json body{{"direction", vec_json(*dir)}};
    if (in.contains("trials")) body["probe"] = probe;
    return {"violation", body, verify_oracle_direction(m, c, *dir), 1};
}

Outcome dispatch(const std::string& kind, const json& in, const CliOptions& opts) {
    if (kind == "dominance") return run_dominance(in, opts);
    if (kind == "inhomogeneous") return run_inhomogeneous(in, opts);
    if (kind == "matrix") return run_matrix(in, opts);
    if (kind == "reconstruct") return run_reconstruct(in, opts);
    if (kind == "interval") return run_interval(in, opts);
    if (kind == "complex-verify") return run_complex_verify(in, opts);
    if (kind == "complex-search") return run_complex_search(in, opts);
    if (kind == "factor") return run_factor(in, opts, false);
    if (kind == "factor-positive") return run_factor(in, opts, true);
    if (kind == "oracle") return run_oracle(in, opts);
    bad_input("unknown subcommand \"" + kind + "\"");
}

void emit(const std::string& result, const json& body, bool verified) {
    json doc{{"engine_version", engine_version},
             {"result", result},
             {"verified", verified},
             {"body", body}};
    std::cout << doc.dump(2) << "\n";
}

int depth_for(const Rat& precision) {
    Rat step = rat(1);
    int r = 0;
    while (step > precision && r < 64) {  // 4^-64 is already far below any sane request
        step /= 4;
        ++r;
    }
    return r;
}

}  // namespace

int cli_main(int argc, char** argv) {
    std::string subcommand, input_path, precision_text = "1/1000000";
    CliOptions opts;
    bool parallel = false;

    CLI::App app{
        "farq — exact multiplier certificates and counterexample witnesses for\n"
        "componentwise linear inequality systems over rational vectors.\n"
        "Subcommands: dominance inhomogeneous matrix reconstruct interval\n"
        "complex-verify complex-search factor factor-positive oracle"};
    app.add_option("subcommand", subcommand, "what to decide (see above)")->required();
    app.add_option("input", input_path, "instance file (JSON; \"kind\" must match)")->required();
    app.add_option("--seed", opts.seed, "seed for the oracle sampling probe");
    app.add_option("--sides", opts.sides, "polygon resolution for complex-search (even, >= 4)");
    app.add_option("--precision", precision_text,
                   "enclosure width for complex budget checks, as p/q");
    app.add_option("--orthant-budget", opts.orthant_budget,
                   "max domain dimension for interval inclusion (2^n orthants)");
    app.add_flag("--parallel", parallel, "work the strata concurrently");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    opts.exec.parallel = parallel;

    try {
        const Rat precision = parse_rat(precision_text);
        if (precision <= 0) bad_input("--precision must be positive");
        opts.depth = depth_for(precision);

        std::ifstream in(input_path);
        if (!in) bad_input("cannot open \"" + input_path + "\"");
        const json payload = json::parse(in);
        if (!payload.is_object()) bad_input("instance file must hold a JSON object");
        if (field(payload, "kind") != subcommand)
            bad_input("instance kind does not match the subcommand");

        const Outcome out = dispatch(subcommand, payload, opts);
        emit(out.result, out.body, out.verified);
        return out.code;
    } catch (const BudgetError& e) {
        std::cerr << "farq: " << e.what() << "\n";
        emit("undecided", json{{"message", e.what()}}, false);
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "farq: " << e.what() << "\n";
        emit("error", json{{"message", e.what()}}, false);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "farq: " << e.what() << "\n";
        emit("error", json{{"message", e.what()}}, false);
        return 2;
    }
}

}  // namespace farq
