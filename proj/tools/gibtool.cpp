// Command-line front end: builds the explicit examples, verifies membership
// in Aut(n, H, V, b), classifies similarity matrices, emits the rational
// equation systems, and runs the bounded form-group search. One JSON document
// per invocation on stdout; human-readable summary on stderr.
// Exit codes: 0 success, 1 a check failed, 2 usage or parse error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "gib/json_io.hpp"

using namespace gib;

namespace {

int verbosity() {
    const char* v = std::getenv("GIB_VERBOSE");
    return v ? std::atoi(v) : 0;
}

Json read_json_input(const std::string& path) {
    try {
        if (path == "-" || path.empty()) {
            return Json::parse(std::cin);
        }
        std::ifstream in(path);
        if (!in) throw ParseError(path, "cannot open file");
        return Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(path.empty() ? "stdin" : path, e.what());
    }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

int cmd_unit(long d) {
    QuadElem u = fundamental_unit(d);
    emit(to_json(u));
    std::cerr << "fundamental unit of Q(sqrt " << d << "): " << to_string(u) << ", norm "
              << rat_string(field_norm(u)) << "\n";
    return 0;
}

int cmd_build_fund5() {
    FundBundle bundle = build_fund_example();
    emit(to_json(bundle));
    std::cerr << "built the Q(sqrt 5) bundle: n = 6, strict ratio_sq = "
              << to_string(similarity_ratio_sq(bundle.a, bundle.data)) << "\n";
    return 0;
}

int cmd_build_sopq(long p, long r) {
    SopqBundle bundle = build_sopq(p, r);
    emit(to_json(bundle));
    std::cerr << "built the SO(" << (p + 1) << ", " << (r + 1)
              << ") parabolic bundle over Q(sqrt 2)\n";
    for (const auto& v : bundle.scaling_variants)
        std::cerr << "  scaling '" << v.name
                  << "': preserves lattice = " << (v.preserves_lattice ? "yes" : "no") << "\n";
    return 0;
}

int cmd_verify(const std::string& data_path, const std::string& matrix_path,
               const std::string& sample_path, int maxlen) {
    GibData data;
    MatZ m;
    if (data_path.empty() && matrix_path.empty()) {
        // pipeline mode: a bundle {"data": ..., "A": ...} on stdin
        Json bundle = read_json_input("-");
        if (!bundle.contains("data") || !bundle.contains("A"))
            throw ParseError("stdin", "expected a bundle with 'data' and 'A'");
        data = gibdata_from_json(bundle["data"]);
        m = matz_from_json(bundle["A"], "A");
    } else {
        data = gibdata_from_json(read_json_input(data_path));
        m = matz_from_json(read_json_input(matrix_path), "matrix");
    }
    if (m.rows() != data.n || m.cols() != data.n)
        throw ParseError("matrix", "expected a " + std::to_string(data.n) + "x" +
                                       std::to_string(data.n) + " matrix");

    Json out;
    ValidationReport vrep = validate(data);
    out["validation"] = to_json(vrep);
    AutReport rep = check_automorphism(m, data);
    out["report"] = to_json(rep);
    bool ok = vrep.ok() && rep.is_member;

    if (!sample_path.empty()) {
        auto gens = generators_from_json(read_json_input(sample_path));
        GroupSample sample = word_closure(gens, maxlen);
        Json harness;
        harness["sample_size"] = sample.elements.size();
        harness["max_word_length"] = maxlen;
        CheckReport u = unipotent_check(sample, data);
        CheckReport b = block_det_check(sample);
        CheckReport t = torus_part_check(sample, data);
        harness["unipotent"] = to_json(u);
        harness["block_det"] = to_json(b);
        harness["torus_part"] = to_json(t);
        out["harness"] = harness;
        ok = ok && u.passed && b.passed && t.passed;
    }
    emit(out);
    std::cerr << (rep.is_member ? "member" : "non-member")
              << (rep.is_strict ? " (strict similarity)" : "") << "\n";
    return ok ? 0 : 1;
}

int cmd_classify(const std::string& matrix_path) {
    MatZ m = matz_from_json(read_json_input(matrix_path), "matrix");
    ClassificationReport rep;
    try {
        rep = classify_similarity(m);
    } catch (const std::domain_error& e) {
        // defective eigenstructure: no adapted form exists at any index
        rep.refusal = e.what();
    }
    emit(to_json(rep));
    if (!rep.accepted()) {
        std::cerr << "refused: " << rep.refusal << "\n";
        return 1;
    }
    std::cerr << rep.candidates.size() << " candidate ratio(s)\n";
    return 0;
}

int cmd_equations(const std::string& data_path) {
    GibData data = gibdata_from_json(read_json_input(data_path));
    emit(to_json(zariski_equations(data)));
    return 0;
}

int cmd_check_eqs(const std::string& data_path, const std::string& matrix_path,
                  const std::string& mode) {
    GibData data = gibdata_from_json(read_json_input(data_path));
    MatZ m = matz_from_json(read_json_input(matrix_path), "matrix");
    EqMode em;
    if (mode == "isometry")
        em = EqMode::isometry;
    else if (mode == "det_twisted")
        em = EqMode::det_twisted;
    else
        throw ParseError("mode", "expected 'isometry' or 'det_twisted'");
    auto eqs = zariski_equations(data);
    bool sat = equations_satisfied(m, eqs, em);
    Json out;
    out["mode"] = mode;
    out["satisfied"] = sat;
    emit(out);
    std::cerr << (sat ? "satisfied" : "not satisfied") << "\n";
    return sat ? 0 : 1;
}

int cmd_search(const std::string& form_path, const std::string& variant, long bound) {
    Json j = read_json_input(form_path);
    if (!j.is_object() || !j.contains("gram")) throw ParseError("form", "expected {d, gram}");
    long d = 0;
    if (j.contains("d")) {
        if (!j["d"].is_number_integer()) throw ParseError("d", "expected an integer");
        d = j["d"].get<long>();
    }
    MatK form = matk_from_json(j["gram"], "gram", d);
    FormVariant fv;
    if (variant == "orthogonal")
        fv = FormVariant::orthogonal;
    else if (variant == "unitary")
        fv = FormVariant::unitary;
    else
        throw ParseError("variant", "expected 'orthogonal' or 'unitary'");
    auto sols = search_form_group(form, d, fv, bound);
    Json out;
    out["count"] = sols.size();
    out["solutions"] = Json::array();
    for (const auto& g : sols) out["solutions"].push_back(to_json(g));
    emit(out);
    std::cerr << sols.size() << " solution(s) at bound " << bound << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact arithmetic for integer-matrix automorphisms of irrational splittings"};
    app.require_subcommand(1);

    auto* build = app.add_subcommand("build", "construct one of the explicit examples");
    build->require_subcommand(1);
    auto* fund5 = build->add_subcommand("fund5", "the non-abelian example over Q(sqrt 5)");
    long p = 1, r = 1;
    auto* sopq = build->add_subcommand("sopq", "the SO(p+1, r+1) parabolic over Q(sqrt 2)");
    sopq->add_option("--p", p, "positive-signature size")->required();
    sopq->add_option("--r", r, "negative-signature size")->required();

    std::string data_path, matrix_path, sample_path, mode = "isometry";
    std::string form_path, variant = "orthogonal";
    int maxlen = 4;
    long bound = 1, unit_d = 0;

    auto* verify = app.add_subcommand("verify", "check membership in Aut(n, H, V, b)");
    verify->add_option("--data", data_path, "GIB data JSON file ('-' for stdin)");
    verify->add_option("--matrix", matrix_path, "integer matrix JSON file");
    verify->add_option("--sample", sample_path, "generator list for the structure checks");
    verify->add_option("--maxlen", maxlen, "word length for the sample closure");

    auto* classify = app.add_subcommand("classify", "classify a similarity matrix");
    classify->add_option("--matrix", matrix_path, "integer matrix JSON file")->required();

    auto* equations = app.add_subcommand("equations", "emit the Zariski-closure equations");
    equations->add_option("--data", data_path, "GIB data JSON file")->required();

    auto* check_eqs = app.add_subcommand("check-eqs", "test a matrix against the equations");
    check_eqs->add_option("--data", data_path, "GIB data JSON file")->required();
    check_eqs->add_option("--matrix", matrix_path, "integer matrix JSON file")->required();
    check_eqs->add_option("--mode", mode, "isometry | det_twisted");

    auto* search = app.add_subcommand("search", "bounded search in a form group");
    search->add_option("--form", form_path, "form JSON file {d, gram}")->required();
    search->add_option("--variant", variant, "orthogonal | unitary");
    search->add_option("--bound", bound, "coordinate bound");

    auto* unit = app.add_subcommand("unit", "fundamental unit of a real quadratic field");
    unit->add_option("--d", unit_d, "squarefree field parameter > 1")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (fund5->parsed()) return cmd_build_fund5();
        if (sopq->parsed()) return cmd_build_sopq(p, r);
        if (verify->parsed()) return cmd_verify(data_path, matrix_path, sample_path, maxlen);
        if (classify->parsed()) return cmd_classify(matrix_path);
        if (equations->parsed()) return cmd_equations(data_path);
        if (check_eqs->parsed()) return cmd_check_eqs(data_path, matrix_path, mode);
        if (search->parsed()) return cmd_search(form_path, variant, bound);
        if (unit->parsed()) return cmd_unit(unit_d);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (verbosity() > 0) std::cerr << "no subcommand executed\n";
    return 2;
}
