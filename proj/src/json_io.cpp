#include "gib/json_io.hpp"

namespace gib {

Json to_json(const Rat& x) { return rat_string(x); }

Json to_json(const QuadElem& x) {
    Json j;
    j["a"] = rat_string(x.a);
    j["b"] = rat_string(x.b);
    j["d"] = x.d;
    return j;
}

Json to_json(const PolyQ& p) {
    Json j = Json::array();
    for (const auto& c : p.c) j.push_back(rat_string(c));
    return j;
}

Json to_json(const MatZ& m) {
    Json j = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) {
            const Int& x = m(i, k);
            if (x.fits_slong_p())
                row.push_back(x.get_si());
            else
                row.push_back(x.get_str());  // beyond 64 bits, keep it exact
        }
        j.push_back(row);
    }
    return j;
}

Json to_json(const MatQ& m) {
    Json j = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(rat_string(m(i, k)));
        j.push_back(row);
    }
    return j;
}

Json to_json(const MatK& m) {
    Json j = Json::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
        j.push_back(row);
    }
    return j;
}

Json to_json(const IntervalQ& iv) {
    Json j;
    j["lo"] = rat_string(iv.lo);
    j["hi"] = rat_string(iv.hi);
    return j;
}

Json to_json(const RealAlgebraic& x) {
    Json j;
    j["minpoly"] = to_json(x.minpoly);
    j["lo"] = rat_string(x.lo);
    j["hi"] = rat_string(x.hi);
    return j;
}

Json to_json(const GibData& data) {
    Json j;
    j["n"] = data.n;
    if (data.d == 0)
        j["field"] = "rational";
    else
        j["field"] = Json{{"d", data.d}};
    auto vectors = [&](const MatK& basis) {
        Json out = Json::array();
        for (size_t c = 0; c < basis.cols(); ++c) {
            Json vec = Json::array();
            for (size_t i = 0; i < basis.rows(); ++i) vec.push_back(to_json(basis(i, c)));
            out.push_back(vec);
        }
        return out;
    };
    j["H"] = vectors(data.h_basis);
    j["V"] = vectors(data.v_basis);
    j["b"] = to_json(data.gram);
    return j;
}

Json to_json(const ValidationReport& rep) {
    Json j;
    j["dims_ok"] = rep.dims_ok;
    j["independent"] = rep.independent;
    j["gram_symmetric"] = rep.gram_symmetric;
    j["gram_positive_definite"] = rep.gram_positive;
    j["irrational"] = rep.irrational;
    j["ok"] = rep.ok();
    j["message"] = rep.message;
    return j;
}

Json to_json(const AutReport& rep) {
    Json j;
    j["in_glnz"] = rep.in_glnz;
    j["preserves_H"] = rep.preserves_h;
    j["preserves_V"] = rep.preserves_v;
    j["is_similarity"] = rep.is_similarity;
    if (rep.ratio_sq) j["ratio_sq"] = to_json(*rep.ratio_sq);
    j["is_strict"] = rep.is_strict;
    j["is_member"] = rep.is_member;
    return j;
}

Json to_json(const EquationSet& eqs) {
    Json j;
    j["n"] = eqs.n;
    if (eqs.d == 0)
        j["field"] = "rational";
    else
        j["field"] = Json{{"d", eqs.d}};
    j["dim_H"] = eqs.dim_h;
    j["commute_mats"] = Json::array();
    for (const auto& m : eqs.commute_mats) j["commute_mats"].push_back(to_json(m));
    j["commute_coeffs"] = Json::array();
    for (const auto& c : eqs.commute_coeffs) j["commute_coeffs"].push_back(to_json(c));
    j["form_mats"] = Json::array();
    for (const auto& m : eqs.form_mats) j["form_mats"].push_back(to_json(m));
    j["form_coeffs"] = Json::array();
    for (const auto& c : eqs.form_coeffs) j["form_coeffs"].push_back(to_json(c));
    j["projector"] = to_json(eqs.projector);
    j["form"] = to_json(eqs.form);
    j["modes"] = Json::array({"isometry", "det_twisted"});
    return j;
}

Json to_json(const FundBundle& bundle) {
    Json j;
    j["data"] = to_json(bundle.data);
    j["A"] = to_json(bundle.a);
    j["lambda"] = to_json(bundle.lambda);
    j["q_form"] = to_json(bundle.q_form);
    j["witnesses"] = Json::array();
    for (const auto& [name, m] : bundle.witnesses) {
        Json w;
        w["name"] = name;
        w["matrix"] = to_json(m);
        j["witnesses"].push_back(w);
    }
    return j;
}

Json to_json(const SopqBundle& bundle) {
    Json j;
    j["p"] = bundle.p;
    j["r"] = bundle.r;
    j["field"] = Json{{"d", 2}};
    j["eta"] = to_json(bundle.eta);
    j["b_form"] = to_json(bundle.b_form);
    j["data"] = to_json(bundle.gib);
    j["strict_witness"] = to_json(bundle.strict_witness);
    j["lambda"] = to_json(bundle.lambda);
    j["a0_variants"] = Json::array();
    for (const auto& v : bundle.scaling_variants) {
        Json w;
        w["name"] = v.name;
        w["multiplier"] = to_json(v.multiplier);
        w["alpha"] = to_json(v.alpha);
        w["beta"] = to_json(v.beta);
        w["lattice_matrix"] = to_json(v.lattice_matrix);
        w["preserves_lattice"] = v.preserves_lattice;
        w["membership_oracle_agrees"] = v.membership_agrees;
        j["a0_variants"].push_back(w);
    }
    return j;
}

Json to_json(const ClassificationReport& rep) {
    Json j;
    j["accepted"] = rep.accepted();
    if (!rep.refusal.empty()) j["refusal"] = rep.refusal;
    if (rep.decomposition) {
        const auto& dec = *rep.decomposition;
        j["U"] = to_json(dec.u);
        j["blocks"] = Json::array();
        for (const auto& b : dec.blocks) j["blocks"].push_back(to_json(b));
        j["charpolys"] = Json::array();
        for (const auto& f : dec.charpolys) j["charpolys"].push_back(to_json(f));
        j["groups"] = Json::array();
        for (const auto& g : dec.groups) j["groups"].push_back(g);
    }
    if (rep.obstruction) {
        Json o;
        o["index"] = rep.obstruction->index.get_str();
        o["sublattice"] = to_json(rep.obstruction->sublattice);
        o["reason"] = rep.obstruction->reason;
        j["obstruction"] = o;
    }
    j["candidates"] = Json::array();
    for (const auto& cand : rep.candidates) {
        Json c;
        c["modulus_sq"] = to_json(cand.modulus_sq);
        c["modulus"] = to_json(cand.modulus);
        if (cand.modulus_exact) c["modulus_exact"] = to_json(*cand.modulus_exact);
        c["dim_H"] = cand.dim_h;
        c["lambda_classes"] = Json::array();
        for (const auto& ref : cand.lambda_classes)
            c["lambda_classes"].push_back(Json{{"group", ref.group}, {"class", ref.class_index}});
        if (cand.gib) c["data"] = to_json(*cand.gib);
        if (cand.witness) c["witness"] = to_json(*cand.witness);
        if (!cand.h_enclosures.empty()) {
            Json e = Json::array();
            for (const auto& col : cand.h_enclosures) {
                Json vec = Json::array();
                for (const auto& iv : col) vec.push_back(to_json(iv));
                e.push_back(vec);
            }
            c["H_enclosures"] = e;
        }
        c["note"] = cand.note;
        j["candidates"].push_back(c);
    }
    return j;
}

Json to_json(const CheckReport& rep) {
    Json j;
    j["check"] = rep.check;
    j["passed"] = rep.passed;
    j["elements_checked"] = rep.elements_checked;
    j["violations"] = rep.violations;
    if (rep.counterexample) j["counterexample"] = to_json(*rep.counterexample);
    j["detail"] = rep.detail;
    return j;
}

// ---------------------------------------------------------------------------
// parsing
// ---------------------------------------------------------------------------

Rat rat_from_json(const Json& j, const std::string& field) {
    if (j.is_number_integer()) return Rat(static_cast<long>(j.get<long long>()));
    if (j.is_string()) {
        auto r = parse_rat(j.get<std::string>());
        if (r) return *r;
    }
    throw ParseError(field, "expected an integer or a 'p/q' string");
}

QuadElem quad_from_json(const Json& j, const std::string& field, long ambient_d) {
    if (j.is_number_integer() || j.is_string()) return QuadElem(rat_from_json(j, field));
    if (!j.is_object()) throw ParseError(field, "expected a field element");
    Rat a = j.contains("a") ? rat_from_json(j["a"], field + ".a") : Rat(0);
    Rat b = j.contains("b") ? rat_from_json(j["b"], field + ".b") : Rat(0);
    long d = ambient_d;
    if (j.contains("d")) {
        if (!j["d"].is_number_integer()) throw ParseError(field + ".d", "expected an integer");
        d = j["d"].get<long>();
    }
    if (b != 0 && d == 0)
        throw ParseError(field, "irrational element without a field parameter");
    try {
        return QuadElem(a, b, b == 0 ? 0 : d);
    } catch (const std::invalid_argument& e) {
        throw ParseError(field, e.what());
    }
}

MatZ matz_from_json(const Json& j, const std::string& field) {
    if (!j.is_array() || j.empty()) throw ParseError(field, "expected a nonempty array of rows");
    size_t rows = j.size(), cols = 0;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(field, "rows must be arrays");
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError(field, "ragged rows");
    }
    if (cols == 0) throw ParseError(field, "empty rows");
    MatZ m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k) {
            const Json& e = j[i][k];
            std::string pos = field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]";
            Rat r = rat_from_json(e, pos);
            if (!is_integer(r)) throw ParseError(pos, "expected an integer entry");
            m(i, k) = r.get_num();
        }
    return m;
}

MatK matk_from_json(const Json& j, const std::string& field, long ambient_d) {
    if (!j.is_array() || j.empty()) throw ParseError(field, "expected a nonempty array of rows");
    size_t rows = j.size(), cols = 0;
    for (const auto& row : j) {
        if (!row.is_array()) throw ParseError(field, "rows must be arrays");
        if (cols == 0)
            cols = row.size();
        else if (row.size() != cols)
            throw ParseError(field, "ragged rows");
    }
    if (cols == 0) throw ParseError(field, "empty rows");
    MatK m(rows, cols);
    for (size_t i = 0; i < rows; ++i)
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = quad_from_json(
                j[i][k], field + "[" + std::to_string(i) + "][" + std::to_string(k) + "]",
                ambient_d);
    return m;
}

namespace {

long field_param_from_json(const Json& j, const std::string& field) {
    if (j.is_string() && j.get<std::string>() == "rational") return 0;
    if (j.is_object() && j.contains("d") && j["d"].is_number_integer())
        return j["d"].get<long>();
    throw ParseError(field, "expected \"rational\" or {\"d\": <integer>}");
}

MatK basis_from_json(const Json& j, const std::string& field, size_t n, long d) {
    if (!j.is_array() || j.empty()) throw ParseError(field, "expected a list of basis vectors");
    MatK basis(n, j.size());
    for (size_t c = 0; c < j.size(); ++c) {
        const Json& vec = j[c];
        if (!vec.is_array() || vec.size() != n)
            throw ParseError(field + "[" + std::to_string(c) + "]",
                             "expected a vector of length " + std::to_string(n));
        for (size_t i = 0; i < n; ++i)
            basis(i, c) =
                quad_from_json(vec[i], field + "[" + std::to_string(c) + "]", d);
    }
    return basis;
}

}  // namespace

GibData gibdata_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("data", "expected an object");
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("n", "expected an integer dimension");
    GibData data;
    data.n = j["n"].get<size_t>();
    if (!j.contains("field")) throw ParseError("field", "missing");
    data.d = field_param_from_json(j["field"], "field");
    if (!j.contains("H")) throw ParseError("H", "missing");
    if (!j.contains("V")) throw ParseError("V", "missing");
    if (!j.contains("b")) throw ParseError("b", "missing");
    data.h_basis = basis_from_json(j["H"], "H", data.n, data.d);
    data.v_basis = basis_from_json(j["V"], "V", data.n, data.d);
    data.gram = matk_from_json(j["b"], "b", data.d);
    if (data.gram.rows() != data.h_basis.cols() || data.gram.cols() != data.h_basis.cols())
        throw ParseError("b", "gram matrix must be dim(H) x dim(H)");
    return data;
}

EquationSet equations_from_json(const Json& j) {
    if (!j.is_object()) throw ParseError("equations", "expected an object");
    EquationSet eqs;
    if (!j.contains("n") || !j["n"].is_number_integer())
        throw ParseError("n", "expected an integer dimension");
    eqs.n = j["n"].get<size_t>();
    eqs.d = field_param_from_json(j.contains("field") ? j["field"] : Json("rational"), "field");
    if (!j.contains("dim_H") || !j["dim_H"].is_number_integer())
        throw ParseError("dim_H", "expected an integer");
    eqs.dim_h = j["dim_H"].get<size_t>();
    auto mats = [&](const char* key) {
        std::vector<MatQ> out;
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(key, "expected an array");
        for (size_t i = 0; i < j[key].size(); ++i) {
            MatK k = matk_from_json(j[key][i], std::string(key) + "[" + std::to_string(i) + "]",
                                    eqs.d);
            MatQ q(k.rows(), k.cols());
            for (size_t r = 0; r < k.rows(); ++r)
                for (size_t c = 0; c < k.cols(); ++c) {
                    if (k(r, c).b != 0)
                        throw ParseError(key, "equation matrices must be rational");
                    q(r, c) = k(r, c).a;
                }
            out.push_back(q);
        }
        return out;
    };
    eqs.commute_mats = mats("commute_mats");
    eqs.form_mats = mats("form_mats");
    auto coeffs = [&](const char* key) {
        std::vector<QuadElem> out;
        if (!j.contains(key) || !j[key].is_array()) throw ParseError(key, "expected an array");
        for (size_t i = 0; i < j[key].size(); ++i)
            out.push_back(
                quad_from_json(j[key][i], std::string(key) + "[" + std::to_string(i) + "]", eqs.d));
        return out;
    };
    eqs.commute_coeffs = coeffs("commute_coeffs");
    eqs.form_coeffs = coeffs("form_coeffs");
    if (!j.contains("projector") || !j.contains("form"))
        throw ParseError("projector/form", "missing");
    eqs.projector = matk_from_json(j["projector"], "projector", eqs.d);
    eqs.form = matk_from_json(j["form"], "form", eqs.d);
    return eqs;
}

std::vector<MatZ> generators_from_json(const Json& j) {
    const Json* arr = nullptr;
    if (j.is_array())
        arr = &j;
    else if (j.is_object() && j.contains("generators") && j["generators"].is_array())
        arr = &j["generators"];
    else
        throw ParseError("generators", "expected an array or {\"generators\": [...]}");
    std::vector<MatZ> out;
    for (size_t i = 0; i < arr->size(); ++i)
        out.push_back(matz_from_json((*arr)[i], "generators[" + std::to_string(i) + "]"));
    if (out.empty()) throw ParseError("generators", "empty generating set");
    return out;
}

}  // namespace gib
