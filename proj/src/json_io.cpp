#include "octo/json_io.hpp"

#include <sstream>

namespace octo {

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Json vec_to_json(const Vec& v) {
    Json out = Json::array();
    for (const auto& x : v) out.push_back(scalar_to_json(x));
    return out;
}

Json mat_to_json(const Mat& m) {
    Json out = Json::array();
    for (const auto& row : m) out.push_back(vec_to_json(row));
    return out;
}

Json structure_to_json(const StructureAlgebra& a) {
    Json j;
    j["dim"] = a.dim();
    j["basis"] = a.basis;
    Json table = Json::array();
    for (const auto& row : a.table) {
        Json r = Json::array();
        for (const auto& entry : row) r.push_back(vec_to_json(entry));
        table.push_back(r);
    }
    j["table"] = table;
    j["gram"] = mat_to_json(a.gram);
    j["unit"] = vec_to_json(a.unit);
    return j;
}

StructureAlgebra structure_from_json(const Json& j, const FieldSpec& field) {
    StructureAlgebra a;
    a.field = field;
    a.basis = j.at("basis").get<std::vector<std::string>>();
    std::size_t n = j.at("dim").get<std::size_t>();
    if (a.basis.size() != n) throw std::invalid_argument("basis size disagrees with dim");
    auto parse_vec = [&](const Json& v) {
        Vec out;
        for (const auto& s : v) out.push_back(field.parse_scalar(s.get<std::string>()));
        if (out.size() != n) throw std::invalid_argument("vector length disagrees with dim");
        return out;
    };
    for (const auto& row : j.at("table")) {
        std::vector<Vec> r;
        for (const auto& entry : row) r.push_back(parse_vec(entry));
        a.table.push_back(r);
    }
    for (const auto& row : j.at("gram")) a.gram.push_back(parse_vec(row));
    a.unit = parse_vec(j.at("unit"));
    // basis norms are the polarization diagonal: <b_i, b_i> = 2 N(b_i)
    Scalar half = field.scalar(1, 2);
    for (std::size_t i = 0; i < n; ++i) a.basis_norms.push_back(half * a.gram[i][i]);
    return a;
}

Json invariant_to_json(const QuaternionInvariant& inv) {
    Json j;
    j["verdict"] = inv.split ? "split" : "division";
    j["alpha"] = inv.alpha.to_string();
    j["beta"] = inv.beta.to_string();
    if (inv.field.kind() == FieldKind::Rationals) {
        Json places = Json::array();
        for (const auto& v : inv.ramified_places) {
            if (v.infinite)
                places.push_back("infinity");
            else
                places.push_back(v.p);
        }
        j["ramified_places"] = places;
    }
    return j;
}

Json classification_to_json(const ClassificationReport& r) {
    Json j;
    j["schema"] = kSchema;
    j["field"] = r.field.to_string();
    Json classes = Json::array();
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        Json c;
        c["label"] = r.classes[k].label;
        c["members"] = r.class_members[k];
        c["invariant"] = invariant_to_json(r.classes[k].invariant);
        classes.push_back(c);
    }
    j["classes"] = classes;
    if (r.q_non_exhaustive) {
        j["count"] = ">=2, non-exhaustive";
        j["classes_shown"] = r.count();
        j["non_exhaustive"] = true;
    } else {
        j["count"] = r.count();
    }
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(cj);
    }
    j["checks"] = checks;
    j["pass"] = r.all_checks_pass();
    return j;
}

Json verify_paper_to_json(const VerifyPaperReport& r) {
    Json j;
    j["schema"] = kSchema;
    Json fields = Json::array();
    for (const auto& fr : r.field_reports) {
        Json f;
        f["field"] = fr.field.to_string();
        if (fr.q_non_exhaustive) {
            f["count"] = ">=2, non-exhaustive";
            f["classes_shown"] = fr.count();
        } else {
            f["count"] = fr.count();
        }
        f["pass"] = fr.all_checks_pass();
        fields.push_back(f);
    }
    j["fields"] = fields;
    Json suites = Json::array();
    for (const auto& s : r.suites) {
        Json sj;
        sj["name"] = s.name;
        sj["pass"] = s.pass;
        if (!s.detail.empty()) sj["detail"] = s.detail;
        suites.push_back(sj);
    }
    j["suites"] = suites;
    j["pass"] = r.pass;
    return j;
}

std::string classification_to_text(const ClassificationReport& r) {
    std::ostringstream os;
    os << "field " << r.field.to_string() << ": ";
    if (r.q_non_exhaustive)
        os << r.count() << " classes shown (>=2, non-exhaustive over Q)\n";
    else
        os << r.count() << " isomorphy classes\n";
    for (std::size_t k = 0; k < r.classes.size(); ++k) {
        const auto& inv = r.classes[k].invariant;
        os << "  class " << k + 1 << " [" << (inv.split ? "split" : "division") << "] members:";
        for (const auto& m : r.class_members[k]) os << " " << m;
        os << "\n";
    }
    for (const auto& c : r.checks)
        os << "  " << (c.pass ? "PASS" : "FAIL") << " " << c.name
           << (c.detail.empty() ? "" : " (" + c.detail + ")") << "\n";
    return os.str();
}

std::string verify_paper_to_text(const VerifyPaperReport& r) {
    std::ostringstream os;
    for (const auto& fr : r.field_reports) {
        os << (fr.all_checks_pass() ? "PASS" : "FAIL") << " " << fr.field.to_string() << ": ";
        if (fr.q_non_exhaustive)
            os << fr.count() << " classes shown, non-exhaustive";
        else
            os << fr.count() << " classes";
        os << "\n";
    }
    for (const auto& s : r.suites)
        os << (s.pass ? "PASS" : "FAIL") << " suite " << s.name
           << (s.detail.empty() ? "" : " (" + s.detail + ")") << "\n";
    os << (r.pass ? "PASS" : "FAIL") << " overall\n";
    return os.str();
}

} // namespace octo
