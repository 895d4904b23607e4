#include "braid3/report.hpp"

#include <sstream>

#include "braid3/closure.hpp"
#include "braid3/crossings.hpp"
#include "braid3/invariants.hpp"

namespace braid3 {

InvariantReport make_invariant_report(const BraidWord& w) {
    InvariantReport r;
    r.word = format_word(w);
    const ClosureInfo info = closure_info(w);
    r.components = info.component_count;
    const AlexanderValue a = alexander_value(w);
    r.delta = a.poly;
    r.delta_normalized = a.normalized;
    if (info.is_knot()) {
        r.nabla = conway(w);
        r.casson = casson(w);
        for (long n = -5; n <= 5; ++n) r.surgery_casson.emplace_back(n, Integer(n) * *r.casson);
    }
    r.genus = bennequin_genus(w);
    if (info.component_count == 2) r.linking_number = linking_number(w);
    r.classes = classify(w);
    return r;
}

Json integer_to_json(const Integer& v) {
    if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json to_json(const ClassReport& c) {
    Json j;
    j["P"] = c.in_P;
    j["N"] = c.in_N;
    j["Pstar"] = c.in_Pstar;
    j["index3_reduced"] = c.is_index3_reduced;
    j["Pa"] = c.in_Pa;
    j["E"] = c.in_E;
    j["normal_form"] = c.normal_form.to_string();
    j["syllables"] = c.s_count;
    j["a3_syllables"] = c.n3_count;
    return j;
}

Json to_json(const InvariantReport& r) {
    Json j;
    j["word"] = r.word;
    j["components"] = r.components;
    j["delta"] = r.delta.to_string();
    j["nabla"] = r.nabla ? Json(r.nabla->to_string()) : Json(nullptr);
    j["casson"] = r.casson ? integer_to_json(*r.casson) : Json(nullptr);
    j["genus"] = r.genus;
    j["classes"] = to_json(r.classes);
    j["delta_normalized"] = r.delta_normalized;
    j["linking_number"] = r.linking_number ? Json(*r.linking_number) : Json(nullptr);
    Json table = Json::array();
    for (const auto& [n, c] : r.surgery_casson) table.push_back({{"n", n}, {"casson", integer_to_json(c)}});
    j["surgery_casson"] = std::move(table);
    return j;
}

std::string to_text(const InvariantReport& r) {
    std::ostringstream out;
    out << "word:        " << r.word << '\n';
    out << "components:  " << r.components << '\n';
    out << "delta:       " << r.delta.to_string() << (r.delta_normalized ? "" : "  (unnormalized)") << '\n';
    if (r.nabla) out << "nabla:       " << r.nabla->to_string() << '\n';
    if (r.casson) out << "casson:      " << r.casson->get_str() << '\n';
    if (r.linking_number) out << "lk:          " << *r.linking_number << '\n';
    out << "genus:       " << r.genus << '\n';
    const ClassReport& c = r.classes;
    out << "classes:     P=" << c.in_P << " N=" << c.in_N << " P*=" << c.in_Pstar
        << " index3_reduced=" << c.is_index3_reduced << " Pa=" << c.in_Pa << " E=" << c.in_E
        << " normal_form=" << c.normal_form.to_string() << '\n';
    if (!r.surgery_casson.empty()) {
        out << "1/n surgery: ";
        for (std::size_t i = 0; i < r.surgery_casson.size(); ++i)
            out << (i ? "  " : "") << "n=" << r.surgery_casson[i].first << ":" << r.surgery_casson[i].second.get_str();
        out << '\n';
    }
    if (r.components == 1 && r.delta == LaurentPoly::constant(1)) out << "unknot-like: Δ = 1, Casson 0\n";
    return out.str();
}

namespace {

void require(std::vector<std::string>& errors, const Json& j, const char* key, bool ok, const char* what) {
    if (!j.contains(key))
        errors.push_back(std::string("missing key '") + key + "'");
    else if (!ok)
        errors.push_back(std::string("key '") + key + "' " + what);
}

}  // namespace

std::vector<std::string> validate_report_json(const Json& j) {
    std::vector<std::string> errors;
    if (!j.is_object()) return {"report is not an object"};
    auto has = [&](const char* k) { return j.contains(k); };
    require(errors, j, "word", has("word") && j["word"].is_string(), "must be a string");
    require(errors, j, "components", has("components") && j["components"].is_number_integer() &&
                                          j["components"].get<int>() >= 1 && j["components"].get<int>() <= 3,
            "must be an integer in 1..3");
    bool delta_ok = has("delta") && j["delta"].is_string();
    if (delta_ok) {
        try {
            parse_laurent(j["delta"].get<std::string>());
        } catch (const std::exception&) {
            delta_ok = false;
        }
    }
    require(errors, j, "delta", delta_ok, "must be a Laurent polynomial string");
    const bool knot = has("components") && j["components"] == 1;
    bool nabla_ok = has("nabla") && (knot ? j["nabla"].is_string() : j["nabla"].is_null());
    if (nabla_ok && knot) {
        try {
            parse_conway(j["nabla"].get<std::string>());
        } catch (const std::exception&) {
            nabla_ok = false;
        }
    }
    require(errors, j, "nabla", nabla_ok, "must be a polynomial string for knots and null otherwise");
    require(errors, j, "casson",
            has("casson") && (knot ? (j["casson"].is_number_integer() || j["casson"].is_string())
                                   : j["casson"].is_null()),
            "must be an integer for knots and null otherwise");
    require(errors, j, "genus", has("genus") && j["genus"].is_number_integer() && j["genus"].get<int>() >= 0,
            "must be a non-negative integer");
    bool classes_ok = has("classes") && j["classes"].is_object();
    if (classes_ok) {
        for (const char* k : {"P", "N", "Pstar", "index3_reduced", "Pa", "E"})
            if (!j["classes"].contains(k) || !j["classes"][k].is_boolean()) classes_ok = false;
        if (!j["classes"].contains("normal_form") || !j["classes"]["normal_form"].is_string()) classes_ok = false;
    }
    require(errors, j, "classes", classes_ok, "must be an object of class flags");
    return errors;
}

}  // namespace braid3
