#include "hermcert/report.hpp"

#include <fstream>
#include <iostream>

namespace hermcert {

Json json_rational(const mpq_class& q) { return q.get_str(); }

Json json_scalar(const Scalar& c) {
    return Json{{"re", json_rational(c.re)}, {"im", json_rational(c.im)}};
}

Json json_multiindex(const MultiIndex& a) { return Json(a); }

Json json_section(const HoloSection& s) {
    Json terms = Json::array();
    for (const auto& [alpha, c] : s.coeffs)
        terms.push_back(Json{{"alpha", json_multiindex(alpha)}, {"coeff", json_scalar(c)}});
    return Json{{"n", s.n}, {"d", s.d}, {"terms", terms}};
}

Json json_float_section(const FloatSection& s) {
    Json coeffs = Json::array();
    for (const auto& c : s.coeffs) coeffs.push_back(Json{c.real(), c.imag()});
    return Json{{"n", s.n}, {"d", s.d}, {"coeffs", coeffs}};
}

Json json_form(const HermitianForm& P) {
    Json entries = Json::array();
    for (const auto& [key, c] : P.C)
        entries.push_back(Json{{"alpha", json_multiindex(key.first)},
                               {"beta", json_multiindex(key.second)},
                               {"coeff", json_scalar(c)}});
    return Json{{"n", P.n}, {"d", P.d}, {"entries", entries}};
}

Json report_base(const std::string& command, const Json& input_echo) {
    Json r;
    r["version"] = "hermcert-report/1";
    r["command"] = command;
    r["input_echo"] = input_echo;
    r["verdict"] = nullptr;
    r["minimal_exponent"] = nullptr;
    r["signature"] = nullptr;
    r["witnesses"] = Json::array();
    r["diagnostics"] =
        Json{{"sup_ratio", nullptr}, {"min_eigenvalue_trace", nullptr}, {"quadrature_error", nullptr}};
    r["timing_ms"] = nullptr;
    return r;
}

void add_witness(Json& report, const std::string& type, Json data) {
    report["witnesses"].push_back(Json{{"type", type}, {"data", std::move(data)}});
}

std::string verdict_str(Verdict v) {
    switch (v) {
        case Verdict::CertifiedQsn: return "certified";
        case Verdict::CertifiedNotQsn: return "certified-not";
        default: return "inconclusive";
    }
}

void apply_certificate(Json& report, const CertificateReport& cert) {
    report["verdict"] = verdict_str(cert.verdict);
    if (cert.minimal_exponent) report["minimal_exponent"] = *cert.minimal_exponent;
    if (!cert.min_eigenvalue_trace.empty())
        report["diagnostics"]["min_eigenvalue_trace"] = cert.min_eigenvalue_trace;
    if (cert.sup_ratio) report["diagnostics"]["sup_ratio"] = *cert.sup_ratio;
    if (cert.witness_sections) {
        Json secs = Json::array();
        for (const auto& s : *cert.witness_sections) secs.push_back(json_float_section(s));
        add_witness(report, "sos_sections", secs);
    }
    if (cert.witness_divisor) add_witness(report, "base_divisor", json_section(*cert.witness_divisor));
    if (cert.obstruction) {
        const Obstruction& ob = *cert.obstruction;
        Json data;
        if (ob.complex_chart_point) {
            data["chart_point"] = json_scalar(*ob.complex_chart_point);
        } else {
            data["point"] = Json{json_rational(ob.point.a), json_rational(ob.point.b)};
        }
        data["exact_zero"] = ob.exact_zero;
        data["jet_mu"] = ob.jet.mu;
        Json block = Json::array();
        for (const auto& [jk, c] : ob.jet.lowest_block)
            block.push_back(Json{{"j", jk.first}, {"k", jk.second}, {"coeff", json_scalar(c)}});
        data["jet_lowest_block"] = block;
        add_witness(report, "obstruction", data);
    }
}

int verdict_exit_code(const std::string& verdict) {
    if (verdict == "certified" || verdict == "pass") return 0;
    if (verdict == "certified-not" || verdict == "fail") return 2;
    return 3;
}

int emit_report(Json report, long long timing_ms, const std::string& json_out_path) {
    report["timing_ms"] = timing_ms;
    std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!json_out_path.empty()) {
        std::ofstream out(json_out_path);
        if (!out) {
            std::cerr << "cannot write " << json_out_path << "\n";
            return 1;
        }
        out << text << "\n";
    }
    std::string v = report["verdict"].is_string() ? report["verdict"].get<std::string>() : "";
    return verdict_exit_code(v);
}

namespace {

bool type_matches(const Json& v, const std::string& t) {
    if (t == "object") return v.is_object();
    if (t == "array") return v.is_array();
    if (t == "string") return v.is_string();
    if (t == "number") return v.is_number();
    if (t == "integer") return v.is_number_integer();
    if (t == "boolean") return v.is_boolean();
    if (t == "null") return v.is_null();
    return false;
}

std::string validate_at(const Json& v, const Json& schema, const std::string& path) {
    if (schema.contains("type")) {
        const Json& t = schema["type"];
        bool ok = false;
        if (t.is_string()) {
            ok = type_matches(v, t.get<std::string>());
        } else {
            for (const auto& alt : t) ok = ok || type_matches(v, alt.get<std::string>());
        }
        if (!ok) return path + ": type mismatch";
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& alt : schema["enum"]) ok = ok || (alt == v);
        if (!ok) return path + ": not in enum";
    }
    if (schema.contains("required"))
        for (const auto& key : schema["required"])
            if (!v.contains(key.get<std::string>()))
                return path + ": missing required key " + key.get<std::string>();
    if (schema.contains("properties") && v.is_object())
        for (const auto& [key, sub] : schema["properties"].items())
            if (v.contains(key)) {
                std::string err = validate_at(v.at(key), sub, path + "/" + key);
                if (!err.empty()) return err;
            }
    if (schema.contains("items") && v.is_array())
        for (std::size_t i = 0; i < v.size(); ++i) {
            std::string err = validate_at(v[i], schema["items"], path + "/" + std::to_string(i));
            if (!err.empty()) return err;
        }
    return "";
}

}  // namespace

std::string schema_validate(const Json& instance, const Json& schema) {
    return validate_at(instance, schema, "$");
}

}  // namespace hermcert
