#pragma once

#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "hermcert/certify.hpp"

namespace hermcert {

// ordered_json keeps insertion order, which makes report bytes deterministic
using Json = nlohmann::ordered_json;

/// "num/den" (or "num" when the denominator is 1).
Json json_rational(const mpq_class& q);
Json json_scalar(const Scalar& c);
Json json_multiindex(const MultiIndex& a);
Json json_section(const HoloSection& s);
Json json_float_section(const FloatSection& s);
Json json_form(const HermitianForm& P);

/// Report skeleton with every schema field present (nulls for the optional
/// ones), so consumers see a fixed shape.
Json report_base(const std::string& command, const Json& input_echo);

void add_witness(Json& report, const std::string& type, Json data);

/// Fills verdict-dependent fields from a certificate run.
void apply_certificate(Json& report, const CertificateReport& cert);

/// Exit code contract: certified/pass 0, certified-not/fail 2,
/// inconclusive 3.
int verdict_exit_code(const std::string& verdict);
std::string verdict_str(Verdict v);

/// Serializes with timing filled in, writes to stdout and optionally to
/// json_out, returns the exit code for the report's verdict.
int emit_report(Json report, long long timing_ms, const std::string& json_out_path);

/// Minimal structural validator for the subset of JSON Schema used by the
/// checked-in report schema (type/properties/required/items/enum). Returns
/// an error description or empty string.
std::string schema_validate(const Json& instance, const Json& schema);

}  // namespace hermcert
