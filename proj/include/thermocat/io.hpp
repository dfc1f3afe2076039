#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "thermocat/bounds.hpp"
#include "thermocat/divergences.hpp"
#include "thermocat/hamiltonians.hpp"
#include "thermocat/numeric.hpp"
#include "thermocat/prob_vec.hpp"

namespace thermocat {

using Json = nlohmann::json;

// Every document this library writes carries this tag, and every reader
// requires it, so stale or foreign files fail loudly instead of half-parsing.
inline constexpr const char* kSchemaTag = "thermocat/1";

inline void require_schema(const Json& j) {
  if (!j.is_object() || !j.contains("schema") || !j["schema"].is_string() ||
      j["schema"].get<std::string>() != kSchemaTag)
    throw std::invalid_argument(std::string("expected \"schema\": \"") + kSchemaTag + "\"");
}

// JSON has no infinity literal; divergence gaps and witness orders can be
// infinite, so those round-trip as the strings "inf" / "-inf".
inline Json json_real(double x) {
  if (std::isnan(x)) throw std::invalid_argument("json_real: NaN is not representable");
  if (std::isinf(x)) return Json(x > 0 ? "inf" : "-inf");
  return Json(x);
}

inline double real_from_json(const Json& j) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    throw std::invalid_argument("expected a number, \"inf\", or \"-inf\"");
  }
  if (!j.is_number()) throw std::invalid_argument("expected a number");
  return j.get<double>();
}

// ---------------------------------------------------------------------------
// Probability vectors. Exact mode is the canonical wire form: an array of
// reduced "p/q" strings. Float mode writes plain numbers. Readers accept
// integers in either mode and "p/q" strings in both (floats parse them).
// ---------------------------------------------------------------------------

inline Json to_json(const ProbVec<Rational>& v) {
  Json arr = Json::array();
  for (const auto& e : v.p) arr.push_back(to_string(e));
  return arr;
}

inline Json to_json(const ProbVec<double>& v) {
  Json arr = Json::array();
  for (double e : v.p) arr.push_back(e);
  return arr;
}

inline ProbVec<Rational> prob_vec_exact_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("probability vector must be a non-empty array");
  ProbVec<Rational> v;
  v.p.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string())
      v.p.push_back(parse_rational(e.get<std::string>()));
    else if (e.is_number_integer())
      v.p.push_back(Rational(e.get<long long>()));
    else
      throw std::invalid_argument("exact entries must be \"p/q\" strings or integers");
  }
  validate_prob_vec(v);
  return v;
}

inline ProbVec<double> prob_vec_float_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw std::invalid_argument("probability vector must be a non-empty array");
  ProbVec<double> v;
  v.p.reserve(j.size());
  for (const auto& e : j) {
    if (e.is_string())
      v.p.push_back(static_cast<double>(parse_rational(e.get<std::string>())));
    else if (e.is_number())
      v.p.push_back(e.get<double>());
    else
      throw std::invalid_argument("float entries must be numbers or \"p/q\" strings");
  }
  validate_prob_vec(v);
  return v;
}

// ---------------------------------------------------------------------------
// Catalyst pairs (exact form only; pairs exist to be certified).
// ---------------------------------------------------------------------------

inline Json to_json(const CatalystPair<Rational>& pair) {
  Json j;
  j["schema"] = kSchemaTag;
  j["m"] = pair.m;
  j["omega_in"] = to_json(pair.omega_in);
  j["omega_out"] = to_json(pair.omega_out);
  return j;
}

inline CatalystPair<Rational> catalyst_pair_from_json(const Json& j) {
  require_schema(j);
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw std::invalid_argument("catalyst pair needs an integer \"m\"");
  CatalystPair<Rational> pair;
  pair.m = j["m"].get<std::int64_t>();
  pair.omega_in = prob_vec_exact_from_json(j.at("omega_in"));
  pair.omega_out = prob_vec_exact_from_json(j.at("omega_out"));
  validate_catalyst_pair(pair);
  return pair;
}

// ---------------------------------------------------------------------------
// Spectra. Finite spectra carry their levels verbatim; unbounded ones carry
// the family name and its parameters. A "custom" family is a live callback,
// so it serializes by name only and cannot be reconstructed from JSON.
// ---------------------------------------------------------------------------

using SpectrumVariant = std::variant<FiniteSpectrum, UnboundedSpectrum>;

inline Json spectrum_to_json(const FiniteSpectrum& s) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "finite";
  j["levels"] = s.levels;
  j["beta"] = s.beta;
  return j;
}

inline Json spectrum_to_json(const UnboundedSpectrum& s) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "unbounded";
  j["family"] = s.family;
  j["params"] = s.params;
  j["beta"] = s.beta;
  j["tail_gap"] = s.tail_gap;
  return j;
}

inline SpectrumVariant spectrum_from_json(const Json& j) {
  require_schema(j);
  if (!j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument("spectrum needs a \"kind\" of \"finite\" or \"unbounded\"");
  const auto kind = j["kind"].get<std::string>();
  const double beta = j.contains("beta") ? real_from_json(j.at("beta")) : 1.0;
  if (kind == "finite") {
    const auto& lv = j.at("levels");
    if (!lv.is_array() || lv.empty())
      throw std::invalid_argument("finite spectrum needs a non-empty \"levels\" array");
    std::vector<double> levels;
    levels.reserve(lv.size());
    for (const auto& e : lv) levels.push_back(real_from_json(e));
    return make_finite_spectrum(std::move(levels), beta);
  }
  if (kind == "unbounded") {
    const auto family = j.at("family").get<std::string>();
    std::vector<double> params;
    if (j.contains("params"))
      for (const auto& e : j.at("params")) params.push_back(real_from_json(e));
    if (family == "harmonic") {
      if (params.size() != 1)
        throw std::invalid_argument("harmonic spectrum takes params [hbar_omega]");
      return harmonic_spectrum(params[0], beta);
    }
    if (family == "linear_offset") {
      if (params.size() != 2)
        throw std::invalid_argument("linear_offset spectrum takes params [c, e0]");
      return linear_offset_spectrum(params[0], params[1], beta);
    }
    if (family == "custom")
      throw std::invalid_argument(
          "a custom spectrum is a live callback and cannot be reconstructed from JSON");
    throw std::invalid_argument("unknown spectrum family \"" + family + "\"");
  }
  throw std::invalid_argument("unknown spectrum kind \"" + kind + "\"");
}

// ---------------------------------------------------------------------------
// Reports.
// ---------------------------------------------------------------------------

inline Json to_json(const BoundReport& r) {
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = r.kind;
  j["bound"] = json_real(r.bound);
  j["convention"] = r.convention;
  j["bound_canonical"] = json_real(r.bound_canonical);
  Json inter = Json::object();
  for (const auto& [k, v] : r.intermediates) inter[k] = json_real(v);
  j["intermediates"] = inter;
  j["notes"] = r.notes;
  if (r.bound_exact) j["bound_exact"] = to_string(*r.bound_exact);
  return j;
}

inline Json to_json(const MonotonicityReport& r) {
  Json j;
  j["schema"] = kSchemaTag;
  j["pass"] = r.pass;
  j["witness_alpha"] = json_real(r.witness_alpha);
  j["gap"] = json_real(r.gap);
  j["caveat"] = r.caveat;
  return j;
}

// ---------------------------------------------------------------------------
// Transformation-check documents: (p_in, p_out, spectrum of the work system).
// ---------------------------------------------------------------------------

struct CheckFile {
  ProbVec<double> p_in;
  ProbVec<double> p_out;
  SpectrumVariant spectrum;
};

inline CheckFile check_file_from_json(const Json& j) {
  require_schema(j);
  return CheckFile{prob_vec_float_from_json(j.at("p_in")),
                   prob_vec_float_from_json(j.at("p_out")),
                   spectrum_from_json(j.at("spectrum"))};
}

inline Json to_json(const CheckFile& f) {
  Json j;
  j["schema"] = kSchemaTag;
  j["p_in"] = to_json(f.p_in);
  j["p_out"] = to_json(f.p_out);
  j["spectrum"] = std::visit([](const auto& s) { return spectrum_to_json(s); }, f.spectrum);
  return j;
}

}  // namespace thermocat
