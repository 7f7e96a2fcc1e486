#pragma once

// JSON documents for every report type. Objects keep insertion order so equal
// inputs always serialize to identical bytes. Big integers are strings,
// abbreviated by digest() unless `full` is set.

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "unicrit/audit.hpp"
#include "unicrit/bigint.hpp"
#include "unicrit/certify.hpp"
#include "unicrit/classify.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/modp.hpp"
#include "unicrit/proportion.hpp"
#include "unicrit/semigroup.hpp"
#include "unicrit/text.hpp"

namespace unicrit {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

namespace detail {

inline Json big_list(const std::vector<BigInt>& values, bool full) {
  Json out = Json::array();
  for (const BigInt& v : values) out.push_back(digest(v, full));
  return out;
}

inline Json fields_object(const std::vector<std::pair<std::string, std::string>>& fields) {
  Json out = Json::object();
  for (const auto& [k, v] : fields) out[k] = v;
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Generator sets

/// {"p": int, "c": [decimal strings or integers]}
inline GeneratorSet generator_set_from_json(const Json& doc) {
  if (!doc.is_object() || !doc.contains("p") || !doc.contains("c")) {
    throw ParseError("generator set must be an object with keys \"p\" and \"c\"");
  }
  if (!doc["p"].is_number_integer() || doc["p"].get<long long>() < 2) {
    throw ParseError("\"p\" must be an integer >= 2");
  }
  const auto p = doc["p"].get<long long>();
  if (!doc["c"].is_array()) throw ParseError("\"c\" must be an array");
  std::vector<BigInt> coeffs;
  for (const auto& item : doc["c"]) {
    if (item.is_string()) {
      coeffs.push_back(parse_bigint(item.get<std::string>()));
    } else if (item.is_number_integer()) {
      coeffs.emplace_back(std::to_string(item.get<long long>()));
    } else {
      throw ParseError("coefficients must be decimal strings or integers");
    }
  }
  return make_generator_set(static_cast<unsigned>(p), std::move(coeffs));
}

/// Accepts inline JSON (starting with '{') or a path to a JSON file.
inline GeneratorSet load_generator_set(const std::string& spec) {
  std::string text = spec;
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || spec[first] != '{') {
    std::ifstream in(spec);
    if (!in) throw ParseError("cannot open generator set file '" + spec + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid generator set JSON: ") + e.what());
  }
  return generator_set_from_json(doc);
}

inline Json to_json(const GeneratorSet& S, bool full = false) {
  Json out;
  out["p"] = S.p();
  out["c"] = detail::big_list({S.coeffs().begin(), S.coeffs().end()}, full);
  return out;
}

// ---------------------------------------------------------------------------
// classify

inline Json to_json(const TypeReport& r, bool full = false) {
  Json out;
  out["p"] = r.p;
  out["c"] = digest(r.c, full);
  out["irreducible_over_Q"] = r.irreducible_over_Q;
  out["type1_witnesses"] = detail::big_list(r.type1_witnesses, full);
  out["type2_witnesses"] = detail::big_list(r.type2_witnesses, full);
  out["is_special"] = r.is_special();
  return out;
}

// ---------------------------------------------------------------------------
// certify

inline Json to_json(const TrailEntry& e, bool full = false) {
  Json out;
  out["kind"] = to_string(e.kind);
  out["check"] = e.check;
  if (e.value) {
    out["value"] = digest(*e.value, false);
    if (full) out["value_full"] = to_string(*e.value);
  }
  out["ok"] = e.ok;
  out["outcome"] = e.outcome;
  return out;
}

inline Json trail_json(const std::vector<TrailEntry>& trail, bool full) {
  Json out = Json::array();
  for (const auto& e : trail) out.push_back(to_json(e, full));
  return out;
}

inline Json to_json(const Certificate& c, bool full = false) {
  Json out;
  out["kind"] = "certificate";
  out["case_tag"] = c.case_tag ? Json(to_string(*c.case_tag)) : Json(nullptr);
  out["scope"] = to_string(c.scope);
  out["prefix"] = format_word(c.prefix);
  if (c.word) out["word"] = format_word(*c.word);
  out["generators"] = {{"p", c.p}, {"c", detail::big_list(c.coeffs, full)}};
  out["trail"] = trail_json(c.trail, full);
  out["notes"] = c.notes;
  return out;
}

inline Json to_json(const Inconclusive& r, bool full = false) {
  Json out;
  out["kind"] = "inconclusive";
  out["level"] = r.level;
  out["value"] = digest(r.value, false);
  if (full) out["value_full"] = to_string(r.value);
  out["trail"] = trail_json(r.trail, full);
  return out;
}

inline Json to_json(const VerifyResult& r, bool full = false) {
  return std::visit([&](const auto& v) { return to_json(v, full); }, r);
}

// ---------------------------------------------------------------------------
// modp

inline Json to_json(const ScanReport& r, bool full = false) {
  Json out;
  out["p"] = r.p;
  out["t"] = r.t ? Json(digest(*r.t, full)) : Json(nullptr);
  out["generators"] = detail::big_list(r.coeffs, full);
  out["word"] = format_word(r.word);
  out["q_max"] = r.q_max;
  Json entries = Json::array();
  for (const auto& e : r.entries) entries.push_back({{"q", e.q}, {"irreducible", e.irreducible}});
  out["entries"] = std::move(entries);
  out["all_reducible"] = r.all_reducible;
  return out;
}

inline std::string to_csv(const ScanReport& r) {
  std::ostringstream out;
  out << "p,t,word,q_max,q,irreducible,all_reducible\n";
  const std::string t = r.t ? to_string(*r.t) : "";
  for (const auto& e : r.entries) {
    out << r.p << ',' << t << ",\"" << format_word(r.word) << "\"," << r.q_max << ',' << e.q << ','
        << (e.irreducible ? "true" : "false") << ',' << (r.all_reducible ? "true" : "false") << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// enumerate --stats

inline Json to_json(const ProportionStats& s, bool full = false) {
  Json out;
  out["generators"] = {{"p", s.certificate.p}, {"c", detail::big_list(s.certificate.coeffs, full)}};
  out["prefix"] = format_word(s.certificate.prefix);
  out["case_tag"] = s.certificate.case_tag ? Json(to_string(*s.certificate.case_tag)) : Json(nullptr);
  out["r"] = s.r;
  out["max_len"] = s.max_len;
  out["total_words"] = to_string(s.total_words);
  out["certified_words"] = to_string(s.certified_words);
  out["fraction"] = to_string(s.fraction);
  out["fraction_decimal"] = s.fraction.get_d();
  out["bound"] = to_string(s.bound);
  out["per_length_meets_bound"] = s.per_length_meets_bound;
  out["cumulative_meets_bound"] = s.fraction >= s.bound;
  out["theorem_bound"] = to_string(s.theorem_bound);
  out["meets_theorem_bound"] = s.fraction >= s.theorem_bound;
  Json rows = Json::array();
  for (const auto& row : s.per_length) {
    rows.push_back({{"length", row.length},
                    {"total", to_string(row.total)},
                    {"certified", to_string(row.certified)},
                    {"fraction", to_string(row.fraction)}});
  }
  out["per_length"] = std::move(rows);
  out["enumerated"] = s.enumerated;
  out["verify_depth"] = s.verify_depth;
  out["verified"] = s.verified;
  out["inconclusive"] = s.inconclusive;
  return out;
}

inline std::string to_csv(const ProportionStats& s) {
  std::ostringstream out;
  out << "length,total,certified,fraction\n";
  for (const auto& row : s.per_length) {
    out << row.length << ',' << to_string(row.total) << ',' << to_string(row.certified) << ','
        << to_string(row.fraction) << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// audit

inline Json to_json(const AuditReport& r, bool timing = true) {
  Json out;
  out["claim"] = r.claim;
  out["params"] = detail::fields_object(r.params);
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    Json item = detail::fields_object(v.fields);
    item["note"] = v.note;
    violations.push_back(std::move(item));
  }
  out["violations"] = std::move(violations);
  Json subs = Json::array();
  for (const auto& s : r.subchecks) {
    Json item{{"name", s.name}, {"checked", s.checked}, {"violations", s.violations}, {"pass", s.pass()}};
    if (!s.note.empty()) item["note"] = s.note;
    subs.push_back(std::move(item));
  }
  out["subchecks"] = std::move(subs);
  out["findings"] = r.findings;
  out["notes"] = r.notes;
  out["pass"] = r.pass;
  out["seconds"] = timing ? r.seconds : 0.0;
  return out;
}

inline std::string to_csv(const AuditReport& r) {
  std::ostringstream out;
  out << "claim,subcheck,checked,violations,pass\n";
  for (const auto& s : r.subchecks) {
    out << r.claim << ",\"" << s.name << "\"," << s.checked << ',' << s.violations << ','
        << (s.pass() ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace unicrit
