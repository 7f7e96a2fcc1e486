#pragma once

// Command-line front end. run() parses an argument vector, dispatches to a
// subcommand and writes the report to `out`; diagnostics go to `err`.
//
// Exit codes: 0 success/PASS, 1 violation, Inconclusive or internal
// contradiction, 2 invalid input, 3 open case.

#include <cstdint>
#include <iostream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "unicrit/audit.hpp"
#include "unicrit/certify.hpp"
#include "unicrit/classify.hpp"
#include "unicrit/errors.hpp"
#include "unicrit/json_io.hpp"
#include "unicrit/modp.hpp"
#include "unicrit/proportion.hpp"
#include "unicrit/semigroup.hpp"
#include "unicrit/text.hpp"

namespace unicrit {

enum ExitCode : int { kExitOk = 0, kExitViolation = 1, kExitInput = 2, kExitOpenCase = 3 };

struct RunConfig {
  std::string subcommand;
  std::string format = "json";
  unsigned jobs = 0;
  bool full = false;
  std::size_t max_bits = kDefaultMaxBits;
  bool no_timing = false;
  bool progress = false;

  std::string p = "2";
  std::string audit_p = "3";
  std::string c;
  std::string set;
  std::string prefix;
  std::string word;
  std::string asserted_case;
  std::string family;
  std::uint64_t qmax = 1000;
  std::size_t maxlen = 8;
  bool stats = false;
  std::size_t verify_depth = 3;
  std::string claim;
  std::optional<long long> range;
  std::string curve;
  std::size_t cap = kDefaultDegreeCap;
};

namespace cli_detail {

struct Output {
  Json report;
  std::string csv;   // empty when the subcommand has no CSV form
  std::string text;
  int code = kExitOk;
};

inline unsigned parse_exponent(const std::string& text) {
  const BigInt p = parse_bigint(text);
  if (p < 2 || !fits_i64(p) || p > 1'000'000) throw InvalidExponent("exponent must be a prime, got " + text);
  const auto value = static_cast<unsigned>(p.get_si());
  require_prime_exponent(value);
  return value;
}

inline std::string yes_no(bool v) { return v ? "yes" : "no"; }

inline std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

inline std::string coeff_text(const std::vector<BigInt>& cs, bool full) {
  std::vector<std::string> parts;
  for (const BigInt& c : cs) parts.push_back(digest(c, full));
  return "[" + join(parts, ", ") + "]";
}

inline std::string trail_text(const std::vector<TrailEntry>& trail, bool full) {
  std::ostringstream out;
  for (const auto& e : trail) {
    out << "  [" << to_string(e.kind) << "] " << e.check;
    if (e.value) out << " = " << digest(*e.value, full);
    out << " -> " << e.outcome << '\n';
  }
  return out.str();
}

inline Output do_classify(const RunConfig& cfg) {
  const unsigned p = parse_exponent(cfg.p);
  Output o;
  std::ostringstream text;
  if (cfg.c.find('/') != std::string::npos) {
    const RationalTypeReport r = classify_type(p, parse_rational(cfg.c));
    auto list = [](const std::vector<Rational>& v) {
      Json a = Json::array();
      for (const auto& x : v) a.push_back(to_string(x));
      return a;
    };
    o.report = {{"p", r.p},
                {"c", to_string(r.c)},
                {"irreducible_over_Q", r.irreducible_over_Q},
                {"type1_witnesses", list(r.type1_witnesses)},
                {"type2_witnesses", list(r.type2_witnesses)},
                {"is_special", r.is_special()}};
  } else {
    const TypeReport r = classify_type(p, parse_bigint(cfg.c));
    o.report = to_json(r, cfg.full);
  }
  const Json& r = o.report;
  const std::string c = r["c"].get<std::string>();
  text << "x^" << p << (c.front() == '-' ? " - " + c.substr(1) : " + " + c) << '\n'
       << "  irreducible over Q: " << yes_no(r["irreducible_over_Q"].get<bool>()) << '\n'
       << "  Type I witnesses:  " << r["type1_witnesses"].dump() << '\n'
       << "  Type II witnesses: " << r["type2_witnesses"].dump() << '\n'
       << "  special: " << yes_no(r["is_special"].get<bool>()) << '\n';
  o.text = text.str();
  std::ostringstream csv;
  csv << "p,c,irreducible_over_Q,type1_witnesses,type2_witnesses,is_special\n"
      << p << ',' << r["c"].get<std::string>() << ',' << r["irreducible_over_Q"].dump() << ",\""
      << r["type1_witnesses"].dump() << "\",\"" << r["type2_witnesses"].dump() << "\"," << r["is_special"].dump()
      << '\n';
  o.csv = csv.str();
  return o;
}

inline std::string certificate_text(const Certificate& c, bool full) {
  std::ostringstream text;
  text << "generators: p=" << c.p << " c=" << coeff_text(c.coeffs, full) << '\n'
       << "scope: " << to_string(c.scope) << '\n'
       << "case: " << (c.case_tag ? to_string(*c.case_tag) : "(self-certified prefix)") << '\n'
       << "prefix: " << format_word(c.prefix) << '\n';
  if (c.word) text << "word: " << format_word(*c.word) << '\n';
  text << "trail:\n" << trail_text(c.trail, full);
  for (const auto& n : c.notes) text << "note: " << n << '\n';
  return text.str();
}

inline Output do_certify(const RunConfig& cfg) {
  const GeneratorSet S = load_generator_set(cfg.set);
  const Certificate cert = pick_universal_prefix(S);
  Output o;
  o.report = to_json(cert, cfg.full);
  o.text = certificate_text(cert, cfg.full);
  return o;
}

inline Output do_verify(const RunConfig& cfg) {
  const GeneratorSet S = load_generator_set(cfg.set);
  VerifyOptions options;
  options.limits.max_bits = cfg.max_bits;
  if (!cfg.asserted_case.empty()) {
    options.asserted_case = parse_case_tag(cfg.asserted_case);
    if (!options.asserted_case) throw ParseError("unknown case tag '" + cfg.asserted_case + "'");
  }
  const VerifyResult result = verify_word_irreducible(S, parse_word(cfg.prefix), parse_word(cfg.word), options);
  Output o;
  o.report = to_json(result, cfg.full);
  if (const auto* cert = std::get_if<Certificate>(&result)) {
    o.text = "irreducible over Q\n" + certificate_text(*cert, cfg.full);
  } else {
    const auto& inc = std::get<Inconclusive>(result);
    o.text = "inconclusive at chain level " + std::to_string(inc.level) + ": value " + digest(inc.value, cfg.full) +
             " is a p-th power\n" + trail_text(inc.trail, cfg.full);
    o.code = kExitViolation;
  }
  return o;
}

inline Output do_modscan(const RunConfig& cfg) {
  Output o;
  ScanReport report;
  bool expect_all_reducible = false;
  if (!cfg.family.empty()) {
    const auto comma = cfg.family.find(',');
    if (comma == std::string::npos) throw ParseError("--family expects p,t");
    const unsigned p = parse_exponent(cfg.family.substr(0, comma));
    const BigInt t = parse_bigint(cfg.family.substr(comma + 1));
    const FamilyCertificate fam = local_global_family(p, t);
    report = local_global_scan(fam.set, fam.certificate.prefix, cfg.qmax, cfg.jobs);
    report.t = t;
    expect_all_reducible = true;
  } else {
    if (cfg.set.empty() || cfg.word.empty()) throw ParseError("modscan needs --family or both --set and --word");
    const GeneratorSet S = load_generator_set(cfg.set);
    report = local_global_scan(S, parse_word(cfg.word), cfg.qmax, cfg.jobs);
  }
  o.report = to_json(report, cfg.full);
  o.csv = to_csv(report);
  std::ostringstream text;
  text << "word " << format_word(report.word) << " over p=" << report.p << " c=" << coeff_text(report.coeffs, cfg.full)
       << ", primes q <= " << report.q_max << " (q != p)\n";
  std::vector<std::string> irreducible_at;
  for (const auto& e : report.entries) {
    if (e.irreducible) irreducible_at.push_back(std::to_string(e.q));
  }
  text << "  primes scanned: " << report.entries.size() << '\n'
       << "  irreducible mod: " << (irreducible_at.empty() ? "none" : join(irreducible_at, " ")) << '\n'
       << "  reducible mod every scanned prime: " << yes_no(report.all_reducible) << '\n';
  o.text = text.str();
  if (expect_all_reducible && !report.all_reducible) o.code = kExitViolation;
  return o;
}

inline Output do_enumerate(const RunConfig& cfg) {
  const GeneratorSet S = load_generator_set(cfg.set);
  Output o;
  if (cfg.stats) {
    EvalLimits limits;
    limits.max_bits = cfg.max_bits;
    const ProportionStats s = proportion_stats(S, cfg.maxlen, cfg.verify_depth, cfg.jobs, limits);
    o.report = to_json(s, cfg.full);
    o.csv = to_csv(s);
    std::ostringstream text;
    text << "prefix " << format_word(s.certificate.prefix) << " ("
         << (s.certificate.case_tag ? to_string(*s.certificate.case_tag) : "?") << "), r=" << s.r << '\n'
         << "words of length 1.." << s.max_len << ": " << to_string(s.total_words) << '\n'
         << "certified (extend the prefix): " << to_string(s.certified_words) << '\n'
         << "fraction: " << to_string(s.fraction) << " = " << s.fraction.get_d() << '\n'
         << "bound r^-|prefix|: " << to_string(s.bound) << '\n'
         << "per-length fraction equals the bound: " << yes_no(s.per_length_meets_bound) << '\n'
         << "cumulative fraction meets the bound: " << yes_no(s.fraction >= s.bound) << '\n'
         << "cumulative fraction meets r^-5 = " << to_string(s.theorem_bound) << ": "
         << yes_no(s.fraction >= s.theorem_bound) << '\n'
         << "chain-verified extensions (suffix length <= " << s.verify_depth << "): " << s.verified
         << ", inconclusive: " << s.inconclusive << '\n';
    o.text = text.str();
    if (s.fraction < s.theorem_bound || s.inconclusive != 0 || !s.per_length_meets_bound) o.code = kExitViolation;
    return o;
  }
  if (count_words(S.size(), cfg.maxlen) > 100'000) throw DomainError("more than 100000 words; use --stats");
  const Certificate cert = pick_universal_prefix(S);
  Json words = Json::array();
  std::ostringstream text, csv;
  csv << "word,length,certified\n";
  for (const Word& w : enumerate_words(S, cfg.maxlen)) {
    const bool certified = w.starts_with(cert.prefix);
    words.push_back({{"word", format_word(w)}, {"length", w.size()}, {"certified", certified}});
    text << format_word(w) << (certified ? "  certified" : "") << '\n';
    csv << '"' << format_word(w) << "\"," << w.size() << ',' << (certified ? "true" : "false") << '\n';
  }
  o.report = {{"prefix", format_word(cert.prefix)}, {"max_len", cfg.maxlen}, {"words", std::move(words)}};
  o.text = text.str();
  o.csv = csv.str();
  return o;
}

inline Output do_expand(const RunConfig& cfg) {
  const GeneratorSet S = load_generator_set(cfg.set);
  const Word w = parse_word(cfg.word);
  const DensePoly f = expand_word(S, w, cfg.cap);
  Output o;
  o.report = {{"word", format_word(w)}, {"degree", f.degree()}, {"coeffs", detail::big_list(f.coeffs, cfg.full)}};
  o.text = format_poly(f) + '\n';
  std::ostringstream csv;
  csv << "power,coefficient\n";
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) csv << k << ',' << to_string(f.coeffs[k]) << '\n';
  o.csv = csv.str();
  return o;
}

inline long long default_range(const std::string& claim) {
  if (claim == "square_classification") return 200;
  if (claim == "refinement_lemmas") return 40;
  if (claim == "pth_classification") return 2000;
  if (claim == "diophantine") return 60;
  if (claim == "curves") return 1000;
  if (claim == "quartic_octic") return 20;
  if (claim == "witness_bound") return 2000;
  if (claim == "type_coincidence") return 1000;
  if (claim == "freeness") return 4;
  return 0;
}

inline Output do_audit(const RunConfig& cfg, std::ostream& err) {
  const std::string& claim = cfg.claim;
  const auto known = audit_claims();
  if (std::find(known.begin(), known.end(), claim) == known.end()) {
    throw UnknownClaim("unknown claim '" + claim + "'; expected one of " + join(known, ", "));
  }
  const long long range = cfg.range.value_or(default_range(claim));
  AuditOptions opt;
  opt.jobs = cfg.jobs;
  if (cfg.progress) {
    opt.progress = [&err](const std::string& name, std::size_t done, std::size_t total) {
      err << name << ": chunk " << done << "/" << total << '\n';
    };
  }
  std::vector<AuditReport> reports;
  if (claim == "square_classification") {
    reports.push_back(audit_square_classification(BigInt(static_cast<long>(-range)), BigInt(-2), opt));
  } else if (claim == "refinement_lemmas") {
    reports.push_back(audit_refinement_lemmas(range, opt));
  } else if (claim == "pth_classification") {
    reports.push_back(audit_pth_classification(parse_exponent(cfg.audit_p), BigInt(static_cast<long>(range)), opt));
  } else if (claim == "diophantine") {
    reports.push_back(audit_diophantine(range, opt));
  } else if (claim == "curves") {
    const std::vector<std::string> ids = cfg.curve.empty() ? curve_ids() : std::vector<std::string>{cfg.curve};
    for (const auto& id : ids) reports.push_back(curve_point_search(builtin_curve(id), range, opt));
  } else if (claim == "quartic_octic") {
    reports.push_back(audit_quartic_octic(range, opt));
  } else if (claim == "witness_bound") {
    reports.push_back(audit_witness_bound(range, opt));
  } else if (claim == "type_coincidence") {
    reports.push_back(audit_type_coincidence(range));
  } else if (claim == "freeness") {
    if (range < 1 || range > 12) throw DomainError("freeness range is a maximum word length in [1, 12]");
    reports.push_back(audit_freeness(load_generator_set(cfg.set), static_cast<std::size_t>(range)));
  }
  Output o;
  o.report = Json::array();
  std::ostringstream text, csv;
  bool pass = true;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const AuditReport& r = reports[i];
    pass = pass && r.pass;
    o.report.push_back(to_json(r, !cfg.no_timing));
    const std::string rows = to_csv(r);
    csv << (i == 0 ? rows : rows.substr(rows.find('\n') + 1));
    text << r.claim << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
    for (const auto& [k, v] : r.params) text << "  " << k << " = " << v << '\n';
    for (const auto& s : r.subchecks) {
      text << "  [" << (s.pass() ? "ok" : "FAIL") << "] " << s.name << " (" << s.checked << " checked";
      if (!s.note.empty()) text << "; " << s.note;
      text << ")\n";
    }
    for (const auto& v : r.violations) {
      text << "  violation:";
      for (const auto& [k, val] : v.fields) text << ' ' << k << '=' << val;
      text << " (" << v.note << ")\n";
    }
    for (const auto& n : r.notes) text << "  note: " << n << '\n';
  }
  o.text = text.str();
  o.csv = csv.str();
  if (!pass) o.code = kExitViolation;
  return o;
}

inline Json echo_config(const CLI::App& app, const CLI::App& sub) {
  Json config;
  config["subcommand"] = sub.get_name();
  auto add = [&](const CLI::App& a) {
    for (const CLI::Option* opt : a.get_options()) {
      const std::string name = opt->get_name(false, true);
      if (name.empty() || name == "--help" || name == "-h") continue;
      const std::string key = opt->get_lnames().empty() ? name : opt->get_lnames().front();
      if (opt->count() > 0) {
        const auto& res = opt->results();
        config[key] = opt->get_type_size() == 0 ? Json(true) : Json(join(res, ","));
      } else if (!opt->get_default_str().empty()) {
        config[key] = opt->get_default_str();
      }
    }
  };
  add(app);
  add(sub);
  return config;
}

}  // namespace cli_detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Irreducible elements of unicritical composition semigroups", "unicrit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}))
      ->capture_default_str();
  app.add_option("--jobs", cfg.jobs, "Worker threads (0 = logical CPUs)")->capture_default_str();
  app.add_flag("--full", cfg.full, "Print big integers in full");
  app.add_option("--max-bits", cfg.max_bits, "Bit-size guard for orbit values")->capture_default_str();
  app.add_flag("--no-timing", cfg.no_timing, "Report seconds as 0 for reproducible output");
  app.add_flag("--progress", cfg.progress, "Stream audit progress to stderr");

  auto* classify = app.add_subcommand("classify", "Irreducibility and Type I/II witnesses of x^p + c");
  classify->add_option("--p", cfg.p, "Exponent")->capture_default_str();
  classify->add_option("--c", cfg.c, "Constant term (integer or a/b)")->required();

  auto* certify = app.add_subcommand("certify", "Universal irreducible prefix for a generator set");
  certify->add_option("--set", cfg.set, "Generator set: JSON file or inline {\"p\":..,\"c\":[..]}")->required();

  auto* verify = app.add_subcommand("verify", "Chain-check the word prefix o word");
  verify->add_option("--set", cfg.set, "Generator set")->required();
  verify->add_option("--prefix", cfg.prefix, "Prefix word, e.g. [0,0,1,0]")->required();
  verify->add_option("--word", cfg.word, "Extension word")->required();
  verify->add_option("--case", cfg.asserted_case, "Asserted recipe case");

  auto* modscan = app.add_subcommand("modscan", "Irreducibility of a word modulo primes q <= Q");
  modscan->add_option("--family", cfg.family, "Local-global family p,t");
  modscan->add_option("--set", cfg.set, "Generator set");
  modscan->add_option("--word", cfg.word, "Word");
  modscan->add_option("--qmax", cfg.qmax, "Largest prime")->capture_default_str();

  auto* enumerate = app.add_subcommand("enumerate", "Words up to a length and the certified proportion");
  enumerate->add_option("--set", cfg.set, "Generator set")->required();
  enumerate->add_option("--maxlen", cfg.maxlen, "Maximum word length")->capture_default_str();
  enumerate->add_flag("--stats", cfg.stats, "Report the certified proportion");
  enumerate->add_option("--verify-depth", cfg.verify_depth, "Chain-check suffixes up to this length")
      ->capture_default_str();

  auto* audit = app.add_subcommand("audit", "Brute-force re-verification of a claim");
  audit->add_option("--claim", cfg.claim, "Claim: " + cli_detail::join(audit_claims(), ", "))->required();
  audit->add_option("--range", cfg.range, "Search range (claim specific)");
  audit->add_option("--p", cfg.audit_p, "Exponent for pth_classification")->capture_default_str();
  audit->add_option("--curve", cfg.curve, "Curve id for the curves claim (default all)");
  audit->add_option("--set", cfg.set, "Generator set for the freeness claim");

  auto* expand = app.add_subcommand("expand", "Coefficients of a word's composition");
  expand->add_option("--set", cfg.set, "Generator set")->required();
  expand->add_option("--word", cfg.word, "Word")->required();
  expand->add_option("--cap", cfg.cap, "Degree cap")->capture_default_str();

  std::vector<const char*> argv{"unicrit"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  CLI::App* sub = app.get_subcommands().front();
  cfg.subcommand = sub->get_name();
  try {
    cli_detail::Output o;
    if (sub == classify) o = cli_detail::do_classify(cfg);
    if (sub == certify) o = cli_detail::do_certify(cfg);
    if (sub == verify) o = cli_detail::do_verify(cfg);
    if (sub == modscan) o = cli_detail::do_modscan(cfg);
    if (sub == enumerate) o = cli_detail::do_enumerate(cfg);
    if (sub == audit) o = cli_detail::do_audit(cfg, err);
    if (sub == expand) o = cli_detail::do_expand(cfg);

    if (cfg.format == "json") {
      Json doc;
      doc["schema_version"] = kSchemaVersion;
      doc["config"] = cli_detail::echo_config(app, *sub);
      doc["report"] = std::move(o.report);
      out << doc.dump(2) << '\n';
    } else if (cfg.format == "csv") {
      if (o.csv.empty()) throw DomainError("csv output is not available for " + cfg.subcommand);
      out << o.csv;
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::OpenCase) return kExitOpenCase;
    return is_input_error(e.kind()) ? kExitInput : kExitViolation;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitViolation;
  }
}

}  // namespace unicrit
