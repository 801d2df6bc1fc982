#include "blowcone/cli.hpp"

#include <cmath>
#include <sstream>

#include "blowcone/errors.hpp"
#include "blowcone/nef_cones.hpp"
#include "blowcone/oracle.hpp"
#include "blowcone/seshadri.hpp"

namespace blowcone::cli {

using nlohmann::json;
using blowcone::to_string;

BlowupSpace ProblemSpec::space() const {
  return centers == CenterKind::Lines ? BlowupSpace::lines(n, count) : BlowupSpace::points(n, count);
}

DivisorClass ProblemSpec::divisor() const {
  if (!d || !m) throw ParseError("this command needs a divisor: fields 'd' and 'm' are required");
  return DivisorClass{*d, *m};
}

namespace {

int require_int(const json& doc, const char* key) {
  if (!doc.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  const auto& v = doc.at(key);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

Rational require_rational(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where + " must be a rational string \"p\" or \"p/q\"");
  return parse_rational(v.get<std::string>());
}

}  // namespace

ProblemSpec parse_problem(const json& doc) {
  if (!doc.is_object()) throw ParseError("problem document must be an object");
  ProblemSpec spec;
  spec.n = require_int(doc, "n");
  spec.count = require_int(doc, "count");

  if (!doc.contains("centers") || !doc.at("centers").is_string()) {
    throw ParseError("field 'centers' must be \"points\" or \"lines\"");
  }
  const auto centers = doc.at("centers").get<std::string>();
  if (centers == "lines") {
    spec.centers = CenterKind::Lines;
  } else if (centers == "points") {
    spec.centers = CenterKind::Points;
  } else {
    throw ParseError("field 'centers' must be \"points\" or \"lines\", got \"" + centers + "\"");
  }

  if (doc.contains("d")) spec.d = require_rational(doc.at("d"), "field 'd'");
  if (doc.contains("m")) {
    const auto& m = doc.at("m");
    if (!m.is_array()) throw ParseError("field 'm' must be an array of rational strings");
    std::vector<Rational> values;
    for (std::size_t i = 0; i < m.size(); ++i) {
      values.push_back(require_rational(m[i], "m[" + std::to_string(i) + "]"));
    }
    if (values.size() != static_cast<std::size_t>(spec.count)) {
      throw ParseError("field 'm' has " + std::to_string(values.size()) + " entries, count is " +
                       std::to_string(spec.count));
    }
    spec.m = std::move(values);
  }
  if (doc.contains("l")) spec.l = require_int(doc, "l");
  if (doc.contains("allow_non_ample")) {
    if (!doc.at("allow_non_ample").is_boolean()) throw ParseError("field 'allow_non_ample' must be a boolean");
    spec.allow_non_ample = doc.at("allow_non_ample").get<bool>();
  }
  if (doc.contains("tail_mode")) {
    const auto& t = doc.at("tail_mode");
    if (t == "equal") {
      spec.tail_mode = TailMode::Equal;
    } else if (t == "at-most") {
      spec.tail_mode = TailMode::AtMost;
    } else {
      throw ParseError("field 'tail_mode' must be \"equal\" or \"at-most\"");
    }
  }
  return spec;
}

json to_json(const ProblemSpec& spec) {
  json doc;
  doc["n"] = spec.n;
  doc["centers"] = spec.centers == CenterKind::Lines ? "lines" : "points";
  doc["count"] = spec.count;
  if (spec.d) doc["d"] = to_string(*spec.d);
  if (spec.m) {
    json m = json::array();
    for (const auto& mi : *spec.m) m.push_back(to_string(mi));
    doc["m"] = std::move(m);
  }
  if (spec.l) doc["l"] = *spec.l;
  if (spec.allow_non_ample) doc["allow_non_ample"] = true;
  if (spec.tail_mode == TailMode::AtMost) doc["tail_mode"] = "at-most";
  return doc;
}

std::string to_string(Status status) {
  switch (status) {
    case Status::Ok: return "ok";
    case Status::Negative: return "negative";
    case Status::Inapplicable: return "inapplicable";
    case Status::Malformed: return "malformed";
    case Status::VerificationFailure: return "verification-failure";
  }
  return "unknown";
}

int exit_code_for(const json& document) {
  const auto status = document.value("status", std::string{});
  if (status == "ok") return 0;
  if (status == "negative") return 1;
  if (status == "inapplicable") return 2;
  if (status == "malformed") return 3;
  return 4;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> names = {
      "nef check",    "nef decompose", "nef generators", "ample check", "seshadri eval",
      "seshadri bound", "lva check",   "lva bl",         "verify"};
  return names;
}

json divisor_json(const DivisorClass& D, CenterKind kind) {
  json m = json::array();
  for (const auto& mi : D.m) m.push_back(to_string(mi));
  return json{{"d", to_string(D.d)}, {"m", std::move(m)}, {"label", to_string(D, kind)}};
}

json curve_json(const CurveClass& C) {
  json b = json::array();
  for (const auto& bi : C.b) b.push_back(to_string(bi));
  return json{{"a", to_string(C.a)},
              {"b", std::move(b)},
              {"point_multiplicity", to_string(C.point_multiplicity)},
              {"label", to_string(C)}};
}

namespace {

json facet_list(const std::vector<Facet>& facets, const std::vector<std::size_t>& indices) {
  json out = json::array();
  for (auto i : indices) out.push_back(facets[i].describe());
  return out;
}

json report_json(const oracle::VerificationReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back(
        {{"input", f.input}, {"expected", f.expected}, {"got", f.got}, {"routes", f.routes}});
  }
  return json{{"checks_run", report.checks_run},
              {"failures", std::move(failures)},
              {"seed", report.seed},
              {"passed", report.passed()}};
}

Status run_nef_check(const ProblemSpec& spec, json& doc) {
  const auto space = spec.space();
  const auto verdict = is_nef(space, spec.divisor());
  const auto& facets = cone_description(space).facets();
  doc["verdict"] = verdict.nef;
  doc["tight_facets"] = facet_list(facets, verdict.tight);
  doc["violated_facets"] = facet_list(facets, verdict.violated);
  return verdict.nef ? Status::Ok : Status::Negative;
}

Status run_nef_decompose(const ProblemSpec& spec, json& doc) {
  const auto space = spec.space();
  try {
    const auto certificate = decompose(space, spec.divisor());
    json terms = json::array();
    for (const auto& t : certificate.terms) {
      terms.push_back({{"generator", divisor_json(t.generator, spec.centers)},
                       {"weight", to_string(t.weight)}});
    }
    doc["verdict"] = true;
    doc["certificate"] = std::move(terms);
    return Status::Ok;
  } catch (const NotNefError& e) {
    doc["verdict"] = false;
    doc["violated_facet"] = e.facet().describe();
    doc["violation"] = to_string(e.value());
    doc["error"] = e.what();
    return Status::Negative;
  }
}

Status run_nef_generators(const ProblemSpec& spec, json& doc) {
  const auto& cone = cone_description(spec.space());
  json facets = json::array();
  for (const auto& f : cone.facets()) facets.push_back(f.describe());
  json generators = json::array();
  for (const auto& g : cone.generators()) generators.push_back(divisor_json(g, spec.centers));
  doc["facets"] = std::move(facets);
  doc["generators"] = std::move(generators);
  return Status::Ok;
}

Status run_ample_check(const ProblemSpec& spec, json& doc) {
  const bool ample = is_ample(spec.space(), spec.divisor());
  doc["verdict"] = ample;
  return ample ? Status::Ok : Status::Negative;
}

Status run_seshadri_eval(const ProblemSpec& spec, json& doc) {
  SeshadriOptions options;
  options.allow_non_ample = spec.allow_non_ample;
  const auto result = seshadri_lines(spec.space(), spec.divisor(), options);
  doc["value"] = to_string(result.value);
  doc["ample"] = result.ample;
  json witnesses = json::array();
  for (const auto& C : result.witnesses) witnesses.push_back(curve_json(C));
  doc["witnesses"] = std::move(witnesses);
  return Status::Ok;
}

Status run_seshadri_bound(const ProblemSpec& spec, json& doc) {
  const auto space = spec.space();
  const auto L = spec.divisor();
  doc["upper_bound"] = to_string(seshadri_upper_bound_points(space, L));
  const auto root = nth_root_bound(space, L);
  std::ostringstream approx;
  approx.precision(12);
  approx << root.approx;
  doc["nth_root_bound"] = {{"radicand", to_string(root.radicand)},
                           {"n", root.n},
                           {"approx", approx.str()},
                           {"tag", "approx"}};
  return Status::Ok;
}

LvaQuery lva_query(const ProblemSpec& spec) {
  if (!spec.l) throw ParseError("lva commands need the integer field 'l'");
  return LvaQuery::make(*spec.l, spec.space(), spec.divisor());
}

json bl_json(const BlThreshold& bl) {
  return json{{"value", bl.value}, {"branch", to_string(bl.branch)}};
}

Status run_lva_check(const ProblemSpec& spec, json& doc) {
  const auto q = lva_query(spec);
  const auto verdict = is_l_very_ample(q);
  doc["applicable"] = verdict.applicable;
  doc["bl"] = bl_json(verdict.bl);
  doc["excess"] = to_string(verdict.excess);
  if (!verdict.applicable) {
    doc["verdict"] = nullptr;
    doc["error"] = "criterion not applicable: sum m_i - n d exceeds b_l";
    return Status::Inapplicable;
  }
  doc["verdict"] = verdict.very_ample;
  const auto bound = seshadri_lower_bound(q, spec.tail_mode);
  doc["seshadri_lower_bound"] = bound.bound ? json(std::to_string(*bound.bound)) : json(nullptr);
  if (!bound.bound) doc["lower_bound_reason"] = bound.reason;
  doc["assumption"] = "the lower-bound theorem's 'l-ample' hypothesis is read as l-very ample";
  return verdict.very_ample ? Status::Ok : Status::Negative;
}

Status run_lva_bl(const ProblemSpec& spec, json& doc) {
  doc["bl"] = bl_json(compute_bl(lva_query(spec)));
  return Status::Ok;
}

Status run_verify(const ProblemSpec& spec, const VerifyOptions& options, json& doc) {
  const auto space = spec.space();
  if (!space.line_theorem_supported()) {
    throw OutOfRangeError(space.name() + " is outside theorem range");
  }
  oracle::VerificationReport report;
  report.seed = options.seed;

  oracle::DivisorSampler sampler(space, options.seed);
  report.merge(oracle::verify_nef_three_ways(space, sampler.mixed(options.samples), options.seed));

  std::vector<DivisorClass> ample;
  for (std::size_t i = 0; i < options.samples; ++i) ample.push_back(sampler.ample());
  report.merge(oracle::verify_seshadri_formula(space, ample, options.seed));
  report.merge(oracle::verify_decomposition_identities(space));

  if (options.grid) {
    std::vector<DivisorClass> chunk;
    auto flush = [&] {
      report.merge(oracle::verify_nef_three_ways(space, chunk, options.seed));
      chunk.clear();
    };
    oracle::visit_integer_grid(space, *options.grid, [&](const DivisorClass& D) {
      chunk.push_back(D);
      if (chunk.size() == 4096) flush();
    });
    flush();
  }

  const auto redundant = oracle::facet_redundancy(space);
  const auto& facets = cone_description(space).facets();
  json implied = json::array();
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (redundant[i]) implied.push_back(facets[i].describe());
  }

  doc["report"] = report_json(report);
  doc["implied_facets"] = std::move(implied);
  return report.passed() ? Status::Ok : Status::VerificationFailure;
}

Outcome finish(json doc, Status status) {
  doc["status"] = to_string(status);
  const int code = exit_code_for(doc);
  doc["exit_code"] = code;
  return Outcome{std::move(doc), code};
}

}  // namespace

Outcome run(const std::string& command, const ProblemSpec& spec, const VerifyOptions& verify) {
  json doc;
  doc["command"] = command;
  doc["input"] = to_json(spec);
  try {
    Status status;
    if (command == "nef check") {
      status = run_nef_check(spec, doc);
    } else if (command == "nef decompose") {
      status = run_nef_decompose(spec, doc);
    } else if (command == "nef generators") {
      status = run_nef_generators(spec, doc);
    } else if (command == "ample check") {
      status = run_ample_check(spec, doc);
    } else if (command == "seshadri eval") {
      status = run_seshadri_eval(spec, doc);
    } else if (command == "seshadri bound") {
      status = run_seshadri_bound(spec, doc);
    } else if (command == "lva check") {
      status = run_lva_check(spec, doc);
    } else if (command == "lva bl") {
      status = run_lva_bl(spec, doc);
    } else if (command == "verify") {
      status = run_verify(spec, verify, doc);
    } else {
      throw ParseError("unknown command '" + command + "'");
    }
    return finish(std::move(doc), status);
  } catch (const OutOfRangeError& e) {
    doc["error"] = e.what();
    return finish(std::move(doc), Status::Inapplicable);
  } catch (const NotAmpleError& e) {
    doc["error"] = e.what();
    return finish(std::move(doc), Status::Inapplicable);
  } catch (const std::invalid_argument& e) {
    // parse errors and argument checks
    doc["error"] = e.what();
    return finish(std::move(doc), Status::Malformed);
  } catch (const std::logic_error& e) {
    doc["error"] = std::string("internal verification failure: ") + e.what();
    return finish(std::move(doc), Status::VerificationFailure);
  }
}

Outcome run(const std::string& command, const json& problem, const VerifyOptions& verify) {
  ProblemSpec spec;
  try {
    spec = parse_problem(problem);
  } catch (const ParseError& e) {
    json doc{{"command", command}, {"error", e.what()}};
    return finish(std::move(doc), Status::Malformed);
  }
  return run(command, spec, verify);
}

}  // namespace blowcone::cli
