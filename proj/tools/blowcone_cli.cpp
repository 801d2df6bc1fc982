// Command-line front end. Every command prints one JSON document on stdout;
// diagnostics go to stderr. Exit codes: 0 ok, 1 negative verdict,
// 2 inapplicable or out of range, 3 malformed input, 4 verification failure.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "blowcone/cli.hpp"
#include "blowcone/errors.hpp"

namespace {

using nlohmann::json;

struct InlineSpec {
  std::string spec_path;
  int n = 0;
  int lines = -1;
  int points = -1;
  std::string d;
  std::string m;
  int l = 0;
  bool allow_non_ample = false;
  std::string tail_mode;
  std::string output = "json";
};

void add_problem_options(CLI::App* app, InlineSpec& in) {
  app->add_option("--spec", in.spec_path, "problem document (JSON); '-' reads stdin");
  app->add_option("--n", in.n, "ambient dimension");
  app->add_option("--lines", in.lines, "number of blown-up general lines");
  app->add_option("--points", in.points, "number of blown-up general points");
  app->add_option("--d", in.d, "coefficient of H, as p or p/q");
  app->add_option("--m", in.m, "comma-separated exceptional coefficients");
  app->add_option("--l", in.l, "l for l-very ampleness");
  app->add_flag("--allow-non-ample", in.allow_non_ample,
                "evaluate the Seshadri formula for non-ample classes");
  app->add_option("--tail-mode", in.tail_mode, "equal | at-most")
      ->check(CLI::IsMember({"equal", "at-most"}));
  app->add_option("--output", in.output, "output format")->check(CLI::IsMember({"json"}));
}

json read_document(const std::string& path) {
  std::stringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw blowcone::ParseError("cannot open spec file '" + path + "'");
    buffer << file.rdbuf();
  }
  try {
    return json::parse(buffer.str());
  } catch (const json::parse_error& e) {
    throw blowcone::ParseError(std::string("spec is not valid JSON: ") + e.what());
  }
}

// Inline flags override fields of the spec document.
json build_problem(const InlineSpec& in) {
  json doc = in.spec_path.empty() ? json::object() : read_document(in.spec_path);
  if (in.n) doc["n"] = in.n;
  if (in.lines >= 0 && in.points >= 0) throw blowcone::ParseError("give --lines or --points, not both");
  if (in.lines >= 0) {
    doc["centers"] = "lines";
    doc["count"] = in.lines;
  }
  if (in.points >= 0) {
    doc["centers"] = "points";
    doc["count"] = in.points;
  }
  if (!in.d.empty()) doc["d"] = in.d;
  if (!in.m.empty()) {
    json m = json::array();
    std::stringstream ss(in.m);
    std::string item;
    while (std::getline(ss, item, ',')) m.push_back(item);
    doc["m"] = std::move(m);
  } else if (doc.contains("count") && doc["count"] == 0 && doc.contains("d") && !doc.contains("m")) {
    doc["m"] = json::array();
  }
  if (in.l) doc["l"] = in.l;
  if (in.allow_non_ample) doc["allow_non_ample"] = true;
  if (!in.tail_mode.empty()) doc["tail_mode"] = in.tail_mode;
  return doc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nef cones, Seshadri constants and l-very ampleness on blow-ups of P^n"};
  app.require_subcommand(1);

  InlineSpec in;
  blowcone::cli::VerifyOptions verify;
  std::string command;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& full,
                  const std::string& help) {
    auto* sub = parent->add_subcommand(name, help);
    add_problem_options(sub, in);
    sub->callback([&command, full] { command = full; });
    return sub;
  };

  auto* nef = app.add_subcommand("nef", "nef cone queries")->require_subcommand(1);
  leaf(nef, "check", "nef check", "facet test with tight and violated facets");
  leaf(nef, "decompose", "nef decompose", "non-negative generator decomposition");
  leaf(nef, "generators", "nef generators", "facets and generators of the cone");
  auto* ample = app.add_subcommand("ample", "ampleness")->require_subcommand(1);
  leaf(ample, "check", "ample check", "strict facet positivity");
  auto* seshadri = app.add_subcommand("seshadri", "Seshadri constants")->require_subcommand(1);
  leaf(seshadri, "eval", "seshadri eval", "closed form at a general point (line blow-ups)");
  leaf(seshadri, "bound", "seshadri bound", "upper bounds on point blow-ups");
  auto* lva = app.add_subcommand("lva", "l-very ampleness on point blow-ups")->require_subcommand(1);
  leaf(lva, "check", "lva check", "criterion, applicability and Seshadri lower bound");
  leaf(lva, "bl", "lva bl", "the b_l threshold");
  auto* ver = leaf(&app, "verify", "verify", "run the brute-force oracles");
  ver->add_option("--seed", verify.seed, "sampler seed");
  ver->add_option("--samples", verify.samples, "random samples per suite");
  int grid = -1;
  ver->add_option("--grid", grid, "also check every integer divisor with entries in [0, grid]");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int cli_code = app.exit(e);
    if (cli_code == 0) return 0;  // --help
    json doc{{"status", "malformed"}, {"exit_code", 3}, {"error", e.what()}};
    std::cout << doc.dump(2) << "\n";
    return 3;
  }
  if (grid >= 0) verify.grid = grid;

  blowcone::cli::Outcome outcome;
  try {
    outcome = blowcone::cli::run(command, build_problem(in), verify);
  } catch (const blowcone::ParseError& e) {
    json doc{{"command", command}, {"status", "malformed"}, {"exit_code", 3}, {"error", e.what()}};
    outcome = {std::move(doc), 3};
  }
  if (outcome.document.contains("error")) {
    std::cerr << "blowcone: " << outcome.document["error"].get<std::string>() << "\n";
  }
  std::cout << outcome.document.dump(2) << "\n";
  return outcome.exit_code;
}
