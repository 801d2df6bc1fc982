#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "blowcone/lvample.hpp"
#include "blowcone/space_model.hpp"

namespace blowcone::cli {

/// Problem document:
///
///   {"n": 3, "centers": "lines", "count": 4, "d": "5", "m": ["1","1","1","1"],
///    "l": 1, "allow_non_ample": false, "tail_mode": "equal"}
///
/// Rationals are strings "p" or "p/q". d and m may be omitted for commands
/// that only need the space (nef generators, verify).
struct ProblemSpec {
  int n = 0;
  CenterKind centers = CenterKind::Lines;
  int count = 0;
  std::optional<Rational> d;
  std::optional<std::vector<Rational>> m;
  std::optional<int> l;
  bool allow_non_ample = false;
  TailMode tail_mode = TailMode::Equal;

  BlowupSpace space() const;
  /// Throws ParseError when d or m is missing.
  DivisorClass divisor() const;
};

/// Throws ParseError on any schema violation.
ProblemSpec parse_problem(const nlohmann::json& doc);
nlohmann::json to_json(const ProblemSpec& spec);

struct VerifyOptions {
  std::uint64_t seed = 0;
  std::size_t samples = 1000;
  /// Exhaustive integer grid bound, if any.
  std::optional<int> grid;
};

enum class Status { Ok, Negative, Inapplicable, Malformed, VerificationFailure };

std::string to_string(Status status);

/// Exit code carried by the document's "status" field:
/// ok 0, negative 1, inapplicable 2, malformed 3, verification-failure 4.
int exit_code_for(const nlohmann::json& document);

struct Outcome {
  nlohmann::json document;
  int exit_code;
};

const std::vector<std::string>& commands();

/// Runs one command ("nef check", "seshadri eval", ...) and returns the
/// structured result. Never throws for bad input; errors become documents
/// with an "error" field and the matching status.
Outcome run(const std::string& command, const ProblemSpec& spec, const VerifyOptions& verify = {});

/// Parses then runs; malformed documents give status malformed.
Outcome run(const std::string& command, const nlohmann::json& problem,
            const VerifyOptions& verify = {});

nlohmann::json divisor_json(const DivisorClass& D, CenterKind kind);
nlohmann::json curve_json(const CurveClass& C);

}  // namespace blowcone::cli
