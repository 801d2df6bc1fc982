#include <gtest/gtest.h>

#include "blowcone/cli.hpp"
#include "blowcone/errors.hpp"

using namespace blowcone;
using namespace blowcone::cli;
using nlohmann::json;

namespace {

json problem(int n, const char* centers, int count, const char* d, std::vector<std::string> m) {
  return json{{"n", n}, {"centers", centers}, {"count", count}, {"d", d}, {"m", m}};
}

}  // namespace

TEST(Cli, SeshadriEvalFourLines) {
  const auto out = run("seshadri eval", problem(3, "lines", 4, "5", {"1", "1", "1", "1"}));
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.document["value"], "1");
  EXPECT_EQ(out.document["status"], "ok");
  ASSERT_EQ(out.document["witnesses"].size(), 1u);
  EXPECT_EQ(out.document["witnesses"][0]["b"], json({"1", "1", "1", "1"}));
}

TEST(Cli, NefCheckZeroDivisor) {
  const auto out = run("nef check", problem(3, "lines", 2, "0", {"0", "0"}));
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.document["verdict"], true);
  EXPECT_FALSE(out.document["tight_facets"].empty());
}

TEST(Cli, VerifyFourSpaceSevenLines) {
  ProblemSpec spec;
  spec.n = 4;
  spec.count = 7;
  const auto out = run("verify", spec, {.seed = 7, .samples = 500});
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.document["report"]["failures"].size(), 0u);
  EXPECT_EQ(out.document["report"]["seed"], 7);
  EXPECT_EQ(out.document["implied_facets"], json({"d >= 0"}));
}

TEST(Cli, OneCasePerExitCode) {
  EXPECT_EQ(run("nef check", problem(3, "lines", 1, "2", {"1"})).exit_code, 0);
  EXPECT_EQ(run("nef check", problem(3, "lines", 1, "2", {"3"})).exit_code, 1);
  EXPECT_EQ(run("nef check", problem(3, "lines", 7, "9", {"1", "1", "1", "1", "1", "1", "1"})).exit_code, 2);
  EXPECT_EQ(run("nef check", problem(3, "lines", 1, "2", {"1/0"})).exit_code, 3);
  // Verification failures cannot be provoked from valid input; the status
  // mapping is what the executable uses for its exit code.
  EXPECT_EQ(exit_code_for(json{{"status", "verification-failure"}}), 4);
  EXPECT_EQ(exit_code_for(json{{"status", "ok"}}), 0);
  EXPECT_EQ(exit_code_for(json{{"status", "negative"}}), 1);
  EXPECT_EQ(exit_code_for(json{{"status", "inapplicable"}}), 2);
  EXPECT_EQ(exit_code_for(json{{"status", "malformed"}}), 3);
}

TEST(Cli, MalformedInputs) {
  for (const json& doc : {
           json::array(),
           json{{"n", 3}, {"centers", "lines"}},
           json{{"n", "3"}, {"centers", "lines"}, {"count", 1}},
           json{{"n", 3}, {"centers", "curves"}, {"count", 1}},
           problem(3, "lines", 2, "1", {"1"}),
           problem(3, "lines", 1, "1.5", {"1"}),
           json{{"n", 3}, {"centers", "lines"}, {"count", 1}, {"d", 1}, {"m", {"1"}}},
           json{{"n", 3}, {"centers", "points"}, {"count", 1}, {"d", "3"}, {"m", {"1"}}, {"tail_mode", "some"}},
       }) {
    const auto out = run("nef check", doc);
    EXPECT_EQ(out.exit_code, 3) << doc.dump();
    EXPECT_EQ(out.document["status"], "malformed");
    EXPECT_TRUE(out.document.contains("error"));
  }
  EXPECT_EQ(run("frobnicate", problem(3, "lines", 1, "2", {"1"})).exit_code, 3);
  // a divisor-less document for a divisor command
  EXPECT_EQ(run("ample check", json{{"n", 3}, {"centers", "lines"}, {"count", 1}}).exit_code, 3);
  // l missing for lva
  EXPECT_EQ(run("lva check", problem(3, "points", 1, "3", {"1"})).exit_code, 3);
}

TEST(Cli, NotAmpleIsInapplicableUnlessAllowed) {
  auto doc = problem(3, "lines", 5, "4", {"1", "1", "1", "1", "1"});
  EXPECT_EQ(run("seshadri eval", doc).exit_code, 2);
  doc["allow_non_ample"] = true;
  const auto out = run("seshadri eval", doc);
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.document["value"], "0");
  EXPECT_EQ(out.document["ample"], false);
}

TEST(Cli, DecomposeCertificate) {
  const auto out = run("nef decompose", problem(3, "lines", 5, "5", {"2", "1", "1", "1", "1"}));
  EXPECT_EQ(out.exit_code, 0);
  ASSERT_EQ(out.document["certificate"].size(), 2u);
  EXPECT_EQ(out.document["certificate"][0]["generator"]["label"], "4H - E1 - E2 - E3 - E4 - E5");

  const auto bad = run("nef decompose", problem(3, "lines", 6, "3", {"1", "1", "1", "1", "0", "0"}));
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_EQ(bad.document["verdict"], false);
  EXPECT_TRUE(bad.document.contains("violated_facet"));
}

TEST(Cli, GeneratorsAndLva) {
  json space{{"n", 4}, {"centers", "lines"}, {"count", 7}};
  const auto gens = run("nef generators", space);
  EXPECT_EQ(gens.exit_code, 0);
  EXPECT_EQ(gens.document["facets"].size(), 43u);

  auto q = problem(3, "points", 3, "5", {"2", "2", "1"});
  q["l"] = 1;
  const auto lva = run("lva check", q);
  EXPECT_EQ(lva.exit_code, 0);
  EXPECT_EQ(lva.document["verdict"], true);
  EXPECT_EQ(lva.document["seshadri_lower_bound"], "1");
  EXPECT_EQ(run("lva bl", q).document["bl"]["value"], -2);

  auto inapplicable = problem(2, "points", 9, "3", std::vector<std::string>(9, "1"));
  inapplicable["l"] = 1;
  const auto out = run("lva check", inapplicable);
  EXPECT_EQ(out.exit_code, 2);
  EXPECT_TRUE(out.document["verdict"].is_null());
}

TEST(Cli, SeshadriBoundPoints) {
  const auto out = run("seshadri bound", problem(3, "points", 2, "3", {"1", "1"}));
  EXPECT_EQ(out.exit_code, 0);
  EXPECT_EQ(out.document["upper_bound"], "2");
  EXPECT_EQ(out.document["nth_root_bound"]["radicand"], "25");
  EXPECT_EQ(run("seshadri bound", problem(3, "lines", 1, "3", {"1"})).exit_code, 2);
}

TEST(Cli, ProblemRoundTrip) {
  json doc{{"n", 3},          {"centers", "points"}, {"count", 2},
           {"d", "7/2"},      {"m", {"1", "1/3"}},   {"l", 2},
           {"allow_non_ample", true}, {"tail_mode", "at-most"}};
  EXPECT_EQ(to_json(parse_problem(doc)), doc);
  // canonical forms survive; non-canonical text is normalised
  json loose = doc;
  loose["d"] = "14/4";
  EXPECT_EQ(to_json(parse_problem(loose)), doc);
  EXPECT_THROW(parse_problem(json{{"n", 3}}), ParseError);
}

TEST(Cli, EveryCommandIsDispatched) {
  auto doc = problem(3, "points", 1, "3", {"1"});
  doc["l"] = 1;
  for (const auto& command : commands()) {
    const auto out = run(command, doc);
    EXPECT_NE(out.document.value("error", std::string{}).find("unknown command"), 0u) << command;
    EXPECT_TRUE(out.document.contains("status")) << command;
  }
}
