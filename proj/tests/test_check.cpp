#include <regex>
#include <set>

#include "doctest.h"
#include "lmkit/check.hpp"
#include "lmkit/error.hpp"

using namespace lmkit;

TEST_CASE("registry ids are unique and cover the expected checks") {
  const std::set<std::string> expected = {
      "algebra-axioms",       "boolean-elements",
      "sigma-representation", "duality-round-trip",
      "space-axioms",         "chain-decomposition",
      "dual-hom",             "convex-clopen",
      "subset-lemma",         "congruence-correspondence",
      "theta-correspondence", "principal-forms",
      "principal-theta-forms", "principal-convex-criterion",
      "principal-intersection", "filter-correspondence",
      "preimage-identity",    "nonprincipality-vacuity",
      "boolean-criterion",    "boolean-count",
      "boolean-filter-form",  "boolean-is-principal",
      "boolean-permutable",   "boolean-uniformity",
      "principal-is-boolean", "lmn-coincidence",
      "simplicity-spot-checks"};
  std::set<std::string> seen;
  for (const auto& def : check_registry()) {
    CHECK(seen.insert(def.id).second);
    CHECK_FALSE(def.statement.empty());
    for (const auto& suite : def.suites) CHECK(known_suite(suite));
  }
  CHECK(seen == expected);
}

TEST_CASE("default corpus") {
  const auto corpus = default_corpus();
  REQUIRE(corpus.size() == 10);
  CHECK(corpus[0].name == "chain-2");
  CHECK(corpus[3].name == "chain-5");
  CHECK(corpus[7].name == "product-5-5");
  CHECK(corpus[7].algebra.size() == 25);
  CHECK(corpus[8].name == "lm3-two-chain");
  CHECK(corpus[8].algebra.n == 3);
  CHECK(corpus[9].name == "lm3-mixed");
  CHECK(corpus[9].algebra.size() == 6);
  for (const auto& entry : corpus)
    CHECK(validate_axioms(entry.algebra).ok());
}

TEST_CASE("run_suite passes on a small corpus") {
  std::vector<NamedAlgebra> corpus = {{"chain-2", make_chain(2)},
                                      {"chain-3", make_chain(3)}};
  const CheckReport report = run_suite(corpus, "all");
  CHECK(report.ok());
  CHECK(report.checks.size() == check_registry().size());
  for (const auto& check : report.checks) CHECK(check.failures.empty());
}

TEST_CASE("suite selection filters checks") {
  std::vector<NamedAlgebra> corpus = {{"chain-2", make_chain(2)}};
  const CheckReport report = run_suite(corpus, "boolean");
  CHECK(report.ok());
  CHECK(report.checks.size() < check_registry().size());
  for (const auto& check : report.checks) {
    CHECK(std::find(check.suites.begin(), check.suites.end(), "boolean") !=
          check.suites.end());
  }
  CHECK_THROWS_AS(run_suite(corpus, "nonsense"), InvalidInput);
}

TEST_CASE("reports are canonical regardless of the execution seed") {
  std::vector<NamedAlgebra> corpus = {{"chain-2", make_chain(2)},
                                      {"chain-3", make_chain(3)},
                                      {"lm3-two-chain", make_chain(2)}};
  CheckOptions first;
  first.seed = 1;
  CheckOptions second;
  second.seed = 99;
  const CheckReport r1 = run_suite(corpus, "duality", first);
  const CheckReport r2 = run_suite(corpus, "duality", second);
  CHECK(r1.to_text() == r2.to_text());

  auto strip_elapsed = [](const CheckReport& r) {
    const std::string dumped = r.to_json().dump();
    return std::regex_replace(dumped,
                              std::regex("\"elapsed_ms\":[^,}]*"), "");
  };
  CHECK(strip_elapsed(r1) == strip_elapsed(r2));
}

TEST_CASE("skipped inputs are carried into the report") {
  std::vector<NamedAlgebra> corpus = {{"chain-2", make_chain(2)}};
  const CheckReport report =
      run_suite(corpus, "all", {}, {{"broken.json", "algebra violates L4"}});
  CHECK(report.ok());
  REQUIRE(report.skipped.size() == 1);
  CHECK(report.to_json()["skipped"][0]["input"] == "broken.json");
  CHECK(report.to_text().find("skipped broken.json") != std::string::npos);
}

TEST_CASE("report json carries the stable schema") {
  std::vector<NamedAlgebra> corpus = {{"chain-2", make_chain(2)}};
  const nlohmann::json j = run_suite(corpus, "principal").to_json();
  CHECK(j["format"] == "lmkit-report/1");
  CHECK(j["suite"] == "principal");
  CHECK(j["corpus"].size() == 1);
  for (const auto& check : j["checks"]) {
    CHECK(check.contains("id"));
    CHECK(check.contains("statement"));
    CHECK(check.contains("instances"));
    CHECK(check.contains("failures"));
    CHECK(check.contains("elapsed_ms"));
  }
  CHECK(j["summary"]["failed"] == 0);
}
