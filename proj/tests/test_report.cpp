#include <catch2/catch_amalgamated.hpp>

#include "fincat/verify.hpp"

using namespace fincat;

namespace {

nlohmann::json scrubbed(report::Report r) {
  r.seconds = 0;
  return r.to_json();
}

}  // namespace

TEST_CASE("reports are reproducible modulo timing") {
  const auto handle = corpus::build_corpus("semilattice:B2");
  report::Report first = verify::run_verify("example-1.1", handle,
                                            kDefaultSpanCap);
  report::Report second = verify::run_verify(
      "example-1.1", corpus::build_corpus("semilattice:B2"), kDefaultSpanCap);
  first.command = second.command = "verify example-1.1";
  REQUIRE(scrubbed(first).dump() == scrubbed(second).dump());
}

TEST_CASE("report JSON carries the published structure") {
  const auto handle = corpus::build_corpus("finset:2,4");
  report::Report r = verify::run_check(handle, ConditionTag::kBalanced);
  r.command = "check balanced --corpus finset:2,4";
  const nlohmann::json j = r.to_json();
  // Mirrors docs/report.schema.json.
  REQUIRE(j.at("command").is_string());
  REQUIRE(j.at("engine_version").is_string());
  REQUIRE(j.at("timing_seconds").is_number());
  REQUIRE(j.at("verdicts").is_array());
  for (const auto& v : j.at("verdicts")) {
    REQUIRE(v.at("name").is_string());
    const std::string status = v.at("status").get<std::string>();
    REQUIRE((status == "PASS" || status == "FAIL" ||
             status == "NOT APPLICABLE"));
    REQUIRE(v.at("detail").is_string());
    REQUIRE(v.at("witnesses").is_array());
  }
}

TEST_CASE("every theorem id dispatches to exactly one verifier") {
  for (const char* id : {"2.5", "3.2", "4.9", "5.1", "6.3", "6.5", "6.6",
                         "7.1a", "7.1b", "example-1.1"}) {
    const auto handle =
        corpus::build_corpus(verify::default_corpus_for(id));
    const report::Report r =
        verify::run_verify(id, handle, kDefaultSpanCap);
    REQUIRE_FALSE(r.verdicts.empty());
    REQUIRE_FALSE(r.any_failure());
  }
  REQUIRE_THROWS_AS(
      verify::run_verify("9.9", corpus::build_corpus("finset:2,4"),
                         kDefaultSpanCap),
      std::invalid_argument);
}
