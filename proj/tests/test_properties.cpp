#include <catch2/catch_amalgamated.hpp>

#include "property_suites.hpp"

TEST_CASE("property suites hold on the whole corpus") {
  for (const props::SuiteResult& result : props::run_all_property_suites()) {
    INFO(result.suite);
    for (const auto& v : result.violations) INFO(v);
    CHECK(result.violations.empty());
  }
}

TEST_CASE("essential monos in finite sets are the isos plus 0 -> 1, small") {
  using namespace fincat;
  const Tier t = corpus::finset_tier(2, 4);
  const MonoClassRegistry reg = st_mono_e(t);
  for (Mor m : reg.essential) {
    REQUIRE((is_iso(t.ambient, m) || m == make_mor(0, 1, 0)));
  }
  REQUIRE(reg.is_essential(make_mor(0, 1, 0)));
}
