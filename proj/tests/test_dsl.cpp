#include <catch2/catch_amalgamated.hpp>

#include "fincat/dsl.hpp"

using namespace fincat;

TEST_CASE("a headerless one-object file is the terminal category") {
  const dsl::FincatDocument doc =
      dsl::parse("obj A\nid A = idA\ncomp idA . idA = idA");
  REQUIRE(doc.categories.size() == 1);
  const Category& c = doc.categories.front().category;
  REQUIRE(c.object_count() == 1);
  REQUIRE(c.hom_size(0, 0) == 1);
  REQUIRE(validate(c).ok());
}

TEST_CASE("identity composites may be omitted") {
  const char* text = R"(category walking-arrow
obj A
obj B
mor f : A -> B
id A = idA
id B = idB
)";
  const dsl::FincatDocument doc = dsl::parse(text);
  const Category& c = doc.categories.front().category;
  REQUIRE(validate(c).ok());
  REQUIRE(c.hom_size(0, 1) == 1);
}

TEST_CASE("a missing composite names the composable pair") {
  const char* text = R"(category bad
obj A
mor e : A -> A
id A = idA
)";
  try {
    dsl::parse(text);
    FAIL("expected a diagnostic");
  } catch (const dsl::ParseError& e) {
    REQUIRE(std::string(e.what()).find("e") != std::string::npos);
    REQUIRE(std::string(e.what()).find("not defined") != std::string::npos);
  }
}

TEST_CASE("duplicate and dangling names are diagnosed with positions") {
  try {
    dsl::parse("obj A\nobj A\n");
    FAIL("expected a diagnostic");
  } catch (const dsl::ParseError& e) {
    REQUIRE(e.diagnostic().line == 2);
    REQUIRE(std::string(e.what()).find("duplicate") != std::string::npos);
  }
  try {
    dsl::parse("obj A\nmor f : A -> B\n");
    FAIL("expected a diagnostic");
  } catch (const dsl::ParseError& e) {
    REQUIRE(e.diagnostic().line == 2);
    REQUIRE(std::string(e.what()).find("unknown object") != std::string::npos);
  }
  REQUIRE_THROWS_AS(dsl::parse("frobnicate A\n"), dsl::ParseError);
}

TEST_CASE("render round-trips to the same category") {
  const char* text = R"(category pair
obj A
obj B
mor f : A -> B
mor g : A -> B
id A = idA
id B = idB
)";
  const dsl::FincatDocument doc = dsl::parse(text);
  const dsl::FincatDocument again = dsl::parse(dsl::render(doc));
  REQUIRE(again.categories.size() == doc.categories.size());
  const Category& c = doc.categories.front().category;
  const Category& d = again.categories.front().category;
  REQUIRE(c.object_count() == d.object_count());
  for (Obj a = 0; a < c.object_count(); ++a) {
    for (Obj b = 0; b < c.object_count(); ++b) {
      REQUIRE(c.hom_size(a, b) == d.hom_size(a, b));
      for (Mor m : c.hom(a, b)) {
        REQUIRE(c.morphism_name(m) == d.morphism_name(m));
      }
    }
  }
  // And the canonical text is a fixed point of parse-render.
  REQUIRE(dsl::render(again) == dsl::render(doc));
}

TEST_CASE("functor and adjunction blocks parse and validate") {
  const char* text = R"(category One
obj *
id * = i

category Two
obj A
obj B
mor u : A -> B
id A = idA
id B = idB

functor F : One -> Two
fobj * = A
fmor i = idA

functor U : Two -> One
fobj A = *
fobj B = *
fmor u = i

adjunction L : F -| U
unit * = i
counit A = idA
counit B = u
)";
  const dsl::FincatDocument doc = dsl::parse(text);
  REQUIRE(doc.functors.size() == 2);
  REQUIRE(doc.adjunctions.size() == 1);
}

TEST_CASE("a non-adjunction is rejected at parse time") {
  const char* text = R"(category One
obj *
id * = i

category Two
obj A
obj B
mor u : A -> B
id A = idA
id B = idB

functor F : One -> Two
fobj * = B
fmor i = idB

functor U : Two -> One
fobj A = *
fobj B = *
fmor u = i

adjunction L : F -| U
unit * = i
counit A = idA
counit B = idB
)";
  REQUIRE_THROWS_AS(dsl::parse(text), dsl::ParseError);
}

TEST_CASE("a functor block must map every non-identity morphism") {
  const char* text = R"(category C
obj A
mor e : A -> A
id A = idA
comp e . e = idA
comp e . idA = e
comp idA . e = e
comp idA . idA = idA

category D
obj X
id X = idX

functor F : C -> D
fobj A = X
)";
  try {
    dsl::parse(text);
    FAIL("expected a diagnostic");
  } catch (const dsl::ParseError& e) {
    REQUIRE(std::string(e.what()).find("does not map morphism") !=
            std::string::npos);
  }
}

TEST_CASE("functor blocks round-trip through render") {
  const char* text = R"(category One
obj *
id * = i

category Two
obj A
obj B
mor u : A -> B
id A = idA
id B = idB

functor F : One -> Two
fobj * = A
fmor i = idA
)";
  const dsl::FincatDocument doc = dsl::parse(text);
  const dsl::FincatDocument again = dsl::parse(dsl::render(doc));
  REQUIRE(again.functors.size() == 1);
  REQUIRE(dsl::render(again) == dsl::render(doc));
}
