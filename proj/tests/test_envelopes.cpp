#include <catch2/catch_amalgamated.hpp>

#include "fincat/corpus.hpp"
#include "fincat/envelopes.hpp"

using namespace fincat;

TEST_CASE("the top of a semilattice is its only injective object") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  for (Obj o = 0; o < 4; ++o) {
    REQUIRE(is_injective(b2, o) == (o == 3));
  }
}

TEST_CASE("terminal objects are injective") {
  const Tier t = corpus::finset_tier(2, 4);
  REQUIRE(is_injective(t, 1));
}

TEST_CASE("injective equals projective in the opposite") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  for (Obj o = 0; o < 4; ++o) {
    REQUIRE(is_injective(b2, o) == is_projective(b2.opposite(), o));
  }
}

TEST_CASE("maps to the top of B2 are injective envelopes") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  for (Obj o = 0; o < 4; ++o) {
    // The only envelope out of o is its map to the top.
    for (Obj target = 0; target < 4; ++target) {
      for (Mor m : b2.hom(o, target)) {
        REQUIRE(is_injective_envelope(b2, m) == (target == 3));
      }
    }
  }
}

TEST_CASE("identities on injective objects are envelopes") {
  const Category b2 = cats::semilattice_category(cats::boolean_b2());
  REQUIRE(is_injective_envelope(b2, b2.identity(3)));
  REQUIRE_FALSE(is_injective_envelope(b2, b2.identity(0)));
}

TEST_CASE("indiscrete pointed preorders are the injectives") {
  const LocalizationTriple l = corpus::pointed_finpreord_localization(2, 4);
  auto pre = std::dynamic_pointer_cast<const cats::PreorderProvider>(
      l.c_tier.ambient.provider_ptr());
  for (Obj o : l.c_tier.core) {
    const bool indiscrete =
        pre->mask_of(o) == cats::PreorderProvider::full_mask(pre->points_of(o));
    REQUIRE(is_injective(l.c_tier, o) == indiscrete);
  }
  // The identity-carried map into the indiscrete refinement is an envelope.
  const Mor carried = pre->encode(pre->discrete_object(2),
                                  pre->indiscrete_object(2), {0, 1});
  REQUIRE(is_injective_envelope(l.c_tier, carried));
}

TEST_CASE("unit certificates on the pointed preorder localization") {
  const LocalizationTriple l = corpus::pointed_finpreord_localization(2, 4);
  // Monos in pointed sets split by retracting onto the basepoint.
  REQUIRE(check_condition(l.x_tier, ConditionTag::kMonoSplit).holds);
  auto pre = std::dynamic_pointer_cast<const cats::PreorderProvider>(
      l.c_tier.ambient.provider_ptr());
  for (Obj o : l.c_tier.core) {
    const EnvelopeCertificate cert = envelope_via_unit(l, o);
    REQUIRE(cert.applicable);
    REQUIRE(cert.valid());
    const bool already_indiscrete =
        pre->mask_of(o) == cats::PreorderProvider::full_mask(pre->points_of(o));
    REQUIRE(cert.component_iso == already_indiscrete);
    REQUIRE(cert.object_injective == already_indiscrete);
  }
}

TEST_CASE("the unpointed tier refuses unit envelopes with witness 0 -> 1") {
  const LocalizationTriple l = corpus::finpreord_localization(2, 4);
  const EnvelopeCertificate cert = envelope_via_unit(l, l.c_tier.core.at(2));
  REQUIRE_FALSE(cert.applicable);
  REQUIRE(cert.blocker.find("0->1") != std::string::npos);
}

TEST_CASE("counit certificates cover the unpointed tier") {
  const LocalizationTriple l = corpus::finpreord_localization(2, 4);
  auto pre = std::dynamic_pointer_cast<const cats::PreorderProvider>(
      l.c_tier.ambient.provider_ptr());
  for (Obj o : l.c_tier.core) {
    const EnvelopeCertificate cert = cover_via_counit(l, o);
    REQUIRE(cert.applicable);
    REQUIRE(cert.valid());
    const bool discrete =
        pre->mask_of(o) ==
        cats::PreorderProvider::diagonal_mask(pre->points_of(o));
    REQUIRE(cert.component_iso == discrete);
    REQUIRE(cert.object_injective == discrete);  // projective, dually
  }
  // Projectives are exactly the discrete preorders.
  for (Obj o : l.c_tier.core) {
    const bool discrete =
        pre->mask_of(o) ==
        cats::PreorderProvider::diagonal_mask(pre->points_of(o));
    REQUIRE(is_projective(l.c_tier, o) == discrete);
  }
}

TEST_CASE("covers on the semilattice collapse start from the bottom") {
  const LocalizationTriple l =
      corpus::semilattice_localization(cats::boolean_b2());
  for (Obj o : l.c_tier.core) {
    const EnvelopeCertificate cert = cover_via_counit(l, o);
    REQUIRE(cert.applicable);
    REQUIRE(cert.valid());
    REQUIRE(cert.component_iso == (o == 0));  // only the bottom is projective
  }
}

TEST_CASE("natural envelopes on the pointed preorder localization") {
  const LocalizationTriple l = corpus::pointed_finpreord_localization(2, 4);
  const TheoremReport report = verify_natural_envelopes(l);
  REQUIRE(report.checks.size() == 3);
  for (const TheoremCheck& check : report.checks) {
    INFO(check.id);
    for (const auto& f : check.failures) INFO(f);
    REQUIRE(check.applicable);
    REQUIRE(check.passed);
  }
}

TEST_CASE("natural envelopes on the semilattice collapse") {
  const LocalizationTriple l =
      corpus::semilattice_localization(cats::boolean_b2());
  const TheoremReport report = verify_natural_envelopes(l);
  for (const TheoremCheck& check : report.checks) {
    INFO(check.id);
    REQUIRE(check.ok());
  }
}

TEST_CASE("natural envelopes degrade to nothing on the identity triple") {
  const Tier t = corpus::finset_tier(2, 4);
  const TheoremReport report =
      verify_natural_envelopes(identity_localization(t));
  // mono_split fails in finite sets, so the whole suite is inapplicable.
  REQUIRE(report.checks.size() == 1);
  REQUIRE_FALSE(report.checks.front().applicable);
  REQUIRE(report.all_ok());
}

TEST_CASE("any two envelopes of the same object are isomorphic") {
  const LocalizationTriple l = corpus::pointed_finpreord_localization(2, 4);
  const Category& c = l.c_tier.ambient;
  for (Obj o : l.c_tier.core) {
    std::vector<Obj> hulls;
    for (Obj target : l.c_tier.core) {
      for (Mor m : c.hom(o, target)) {
        if (is_injective_envelope(l.c_tier, m)) hulls.push_back(target);
      }
    }
    for (Obj a : hulls) {
      for (Obj b : hulls) {
        bool iso_found = false;
        for (Mor m : c.hom(a, b)) {
          if (is_iso(c, m)) {
            iso_found = true;
            break;
          }
        }
        REQUIRE(iso_found);
      }
    }
  }
}

TEST_CASE("over split-mono targets the identity triple sees only injectives") {
  const Tier t = corpus::pointed_finset_tier(2, 4);
  const LocalizationTriple l = identity_localization(t);
  for (Obj o : t.core) {
    REQUIRE(is_injective(t, o));  // every mono splits, so everything extends
    const EnvelopeCertificate cert = envelope_via_unit(l, o);
    REQUIRE(cert.valid());
    REQUIRE(cert.component_iso);
  }
  const TheoremReport report = verify_natural_envelopes(l);
  REQUIRE(report.all_ok());
}
