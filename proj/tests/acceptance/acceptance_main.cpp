// Acceptance suite: one criterion per line, PASS or FAIL, with timing.
// Exit status is the number of failed criteria (0 = all green).

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "fincat/verify.hpp"
#include "property_suites.hpp"

namespace {

using namespace fincat;

int failures = 0;

void criterion(int number, const std::string& description, double budget_s,
               const std::function<bool(std::string&)>& body) {
  const auto started = std::chrono::steady_clock::now();
  std::string note;
  bool ok = false;
  try {
    ok = body(note);
  } catch (const std::exception& e) {
    ok = false;
    note = e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  if (seconds >= budget_s) {
    ok = false;
    note += (note.empty() ? "" : "; ") + std::string("over time budget");
  }
  if (!ok) ++failures;
  std::printf("CRITERION %d: %s (%.2fs / %.0fs) - %s%s%s\n", number,
              ok ? "PASS" : "FAIL", seconds, budget_s, description.c_str(),
              note.empty() ? "" : " | ", note.c_str());
  std::fflush(stdout);
}

bool all_pass(const report::Report& r, std::string& note) {
  for (const auto& v : r.verdicts) {
    if (v.status == report::Status::kFail) {
      note = v.name;
      return false;
    }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "semilattice B2: stable class, trivial localization, envelopes",
            1.0, [](std::string& note) {
              const auto handle = corpus::build_corpus("semilattice:B2");
              const auto r = verify::verify_example_11(handle, kDefaultSpanCap);
              if (r.verdicts.size() != 5) {
                note = "expected five verdicts";
                return false;
              }
              return all_pass(r, note);
            });

  criterion(2, "finite-set essential-mono census on core <= 3, ambient <= 9",
            5.0, [](std::string& note) {
              const Tier t = corpus::finset_tier(3, 9);
              const MonoClassRegistry reg = st_mono_e(t);
              if (reg.essential.size() != 11) {
                note = "expected 11 essential monos, got " +
                       std::to_string(reg.essential.size());
                return false;
              }
              std::size_t isos = 0;
              for (Mor m : reg.essential) {
                if (is_iso(t.ambient, m)) {
                  ++isos;
                } else if (m != make_mor(0, 1, 0)) {
                  note = "unexpected essential mono " +
                         t.ambient.morphism_name(m);
                  return false;
                }
              }
              if (isos != 10) {  // 1 + 1 + 2 + 6 automorphisms
                note = "expected 10 isos among the essentials";
                return false;
              }
              return true;
            });

  criterion(3,
            "condition matrix: finite sets, pointed sets with initial, "
            "abelian fragment",
            10.0,
            [](std::string& note) { return all_pass(verify::verify_63(), note); });

  criterion(4,
            "stable essential monos = maps inverted by the points functor; "
            "localization is an equivalence",
            60.0, [](std::string& note) {
              const LocalizationTriple l = corpus::finpreord_localization(2, 4);
              for (Mor m : core_codomain_morphisms(l.c_tier)) {
                const bool stable =
                    is_pb_stable_essential_mono(l.c_tier, m).value;
                const bool inverted =
                    is_iso(l.x_tier.ambient, l.forward.map(m));
                if (stable != inverted) {
                  note = "discrepancy at " + l.c_tier.ambient.morphism_name(m);
                  return false;
                }
              }
              const MonoClassRegistry reg = st_mono_e(l.c_tier);
              const SpecBuildResult spec = spec_build(l.c_tier, reg);
              if (!spec.ok()) {
                note = spec.failures.front();
                return false;
              }
              auto pre =
                  std::dynamic_pointer_cast<const cats::PreorderProvider>(
                      l.c_tier.ambient.provider_ptr());
              for (Obj i = 0; i < spec.spec.cat().object_count(); ++i) {
                for (Obj j = 0; j < spec.spec.cat().object_count(); ++j) {
                  const auto p = pre->points_of(spec.spec.objects()[i]);
                  const auto q = pre->points_of(spec.spec.objects()[j]);
                  if (spec.spec.cat().hom_size(i, j) != oracles::ipow(q, p)) {
                    note = "hom-class count mismatch";
                    return false;
                  }
                }
              }
              const InducedFunctorResult fbar = induced_functor(
                  spec.spec, l.c_tier, reg.pb_stable, l.forward);
              if (!fbar.ok() ||
                  !is_equivalence(*fbar.functor, all_objects(spec.spec.cat()),
                                  l.x_tier.core)) {
                note = "induced functor is no equivalence";
                return false;
              }
              return true;
            });

  criterion(5,
            "stable class = bimorphisms = dual stable class; the three "
            "localizations are pairwise equivalent",
            120.0, [](std::string& note) {
              const LocalizationTriple l = corpus::finpreord_localization(2, 4);
              const TheoremReport six = verify_section6(l);
              for (const TheoremCheck& check : six.checks) {
                if (!check.applicable || !check.passed) {
                  note = "section-6 check " + check.id + " failed: " +
                         (check.blocker.empty()
                              ? (check.failures.empty() ? "?"
                                                        : check.failures[0])
                              : check.blocker);
                  return false;
                }
              }

              // The duality functor Spec(C) -> Spec(C^op)^op, built through
              // pushout fractions and certified as an equivalence.
              const Category& c = l.c_tier.ambient;
              const MonoClassRegistry reg = st_mono_e(l.c_tier);
              const SpecBuildResult spec = spec_build(l.c_tier, reg);
              const LocalizationTriple op = opposite_triple(l);
              const MonoClassRegistry op_reg = st_mono_e(op.c_tier);
              const SpecBuildResult op_spec = spec_build(op.c_tier, op_reg);
              if (!spec.ok() || !op_spec.ok()) {
                note = "a localization failed to build";
                return false;
              }
              const Category op_spec_op = op_spec.spec.cat().opposite();
              const std::vector<Obj> candidates = all_objects(c);

              auto dual_class =
                  [&](const SpanFraction& span) -> std::optional<Mor> {
                const PushoutResult po =
                    tier_pushout(l.c_tier, span.s, span.f, candidates);
                if (!po.present) return std::nullopt;
                const SpanFraction dual{opposite_mor(po.from_right),
                                        opposite_mor(po.from_left)};
                const auto cls = op_spec.spec.class_of(dual);
                if (!cls) return std::nullopt;
                return opposite_mor(*cls);
              };

              auto object_map = std::make_shared<std::vector<Obj>>();
              for (Obj o : spec.spec.objects()) {
                object_map->push_back(op_spec.spec.spec_object_of(o));
              }
              auto mor_map = std::make_shared<std::map<Mor, Mor>>();
              const Category& q = spec.spec.cat();
              for (Obj i = 0; i < q.object_count(); ++i) {
                for (Obj j = 0; j < q.object_count(); ++j) {
                  for (Mor cls : q.hom(i, j)) {
                    std::optional<Mor> image;
                    for (const SpanFraction& span : spec.spec.members(cls)) {
                      const auto value = dual_class(span);
                      if (!value) {
                        note = "a fraction admits no dual fraction";
                        return false;
                      }
                      if (!image) {
                        image = value;
                      } else if (*image != *value) {
                        note = "dualization depends on the representative";
                        return false;
                      }
                    }
                    mor_map->emplace(cls, *image);
                  }
                }
              }
              const Functor duality(
                  "duality", q, op_spec_op,
                  [object_map](Obj o) { return object_map->at(o); },
                  [mor_map](Mor m) { return mor_map->at(m); });
              if (!functor_violations(duality, all_objects(q)).empty()) {
                note = "dualization is not functorial";
                return false;
              }
              if (!is_equivalence(duality, all_objects(q),
                                  all_objects(op_spec_op))) {
                note = "dualization is no equivalence";
                return false;
              }
              return true;
            });

  criterion(6,
            "unit components are injective envelopes over pointed spaces; "
            "counit components cover the unpointed ones",
            60.0, [](std::string& note) {
              const auto pointed = corpus::build_corpus("pointed-finpreord:2,4");
              if (!check_condition(pointed.triple->x_tier,
                                   ConditionTag::kMonoSplit)
                       .holds) {
                note = "mono_split unexpectedly fails on pointed sets";
                return false;
              }
              report::Report a = verify::verify_71a(pointed, kDefaultSpanCap);
              if (!all_pass(a, note)) return false;
              for (const auto& v : a.verdicts) {
                if (v.status == report::Status::kNotApplicable) {
                  note = "pointed suite reported not applicable";
                  return false;
                }
              }

              const auto unpointed = corpus::build_corpus("finpreord:2,4");
              report::Report na = verify::verify_71a(unpointed, kDefaultSpanCap);
              if (na.verdicts.size() != 1 ||
                  na.verdicts[0].status != report::Status::kNotApplicable ||
                  na.verdicts[0].detail.find("0->1") == std::string::npos) {
                note = "unpointed 7.1a should be inapplicable with witness "
                       "0 -> 1";
                return false;
              }
              report::Report b = verify::verify_71b(unpointed, kDefaultSpanCap);
              if (!all_pass(b, note)) return false;
              // Projectives are exactly the discrete spaces.
              auto pre =
                  std::dynamic_pointer_cast<const cats::PreorderProvider>(
                      unpointed.triple->c_tier.ambient.provider_ptr());
              for (Obj o : unpointed.triple->c_tier.core) {
                const bool discrete =
                    pre->mask_of(o) == cats::PreorderProvider::diagonal_mask(
                                           pre->points_of(o));
                if (is_projective(unpointed.triple->c_tier, o) != discrete) {
                  note = "projectives differ from the discrete spaces";
                  return false;
                }
              }
              return true;
            });

  criterion(7, "property suites across the whole corpus", 300.0,
            [](std::string& note) {
              for (const props::SuiteResult& result :
                   props::run_all_property_suites()) {
                if (!result.violations.empty()) {
                  note = result.suite + ": " + result.violations.front();
                  return false;
                }
              }
              return true;
            });

  return failures;
}
