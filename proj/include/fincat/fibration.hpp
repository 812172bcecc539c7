#ifndef FINCAT_FIBRATION_HPP_
#define FINCAT_FIBRATION_HPP_

#include <string>
#include <vector>

#include "fincat/functor.hpp"

namespace fincat {

enum class FibrationKind { kNone, kWeak, kSpecial };

inline const char* fibration_kind_name(FibrationKind k) {
  switch (k) {
    case FibrationKind::kNone: return "none";
    case FibrationKind::kWeak: return "weak";
    case FibrationKind::kSpecial: return "special";
  }
  return "?";
}

// For every core C and u : X -> F(C), hunt for f : U -> C together with an
// epimorphism phi : F(U) -> X satisfying F(f) = u . phi. The lift domain U
// ranges over the whole ambient category. Special means phi can always be
// chosen to be an isomorphism.
inline FibrationKind weak_fibration_kind(const Functor& f, const Tier& tc,
                                         const Tier& tx) {
  const Category& c = tc.ambient;
  const Category& x = tx.ambient;
  bool all_special = true;
  for (Obj cc : tc.core) {
    for (Obj xx : tx.core) {
      for (Mor u : x.hom(xx, f.map(cc))) {
        bool found_epi = false;
        bool found_iso = false;
        for (Obj lift = 0; lift < c.object_count() && !found_iso; ++lift) {
          const auto& phis = x.hom(f.map(lift), xx);
          if (phis.empty()) continue;
          for (Mor arrow : c.hom(lift, cc)) {
            const Mor image = f.map(arrow);
            for (Mor phi : phis) {
              if (x.compose(u, phi) != image) continue;
              if (is_iso(x, phi)) {
                found_epi = found_iso = true;
                break;
              }
              if (!found_epi && is_epi(x, phi, tx.core)) found_epi = true;
            }
            if (found_iso) break;
          }
        }
        if (!found_epi) return FibrationKind::kNone;
        all_special = all_special && found_iso;
      }
    }
  }
  return all_special ? FibrationKind::kSpecial : FibrationKind::kWeak;
}

// Dual lifting: for every core C and v : F(C) -> Y there must be g : C -> V
// and a monomorphism psi : Y -> F(V) with F(g) = psi . v.
inline bool is_weak_opfibration(const Functor& f, const Tier& tc,
                                const Tier& tx) {
  const Category& c = tc.ambient;
  const Category& x = tx.ambient;
  for (Obj cc : tc.core) {
    for (Obj yy : tx.core) {
      for (Mor v : x.hom(f.map(cc), yy)) {
        bool found = false;
        for (Obj lift = 0; lift < c.object_count() && !found; ++lift) {
          const auto& psis = x.hom(yy, f.map(lift));
          if (psis.empty()) continue;
          for (Mor arrow : c.hom(cc, lift)) {
            const Mor image = f.map(arrow);
            for (Mor psi : psis) {
              if (x.compose(psi, v) == image && is_mono(x, psi, tx.core)) {
                found = true;
                break;
              }
            }
            if (found) break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

struct SleVerdict {
  bool holds = true;
  std::vector<std::string> failures;
  // Filled in when the hypotheses hold: the conclusion re-verified.
  FibrationKind resulting_kind = FibrationKind::kNone;
};

// Hypotheses of the semi-left-exact construction: all unit components are
// pullback stable epimorphisms and all counit components are epimorphisms.
// When they hold, the conclusion (the left adjoint is a weak fibration) is
// re-established by direct search rather than trusted.
inline SleVerdict check_sle_hypotheses(const Adjunction& adj, const Tier& tc,
                                       const Tier& tx) {
  SleVerdict verdict;
  const Category& c = tc.ambient;
  const Category& x = tx.ambient;
  const std::vector<Obj> candidates = all_objects(c);
  for (Obj o : tc.core) {
    const Mor eta = adj.unit(o);
    if (!is_epi(c, eta, tc.core)) {
      verdict.holds = false;
      verdict.failures.push_back("unit at " + c.object_name(o) +
                                 " is not an epimorphism");
      continue;
    }
    for (Obj w : tc.core) {
      for (Mor u : c.hom(w, mor_cod(eta))) {
        const PullbackResult pb = tier_pullback(tc, u, eta, candidates);
        if (!pb.present) {
          verdict.holds = false;
          verdict.failures.push_back("pullback of the unit at " +
                                     c.object_name(o) + " is missing");
          continue;
        }
        if (!is_epi(c, pb.to_left, tc.core)) {
          verdict.holds = false;
          verdict.failures.push_back("unit at " + c.object_name(o) +
                                     " is not pullback stable along " +
                                     c.morphism_name(u));
        }
      }
    }
  }
  for (Obj o : tx.core) {
    if (!is_epi(x, adj.counit(o), tx.core)) {
      verdict.holds = false;
      verdict.failures.push_back("counit at " + x.object_name(o) +
                                 " is not an epimorphism");
    }
  }
  if (verdict.holds) {
    verdict.resulting_kind = weak_fibration_kind(adj.left, tc, tx);
    if (verdict.resulting_kind == FibrationKind::kNone) {
      verdict.holds = false;
      verdict.failures.push_back(
          "hypotheses hold but no weak fibration structure was found "
          "(engine defect)");
    }
  }
  return verdict;
}

// The three preservation statements, each checked in both directions over
// every morphism with core codomain. Hypotheses are established by the
// checkers above; a counterexample in the conclusion indicates an engine
// defect and is reported as a failure, never silently dropped.
inline TheoremReport verify_preservation_theorems(const LocalizationTriple& l) {
  TheoremReport report;
  const Category& c = l.c_tier.ambient;
  const Category& x = l.x_tier.ambient;
  const Functor& f = l.forward;

  const PropertyReport props = functor_properties(f, l.c_tier, l.x_tier);
  const std::vector<Mor> domain = core_codomain_morphisms(l.c_tier);

  {
    TheoremCheck check{"2.5"};
    if (!is_weak_opfibration(f, l.c_tier, l.x_tier)) {
      check.applicable = false;
      check.blocker = "not a weak opfibration";
    } else if (!props.preserves_monos.holds || !props.reflects_monos.holds) {
      check.applicable = false;
      check.blocker = "does not preserve and reflect monomorphisms";
    } else {
      check.passed = true;
      for (Mor m : domain) {
        const bool here = is_essential_mono(l.c_tier, m);
        const bool there = is_essential_mono(l.x_tier, f.map(m));
        if (here != there) {
          check.passed = false;
          check.failures.push_back(c.morphism_name(m));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    TheoremCheck check{"3.2"};
    const FibrationKind kind = weak_fibration_kind(f, l.c_tier, l.x_tier);
    if (kind != FibrationKind::kSpecial ||
        !is_weak_opfibration(f, l.c_tier, l.x_tier)) {
      check.applicable = false;
      check.blocker = "not a special weak bifibration";
    } else if (!props.preserves_pullbacks.holds ||
               !props.reflects_monos.holds) {
      check.applicable = false;
      check.blocker = "does not preserve pullbacks and reflect monomorphisms";
    } else if (!l.c_tier.pullback_closed || !l.x_tier.pullback_closed) {
      check.applicable = false;
      check.blocker = "tier lacks certified pullback closure";
    } else {
      check.passed = true;
      for (Mor m : domain) {
        const bool here = is_pb_stable_essential_mono(l.c_tier, m).value;
        const bool there =
            is_pb_stable_essential_mono(l.x_tier, f.map(m)).value;
        if (here != there) {
          check.passed = false;
          check.failures.push_back(c.morphism_name(m));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    TheoremCheck check{"4.9"};
    const LocalizationVerdict loc = is_faithful_essential_localization(l);
    const ConditionVerdict stable_iso =
        check_condition(l.x_tier, ConditionTag::kPbseIso);
    if (!loc.holds) {
      check.applicable = false;
      check.blocker = "not a faithful essential localization";
    } else if (!stable_iso.holds || stable_iso.bounded) {
      check.applicable = false;
      check.blocker = stable_iso.holds
                          ? "pbse_iso only bounded on the target tier"
                          : "pbse_iso fails in the target tier";
    } else {
      check.passed = true;
      for (Mor m : domain) {
        const bool here = is_pb_stable_essential_mono(l.c_tier, m).value;
        const bool there = is_iso(x, f.map(m));
        if (here != there) {
          check.passed = false;
          check.failures.push_back(c.morphism_name(m));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

}  // namespace fincat

#endif  // FINCAT_FIBRATION_HPP_
