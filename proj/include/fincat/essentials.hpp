#ifndef FINCAT_ESSENTIALS_HPP_
#define FINCAT_ESSENTIALS_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fincat/classify.hpp"
#include "fincat/tier.hpp"

namespace fincat {

// First f (in id order) with f.m a monomorphism but f not, if any; such an f
// refutes essentiality of m. Callers must have established that m is mono.
inline std::optional<Mor> essential_failure(const Category& c, Mor m,
                                            std::span<const Obj> probes,
                                            std::span<const Obj> targets) {
  for (Obj y : targets) {
    for (Mor f : c.hom(mor_cod(m), y)) {
      if (!is_mono(c, f, probes) && is_mono(c, c.compose(f, m), probes)) {
        return f;
      }
    }
  }
  return std::nullopt;
}

inline bool is_essential_mono(const Category& c, Mor m,
                              std::span<const Obj> probes,
                              std::span<const Obj> targets) {
  if (!is_mono(c, m, probes)) return false;
  return !essential_failure(c, m, probes, targets).has_value();
}

// Quantifiers over the whole category.
inline bool is_essential_mono(const Category& c, Mor m) {
  if (!c.contains(m)) {
    throw std::invalid_argument("is_essential_mono: unknown morphism id");
  }
  const std::vector<Obj> objs = all_objects(c);
  return is_essential_mono(c, m, objs, objs);
}

inline bool is_essential_mono(const Tier& t, Mor m) {
  return is_essential_mono(t.ambient, m, t.core, t.core);
}

// A verdict is bounded when some pullback needed by the quantifier did not
// exist and the tier claims no closure; bounded results are reported but kept
// out of theorem verification.
struct BoundedBool {
  bool value = false;
  bool bounded = false;
};

// m is pullback stable essential when the projection of the pullback of m
// along every u : X -> cod(m) with X in the core is an essential mono;
// u = id is included, so m itself must be essential.
inline BoundedBool is_pb_stable_essential_mono(const Tier& t, Mor m) {
  BoundedBool out;
  out.bounded = !t.pullback_closed;
  if (!is_mono(t.ambient, m, t.core)) return out;
  const std::vector<Obj> candidates = all_objects(t.ambient);
  const Obj a = mor_cod(m);
  for (Obj x : t.core) {
    for (Mor u : t.ambient.hom(x, a)) {
      const PullbackResult pb = tier_pullback(t, u, m, candidates);
      if (!pb.present) {
        if (t.pullback_closed) {
          throw std::logic_error(
              "tier integrity: pullback missing although closure was "
              "certified");
        }
        out.bounded = true;
        continue;
      }
      if (!is_essential_mono(t.ambient, pb.to_left, t.core, t.core)) {
        return out;
      }
    }
  }
  out.value = true;
  return out;
}

// The essential and pullback stable essential classes, enumerated over all
// morphisms with core codomain. Sorted, so membership is a binary search.
struct MonoClassRegistry {
  std::vector<Mor> monos;
  std::vector<Mor> essential;
  std::vector<Mor> pb_stable;
  bool bounded = false;

  static bool member(const std::vector<Mor>& sorted, Mor m) {
    return std::binary_search(sorted.begin(), sorted.end(), m);
  }
  bool is_essential(Mor m) const { return member(essential, m); }
  bool is_pb_stable(Mor m) const { return member(pb_stable, m); }
};

inline MonoClassRegistry st_mono_e(const Tier& t) {
  MonoClassRegistry reg;
  for (Mor m : core_codomain_morphisms(t)) {
    if (!is_mono(t.ambient, m, t.core)) continue;
    reg.monos.push_back(m);
    if (!is_essential_mono(t, m)) continue;
    reg.essential.push_back(m);
    const BoundedBool stable = is_pb_stable_essential_mono(t, m);
    reg.bounded = reg.bounded || stable.bounded;
    if (stable.value) reg.pb_stable.push_back(m);
  }
  return reg;
}

// Sanity conditions every registry must satisfy; violations indicate an
// engine bug and fail the property suite.
inline std::vector<std::string> registry_violations(
    const Tier& t, const MonoClassRegistry& reg) {
  std::vector<std::string> out;
  const Category& c = t.ambient;
  for (Mor m : reg.pb_stable) {
    if (!reg.is_essential(m)) {
      out.push_back("pb-stable morphism not essential: " + c.morphism_name(m));
    }
  }
  for (Mor m : reg.essential) {
    if (!MonoClassRegistry::member(reg.monos, m)) {
      out.push_back("essential morphism not mono: " + c.morphism_name(m));
    }
  }
  for (Obj o : t.core) {
    if (!reg.is_pb_stable(c.identity(o))) {
      out.push_back("identity of " + c.object_name(o) + " not pb-stable");
    }
  }
  for (Mor m : reg.monos) {
    if (is_iso(c, m) && !reg.is_pb_stable(m)) {
      out.push_back("isomorphism not pb-stable: " + c.morphism_name(m));
    }
  }
  for (Mor s : reg.pb_stable) {
    for (Mor u : reg.pb_stable) {
      if (mor_dom(u) != mor_cod(s)) continue;
      const Mor us = c.compose(u, s);
      if (!reg.is_pb_stable(us)) {
        out.push_back("composition escapes the pb-stable class: " +
                      c.morphism_name(u) + " . " + c.morphism_name(s));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Conditions on a tier

enum class ConditionTag {
  kPbseIso,      // every pullback stable essential mono is an isomorphism
  kMonoSplit,    // every monomorphism is split
  kBalanced,     // every bimorphism is an isomorphism
  kCoPbseIso,    // dual of kPbseIso, evaluated on the opposite tier
  kCoMonoSplit,  // every epimorphism is split
  kCoBalanced,   // self-dual in substance, kept for symmetric reports
};

inline const char* condition_name(ConditionTag tag) {
  switch (tag) {
    case ConditionTag::kPbseIso: return "pbse_iso";
    case ConditionTag::kMonoSplit: return "mono_split";
    case ConditionTag::kBalanced: return "balanced";
    case ConditionTag::kCoPbseIso: return "co_pbse_iso";
    case ConditionTag::kCoMonoSplit: return "co_mono_split";
    case ConditionTag::kCoBalanced: return "co_balanced";
  }
  return "?";
}

struct ConditionVerdict {
  ConditionTag tag;
  bool holds = false;
  bool bounded = false;
  // Violating morphism(s), present exactly when holds is false; the first
  // entry is the smallest violating id.
  std::vector<Mor> witnesses;
};

inline ConditionVerdict check_condition(const Tier& t, ConditionTag tag) {
  switch (tag) {
    case ConditionTag::kCoPbseIso:
    case ConditionTag::kCoMonoSplit:
    case ConditionTag::kCoBalanced: {
      ConditionTag primal = tag == ConditionTag::kCoPbseIso
                                ? ConditionTag::kPbseIso
                                : tag == ConditionTag::kCoMonoSplit
                                      ? ConditionTag::kMonoSplit
                                      : ConditionTag::kBalanced;
      ConditionVerdict verdict = check_condition(opposite_tier(t), primal);
      verdict.tag = tag;
      for (Mor& w : verdict.witnesses) w = opposite_mor(w);
      return verdict;
    }
    default: break;
  }

  ConditionVerdict verdict{tag, true, false, {}};
  const Category& c = t.ambient;
  for (Mor m : core_codomain_morphisms(t)) {
    switch (tag) {
      case ConditionTag::kPbseIso: {
        verdict.bounded = verdict.bounded || !t.pullback_closed;
        const BoundedBool stable = is_pb_stable_essential_mono(t, m);
        verdict.bounded = verdict.bounded || stable.bounded;
        if (stable.value && !is_iso(c, m)) {
          verdict.holds = false;
          verdict.witnesses.push_back(m);
        }
        break;
      }
      case ConditionTag::kMonoSplit:
        if (is_mono(c, m, t.core) && !is_split_mono(c, m)) {
          verdict.holds = false;
          verdict.witnesses.push_back(m);
        }
        break;
      case ConditionTag::kBalanced:
        if (is_mono(c, m, t.core) && is_epi(c, m, t.core) && !is_iso(c, m)) {
          verdict.holds = false;
          verdict.witnesses.push_back(m);
        }
        break;
      default: break;
    }
    if (!verdict.holds) break;  // first violation is the smallest id
  }
  return verdict;
}

// Re-checks that a reported witness is a genuine violation.
inline bool witness_is_genuine(const Tier& t, ConditionTag tag, Mor w) {
  const Category& c = t.ambient;
  switch (tag) {
    case ConditionTag::kPbseIso:
      return is_pb_stable_essential_mono(t, w).value && !is_iso(c, w);
    case ConditionTag::kMonoSplit:
      return is_mono(c, w, t.core) && !is_split_mono(c, w);
    case ConditionTag::kBalanced:
      return is_mono(c, w, t.core) && is_epi(c, w, t.core) && !is_iso(c, w);
    case ConditionTag::kCoPbseIso:
      return witness_is_genuine(opposite_tier(t), ConditionTag::kPbseIso,
                                opposite_mor(w));
    case ConditionTag::kCoMonoSplit:
      return witness_is_genuine(opposite_tier(t), ConditionTag::kMonoSplit,
                                opposite_mor(w));
    case ConditionTag::kCoBalanced:
      return witness_is_genuine(opposite_tier(t), ConditionTag::kBalanced,
                                opposite_mor(w));
  }
  return false;
}

}  // namespace fincat

#endif  // FINCAT_ESSENTIALS_HPP_
