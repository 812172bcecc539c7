#ifndef FINCAT_SPECTRAL_HPP_
#define FINCAT_SPECTRAL_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "fincat/essentials.hpp"
#include "fincat/functor.hpp"

namespace fincat {

// A fraction A <- dom -> B: the backwards leg s lies in the inverted class.
struct SpanFraction {
  Mor s;
  Mor f;

  friend bool operator==(const SpanFraction&, const SpanFraction&) = default;
  friend bool operator<(const SpanFraction& a, const SpanFraction& b) {
    return a.s != b.s ? a.s < b.s : a.f < b.f;
  }
};

struct CalculusVerdict {
  bool holds = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    holds = false;
    if (failures.size() < 16) failures.push_back(std::move(why));
  }
};

namespace detail {

inline bool in_class(const std::vector<Mor>& sorted_s, Mor m) {
  return std::binary_search(sorted_s.begin(), sorted_s.end(), m);
}

}  // namespace detail

// Identities, closure under composition, the right Ore condition (cospan
// completion through pullbacks with the new leg in S), and right
// cancellation. S is given as a sorted list of morphism ids of the ambient
// category; the tier must certify pullback closure for the Ore part to be
// conclusive.
inline CalculusVerdict check_right_fraction_calculus(
    const Tier& t, const std::vector<Mor>& s_class) {
  CalculusVerdict verdict;
  const Category& c = t.ambient;
  for (Obj o : t.core) {
    if (!detail::in_class(s_class, c.identity(o))) {
      verdict.fail("identity of " + c.object_name(o) + " missing from S");
    }
  }
  for (Mor s : s_class) {
    for (Mor u : s_class) {
      if (mor_dom(u) != mor_cod(s)) continue;
      if (!detail::in_class(s_class, c.compose(u, s))) {
        verdict.fail("S not closed under " + c.morphism_name(u) + " . " +
                     c.morphism_name(s));
      }
    }
  }
  const std::vector<Obj> candidates = all_objects(c);
  for (Mor s : s_class) {
    const Obj a = mor_cod(s);
    for (Obj x : t.core) {
      for (Mor f : c.hom(x, a)) {
        const PullbackResult pb = tier_pullback(t, f, s, candidates);
        if (!pb.present) {
          verdict.fail("no Ore square over (" + c.morphism_name(f) + ", " +
                       c.morphism_name(s) + ")");
          continue;
        }
        if (!detail::in_class(s_class, pb.to_left)) {
          verdict.fail("Ore leg escapes S over (" + c.morphism_name(f) +
                       ", " + c.morphism_name(s) + ")");
        }
      }
    }
  }
  // Right cancellation; collisions can only arise when S strays from monos.
  std::unordered_map<Mor, Mor> seen;
  for (Mor s : s_class) {
    for (Obj w : t.core) {
      seen.clear();
      for (Mor g : c.hom(w, mor_dom(s))) {
        auto [it, fresh] = seen.emplace(c.compose(s, g), g);
        if (fresh) continue;
        const Mor h = it->second;
        bool fixed = false;
        for (Mor cancel : s_class) {
          if (mor_cod(cancel) != w) continue;
          if (c.compose(g, cancel) == c.compose(h, cancel)) {
            fixed = true;
            break;
          }
        }
        if (!fixed) {
          verdict.fail("cancellation fails after " + c.morphism_name(s));
        }
      }
    }
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// The category of fractions

class SpecCategory {
 public:
  const Category& cat() const { return *cat_; }
  const std::vector<Obj>& objects() const { return objects_; }

  Obj spec_object_of(Obj ambient_obj) const {
    const auto it =
        std::find(objects_.begin(), objects_.end(), ambient_obj);
    if (it == objects_.end()) {
      throw std::invalid_argument("object is not part of the localization");
    }
    return static_cast<Obj>(it - objects_.begin());
  }

  // Class of a span, if the span was enumerated.
  std::optional<Mor> class_of(const SpanFraction& span) const {
    const auto it = span_class_.find(span);
    if (it == span_class_.end()) return std::nullopt;
    return it->second;
  }

  // The canonical projection on a morphism with core endpoints.
  Mor project(Mor ambient_mor) const {
    const Obj a = spec_object_of(mor_dom(ambient_mor));
    const SpanFraction span{ambient_id_.at(a), ambient_mor};
    const auto cls = class_of(span);
    if (!cls) {
      throw std::invalid_argument("morphism has no class in the localization");
    }
    return *cls;
  }

  const std::vector<SpanFraction>& members(Mor spec_mor) const {
    return members_.at(spec_mor);
  }

  SpanFraction representative(Mor spec_mor) const {
    return members(spec_mor).front();
  }

 private:
  friend struct SpecBuilderAccess;
  std::optional<Category> cat_;
  std::vector<Obj> objects_;
  std::vector<Mor> ambient_id_;  // identity of objects_[i] in the ambient
  std::map<SpanFraction, Mor> span_class_;
  std::map<Mor, std::vector<SpanFraction>> members_;
};

struct SpecBuildResult {
  SpecCategory spec;
  std::vector<std::string> failures;  // well-definedness defects, if any
  bool ok() const { return failures.empty(); }
};

inline constexpr std::uint64_t kDefaultSpanCap = 1'000'000;

struct SpecBuilderAccess {
  static SpecBuildResult build(const Tier& t, const std::vector<Mor>& s_class,
                               std::uint64_t span_cap) {
    SpecBuildResult result;
    SpecCategory& spec = result.spec;
    const Category& c = t.ambient;
    spec.objects_ = t.core;
    for (Obj o : t.core) spec.ambient_id_.push_back(c.identity(o));

    // S indexed by codomain, and the set of span domains per codomain: the
    // connecting-span search below only needs vertices that carry an S-leg.
    std::map<Obj, std::vector<Mor>> s_into;
    std::map<Obj, std::vector<Obj>> s_domains;
    for (Mor s : s_class) {
      s_into[mor_cod(s)].push_back(s);
      auto& doms = s_domains[mor_cod(s)];
      if (std::find(doms.begin(), doms.end(), mor_dom(s)) == doms.end()) {
        doms.push_back(mor_dom(s));
      }
    }

    const std::size_t n = spec.objects_.size();
    // classes[i][j] lists the equivalence classes of spans from object i to
    // object j, each class being the sorted list of its member spans.
    using SpanClass = std::vector<SpanFraction>;
    std::vector<std::vector<std::vector<SpanClass>>> classes(n);
    TableBuilder builder;
    for (std::size_t i = 0; i < n; ++i) {
      builder.add_object(c.object_name(spec.objects_[i]));
      classes[i].resize(n);
    }

    auto one_step = [&](const SpanFraction& a, const SpanFraction& b) {
      const Obj target = mor_cod(a.s);
      for (Obj e : s_domains[target]) {
        for (Mor u : c.hom(e, mor_dom(a.s))) {
          const Mor su = c.compose(a.s, u);
          if (!detail::in_class(s_class, su)) continue;
          const Mor fu = c.compose(a.f, u);
          for (Mor v : c.hom(e, mor_dom(b.s))) {
            if (c.compose(b.s, v) == su && c.compose(b.f, v) == fu) {
              return true;
            }
          }
        }
      }
      return false;
    };

    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Obj a = spec.objects_[i];
        const Obj b = spec.objects_[j];
        std::vector<SpanFraction> spans;
        for (Mor s : s_into[a]) {
          for (Mor f : c.hom(mor_dom(s), b)) {
            spans.push_back(SpanFraction{s, f});
            if (spans.size() > span_cap) {
              throw std::runtime_error(
                  "span cap exceeded while enumerating hom(" +
                  c.object_name(a) + ", " + c.object_name(b) + ")");
            }
          }
        }
        // Connected components of the one-step relation; symmetric, so a
        // single sweep over unordered pairs suffices for the closure.
        detail::TinyPartition part(spans.size());
        for (std::size_t p = 0; p < spans.size(); ++p) {
          for (std::size_t q = p + 1; q < spans.size(); ++q) {
            if (part.find(p) == part.find(q)) continue;
            if (one_step(spans[p], spans[q]) || one_step(spans[q], spans[p])) {
              part.merge(p, q);
            }
          }
        }
        const std::vector<std::size_t> label = part.labels();
        std::size_t count = 0;
        for (std::size_t v : label) count = std::max(count, v + 1);
        auto& cell = classes[i][j];
        cell.assign(count, {});
        for (std::size_t p = 0; p < spans.size(); ++p) {
          cell[label[p]].push_back(spans[p]);
        }
        for (std::size_t k = 0; k < cell.size(); ++k) {
          const SpanFraction& rep = cell[k].front();
          const Mor id = builder.add_morphism(
              "[" + c.morphism_name(rep.s) + " \\ " + c.morphism_name(rep.f) +
                  "]",
              static_cast<Obj>(i), static_cast<Obj>(j));
          for (const SpanFraction& span : cell[k]) {
            spec.span_class_.emplace(span, id);
          }
          spec.members_.emplace(id, cell[k]);
        }
      }
    }

    // Identities first, then composition through Ore squares. Pullbacks of
    // one cospan recur across representative pairs, hence the memo.
    for (std::size_t i = 0; i < n; ++i) {
      const SpanFraction unit{spec.ambient_id_[i], spec.ambient_id_[i]};
      const auto cls = spec.class_of(unit);
      if (!cls) {
        result.failures.push_back("identity span missing on " +
                                  c.object_name(spec.objects_[i]));
        continue;
      }
      builder.set_identity(static_cast<Obj>(i), *cls);
    }
    if (!result.failures.empty()) return result;

    const std::vector<Obj> candidates = all_objects(c);
    std::map<std::pair<Mor, Mor>, PullbackResult> ore_memo;
    auto compose_spans =
        [&](const SpanFraction& left,
            const SpanFraction& right) -> std::optional<SpanFraction> {
      // left : A <- D -> B, right : B <- E -> C
      const auto key = std::make_pair(left.f, right.s);
      auto it = ore_memo.find(key);
      if (it == ore_memo.end()) {
        it = ore_memo
                 .emplace(key,
                          tier_pullback(t, left.f, right.s, candidates))
                 .first;
      }
      const PullbackResult& pb = it->second;
      if (!pb.present) return std::nullopt;
      if (!detail::in_class(s_class, pb.to_left)) return std::nullopt;
      const Mor new_s = c.compose(left.s, pb.to_left);
      if (!detail::in_class(s_class, new_s)) return std::nullopt;
      return SpanFraction{new_s, c.compose(right.f, pb.to_right)};
    };

    for (std::size_t i = 0; i < n && result.failures.size() < 16; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (const auto& alpha : classes[i][j]) {
            for (const auto& beta : classes[j][k]) {
              std::optional<Mor> composite;
              bool consistent = true;
              for (const SpanFraction& a : alpha) {
                for (const SpanFraction& b : beta) {
                  const auto span = compose_spans(a, b);
                  if (!span) {
                    result.failures.push_back(
                        "no Ore composite for a representative pair");
                    consistent = false;
                    break;
                  }
                  const auto cls = spec.class_of(*span);
                  if (!cls) {
                    result.failures.push_back(
                        "composite span was never enumerated");
                    consistent = false;
                    break;
                  }
                  if (!composite) {
                    composite = cls;
                  } else if (*composite != *cls) {
                    result.failures.push_back(
                        "composition depends on the chosen representatives");
                    consistent = false;
                    break;
                  }
                }
                if (!consistent) break;
              }
              if (consistent && composite) {
                builder.set_composite(spec.span_class_.at(beta.front()),
                                      spec.span_class_.at(alpha.front()),
                                      *composite);
              }
            }
          }
        }
      }
    }
    spec.cat_.emplace(builder.build());
    if (result.failures.empty()) {
      const ValidationReport check = validate(spec.cat());
      for (const auto& v : check.violations) {
        result.failures.push_back("quotient category invalid: " + v);
      }
    }
    return result;
  }
};

// Builds Spec over the given class; the right-fraction calculus must have
// been verified beforehand (spec_build re-runs it and throws otherwise).
inline SpecBuildResult spec_build(const Tier& t, std::vector<Mor> s_class,
                                  std::uint64_t span_cap = kDefaultSpanCap) {
  std::sort(s_class.begin(), s_class.end());
  const CalculusVerdict calculus = check_right_fraction_calculus(t, s_class);
  if (!calculus.holds) {
    throw std::invalid_argument(
        "the class admits no right calculus of fractions: " +
        (calculus.failures.empty() ? std::string("?") : calculus.failures[0]));
  }
  return SpecBuilderAccess::build(t, s_class, span_cap);
}

inline SpecBuildResult spec_build(const Tier& t,
                                  const MonoClassRegistry& registry,
                                  std::uint64_t span_cap = kDefaultSpanCap) {
  return spec_build(t, registry.pb_stable, span_cap);
}

// Decides whether two fractions with equal endpoints fall into the same
// class of the generated equivalence.
inline bool span_equivalent(const Tier& t, const std::vector<Mor>& s_class,
                            const SpanFraction& a, const SpanFraction& b,
                            std::uint64_t span_cap = kDefaultSpanCap) {
  if (mor_cod(a.s) != mor_cod(b.s) || mor_cod(a.f) != mor_cod(b.f)) {
    throw std::invalid_argument("span_equivalent: endpoint mismatch");
  }
  std::vector<Mor> sorted = s_class;
  std::sort(sorted.begin(), sorted.end());
  const SpecBuildResult result = SpecBuilderAccess::build(t, sorted, span_cap);
  const auto ca = result.spec.class_of(a);
  const auto cb = result.spec.class_of(b);
  if (!ca || !cb) {
    throw std::invalid_argument("span_equivalent: span was not enumerated");
  }
  return *ca == *cb;
}

// ---------------------------------------------------------------------------
// Induced functors and equivalences

struct InducedFunctorResult {
  std::optional<Functor> functor;
  std::vector<std::string> failures;
  bool ok() const { return functor.has_value() && failures.empty(); }
};

// Factors F through the projection: the class of (s, f) goes to
// F(f) . F(s)^{-1}. Well-definedness is checked on every member of every
// class, and the factorization F-bar . P = F is re-verified.
inline InducedFunctorResult induced_functor(const SpecCategory& spec,
                                            const Tier& t,
                                            const std::vector<Mor>& s_class,
                                            const Functor& f) {
  InducedFunctorResult result;
  const Category& x = f.target();
  for (Mor s : s_class) {
    if (!is_iso(x, f.map(s))) {
      result.failures.push_back("functor does not invert " +
                                t.ambient.morphism_name(s));
      return result;
    }
  }

  auto value_of = [&](const SpanFraction& span) {
    return x.compose(f.map(span.f), *inverse_of(x, f.map(span.s)));
  };
  auto mor_table = std::make_shared<std::map<Mor, Mor>>();
  auto obj_table = std::make_shared<std::vector<Obj>>();
  for (Obj o : spec.objects()) obj_table->push_back(f.map(o));
  for (Obj i = 0; i < spec.cat().object_count(); ++i) {
    for (Obj j = 0; j < spec.cat().object_count(); ++j) {
      for (Mor cls : spec.cat().hom(i, j)) {
        std::optional<Mor> image;
        for (const SpanFraction& span : spec.members(cls)) {
          const Mor candidate = value_of(span);
          if (!image) {
            image = candidate;
          } else if (*image != candidate) {
            result.failures.push_back(
                "image differs across representatives of a class");
          }
        }
        mor_table->emplace(cls, *image);
      }
    }
  }
  if (!result.failures.empty()) return result;

  result.functor.emplace(
      f.name() + "-bar", spec.cat(), x,
      [obj_table](Obj o) { return obj_table->at(o); },
      [mor_table](Mor m) { return mor_table->at(m); });

  // F-bar . P agrees with F on core data.
  for (Obj a : t.core) {
    for (Obj b : t.core) {
      for (Mor m : t.ambient.hom(a, b)) {
        if (result.functor->map(spec.project(m)) != f.map(m)) {
          result.failures.push_back("factorization fails on " +
                                    t.ambient.morphism_name(m));
        }
      }
    }
  }
  return result;
}

// Full, faithful, essentially surjective, each by enumeration over the
// given object scopes.
inline bool is_equivalence(const Functor& f, std::span<const Obj> src_objects,
                           std::span<const Obj> tgt_objects) {
  const Category& c = f.source();
  const Category& x = f.target();
  for (Obj a : src_objects) {
    for (Obj b : src_objects) {
      std::set<Mor> image;
      for (Mor m : c.hom(a, b)) {
        if (!image.insert(f.map(m)).second) return false;  // not faithful
      }
      if (image.size() != x.hom(f.map(a), f.map(b)).size()) {
        return false;  // not full
      }
    }
  }
  for (Obj y : tgt_objects) {
    bool hit = false;
    for (Obj a : src_objects) {
      for (Mor m : x.hom(f.map(a), y)) {
        if (is_iso(x, m)) {
          hit = true;
          break;
        }
      }
      if (hit) break;
    }
    if (!hit) return false;  // not essentially surjective
  }
  return true;
}

// ---------------------------------------------------------------------------
// Bimorphisms and duality

namespace detail {

inline std::vector<Mor> core_endpoint_subset(const Tier& t,
                                             const std::vector<Mor>& ms,
                                             std::vector<std::string>& out,
                                             const char* label) {
  std::vector<Mor> filtered;
  for (Mor m : ms) {
    if (t.is_core(mor_dom(m)) && t.is_core(mor_cod(m))) {
      filtered.push_back(m);
    } else {
      out.push_back(std::string(label) +
                    " member leaves the core: " + t.ambient.morphism_name(m));
    }
  }
  return filtered;
}

}  // namespace detail

// Under the stable-iso and balancedness conditions on the target, the
// inverted class must coincide with the bimorphisms, and with its own dual
// when the dual stable-iso condition holds too; the localizations then agree
// up to equivalence on both sides of the duality.
inline TheoremReport verify_section6(const LocalizationTriple& l,
                                     std::uint64_t span_cap = kDefaultSpanCap) {
  TheoremReport report;
  const Category& c = l.c_tier.ambient;
  const LocalizationVerdict loc = is_faithful_essential_localization(l);
  const ConditionVerdict stable_iso =
      check_condition(l.x_tier, ConditionTag::kPbseIso);
  const ConditionVerdict balanced =
      check_condition(l.x_tier, ConditionTag::kBalanced);
  const MonoClassRegistry reg = st_mono_e(l.c_tier);

  {
    TheoremCheck check{"6.5"};
    if (!loc.holds) {
      check.applicable = false;
      check.blocker = "not a faithful essential localization";
    } else if (!stable_iso.holds || stable_iso.bounded) {
      check.applicable = false;
      check.blocker = "pbse_iso not established on the target tier";
    } else if (!balanced.holds) {
      check.applicable = false;
      check.blocker = "target tier is not balanced";
    } else {
      check.passed = true;
      for (Mor m : core_codomain_morphisms(l.c_tier)) {
        const bool bimorphism =
            is_mono(c, m, l.c_tier.core) && is_epi(c, m, l.c_tier.core);
        if (bimorphism != reg.is_pb_stable(m)) {
          check.passed = false;
          check.failures.push_back(c.morphism_name(m));
        }
      }
    }
    report.checks.push_back(std::move(check));
  }

  {
    TheoremCheck check{"6.6"};
    const ConditionVerdict dual_stable_iso =
        check_condition(l.x_tier, ConditionTag::kCoPbseIso);
    const TheoremCheck& previous = report.checks.back();
    if (!previous.applicable) {
      check.applicable = false;
      check.blocker = previous.blocker;
    } else if (!dual_stable_iso.holds || dual_stable_iso.bounded) {
      check.applicable = false;
      check.blocker = "dual pbse_iso not established on the target tier";
    } else if (!l.c_tier.pushout_closed || !l.x_tier.pushout_closed) {
      check.applicable = false;
      check.blocker = "tier lacks certified pushout closure";
    } else {
      check.passed = true;
      const LocalizationTriple op = opposite_triple(l);
      const MonoClassRegistry op_reg = st_mono_e(op.c_tier);

      // The two inverted classes, compared on core-endpoint morphisms; any
      // member with an endpoint outside the core would silently escape the
      // comparison, so those are failures in their own right.
      std::vector<Mor> primal = detail::core_endpoint_subset(
          l.c_tier, reg.pb_stable, check.failures, "St(Mono_E)");
      std::vector<Mor> dual;
      for (Mor m : op_reg.pb_stable) dual.push_back(opposite_mor(m));
      std::sort(dual.begin(), dual.end());
      dual = detail::core_endpoint_subset(l.c_tier, dual, check.failures,
                                          "St(Mono_E)^op");
      if (primal != dual) {
        check.failures.push_back("the two stable classes differ");
      }

      const SpecBuildResult spec = spec_build(l.c_tier, reg, span_cap);
      if (!spec.ok()) {
        check.failures.push_back("localization of C did not build");
      } else {
        const InducedFunctorResult fbar =
            induced_functor(spec.spec, l.c_tier, reg.pb_stable, l.forward);
        if (!fbar.ok() ||
            !is_equivalence(*fbar.functor, all_objects(spec.spec.cat()),
                            l.x_tier.core)) {
          check.failures.push_back(
              "induced functor out of Spec(C) is no equivalence");
        }
      }
      const SpecBuildResult op_spec = spec_build(op.c_tier, op_reg, span_cap);
      if (!op_spec.ok()) {
        check.failures.push_back("localization of C^op did not build");
      } else {
        const InducedFunctorResult fbar_op = induced_functor(
            op_spec.spec, op.c_tier, op_reg.pb_stable, op.forward);
        if (!fbar_op.ok() ||
            !is_equivalence(*fbar_op.functor,
                            all_objects(op_spec.spec.cat()),
                            op.x_tier.core)) {
          check.failures.push_back(
              "induced functor out of Spec(C^op) is no equivalence");
        }
      }
      check.passed = check.failures.empty();
    }
    report.checks.push_back(std::move(check));
  }
  return report;
}

// P is functorial, inverts exactly S, and nothing else.
inline std::vector<std::string> projection_violations(
    const SpecCategory& spec, const Tier& t, const std::vector<Mor>& s_class) {
  std::vector<std::string> out;
  const Category& c = t.ambient;
  for (Obj o : t.core) {
    if (spec.project(c.identity(o)) !=
        spec.cat().identity(spec.spec_object_of(o))) {
      out.push_back("projection breaks the identity on " + c.object_name(o));
    }
  }
  for (Obj a : t.core) {
    for (Obj b : t.core) {
      for (Mor m : c.hom(a, b)) {
        for (Obj d : t.core) {
          for (Mor g : c.hom(b, d)) {
            if (spec.project(c.compose(g, m)) !=
                spec.cat().compose(spec.project(g), spec.project(m))) {
              out.push_back("projection breaks composition on (" +
                            c.morphism_name(g) + ", " + c.morphism_name(m) +
                            ")");
            }
          }
        }
        const bool inverted = is_iso(spec.cat(), spec.project(m));
        const bool in_s = detail::in_class(s_class, m);
        if (in_s && !inverted) {
          out.push_back("member of S not inverted: " + c.morphism_name(m));
        }
        if (!in_s && inverted) {
          out.push_back("morphism outside S inverted: " + c.morphism_name(m));
        }
      }
    }
  }
  return out;
}

}  // namespace fincat

#endif  // FINCAT_SPECTRAL_HPP_
