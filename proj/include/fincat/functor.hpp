#ifndef FINCAT_FUNCTOR_HPP_
#define FINCAT_FUNCTOR_HPP_

#include <functional>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "fincat/classify.hpp"
#include "fincat/essentials.hpp"
#include "fincat/limits.hpp"
#include "fincat/tier.hpp"

namespace fincat {

class Functor {
 public:
  Functor(std::string name, Category source, Category target,
          std::function<Obj(Obj)> object_map,
          std::function<Mor(Mor)> morphism_map)
      : name_(std::move(name)),
        source_(std::move(source)),
        target_(std::move(target)),
        object_map_(std::move(object_map)),
        morphism_map_(std::move(morphism_map)) {}

  const std::string& name() const { return name_; }
  const Category& source() const { return source_; }
  const Category& target() const { return target_; }

  Obj map(Obj o) const { return object_map_(o); }
  Mor map(Mor m) const { return morphism_map_(m); }

  static Functor identity(const Category& c) {
    return Functor("Id", c, c, [](Obj o) { return o; },
                   [](Mor m) { return m; });
  }

 private:
  std::string name_;
  Category source_;
  Category target_;
  std::function<Obj(Obj)> object_map_;
  std::function<Mor(Mor)> morphism_map_;
};

inline Functor compose(const Functor& outer, const Functor& inner) {
  return Functor(outer.name() + "." + inner.name(), inner.source(),
                 outer.target(),
                 [outer, inner](Obj o) { return outer.map(inner.map(o)); },
                 [outer, inner](Mor m) { return outer.map(inner.map(m)); });
}

// Restriction of an ambient functor to full subcategories on the given
// object lists; requires the functor to map the source list into the target
// list. Hom indexing is shared between a full subcategory and its ambient,
// so morphisms translate by re-tagging endpoints.
inline Functor restrict_functor(const Functor& f, const Category& sub_src,
                                std::vector<Obj> src_objs,
                                const Category& sub_tgt,
                                std::vector<Obj> tgt_objs) {
  auto tgt_index = [tgt_objs](Obj ambient_obj) {
    const auto it =
        std::find(tgt_objs.begin(), tgt_objs.end(), ambient_obj);
    if (it == tgt_objs.end()) {
      throw std::invalid_argument(
          "restricted functor leaves the target subcategory");
    }
    return static_cast<Obj>(it - tgt_objs.begin());
  };
  return Functor(
      f.name() + "|", sub_src, sub_tgt,
      [f, src_objs, tgt_index](Obj o) {
        return tgt_index(f.map(src_objs.at(o)));
      },
      [f, src_objs, tgt_index](Mor m) {
        const Mor image = f.map(make_mor(src_objs.at(mor_dom(m)),
                                         src_objs.at(mor_cod(m)),
                                         mor_index(m)));
        return make_mor(tgt_index(mor_dom(image)), tgt_index(mor_cod(image)),
                        mor_index(image));
      });
}

inline Functor opposite(const Functor& f) {
  return Functor(f.name() + "^op", f.source().opposite(),
                 f.target().opposite(), [f](Obj o) { return f.map(o); },
                 [f](Mor m) { return opposite_mor(f.map(opposite_mor(m))); });
}

// Functoriality over the given objects: identities, typing, and all
// composites formed inside the scope.
inline std::vector<std::string> functor_violations(
    const Functor& f, std::span<const Obj> scope) {
  std::vector<std::string> out;
  const Category& c = f.source();
  const Category& x = f.target();
  for (Obj o : scope) {
    if (f.map(o) >= x.object_count()) {
      out.push_back("object image out of range: " + c.object_name(o));
      continue;
    }
    if (f.map(c.identity(o)) != x.identity(f.map(o))) {
      out.push_back("identity of " + c.object_name(o) + " not preserved");
    }
  }
  for (Obj a : scope) {
    for (Obj b : scope) {
      for (Mor m : c.hom(a, b)) {
        const Mor fm = f.map(m);
        if (!x.contains(fm) || mor_dom(fm) != f.map(a) ||
            mor_cod(fm) != f.map(b)) {
          out.push_back("image ill-typed: " + c.morphism_name(m));
        }
      }
    }
  }
  for (Obj a : scope) {
    for (Obj b : scope) {
      const auto& fs = c.hom(a, b);
      if (fs.empty()) continue;
      for (Obj d : scope) {
        for (Mor g : c.hom(b, d)) {
          const Mor fg = f.map(g);
          for (Mor m : fs) {
            if (f.map(c.compose(g, m)) != x.compose(fg, f.map(m))) {
              out.push_back("composition not preserved on (" +
                            c.morphism_name(g) + ", " + c.morphism_name(m) +
                            ")");
              if (out.size() > 32) return out;
            }
          }
        }
      }
    }
  }
  return out;
}

class NaturalTransformation {
 public:
  NaturalTransformation(std::string name, Functor from, Functor to,
                        std::function<Mor(Obj)> component)
      : name_(std::move(name)),
        from_(std::move(from)),
        to_(std::move(to)),
        component_(std::move(component)) {}

  const std::string& name() const { return name_; }
  const Functor& from() const { return from_; }
  const Functor& to() const { return to_; }
  Mor at(Obj o) const { return component_(o); }

 private:
  std::string name_;
  Functor from_;
  Functor to_;
  std::function<Mor(Obj)> component_;
};

inline bool component_well_typed(const NaturalTransformation& n, Obj o) {
  const Mor comp = n.at(o);
  const Category& x = n.from().target();
  return x.contains(comp) && mor_dom(comp) == n.from().map(o) &&
         mor_cod(comp) == n.to().map(o);
}

inline std::vector<std::string> naturality_violations(
    const NaturalTransformation& n, std::span<const Obj> scope) {
  std::vector<std::string> out;
  const Category& c = n.from().source();
  const Category& x = n.from().target();
  for (Obj o : scope) {
    if (!component_well_typed(n, o)) {
      out.push_back(n.name() + " component at " + c.object_name(o) +
                    " ill-typed");
    }
  }
  for (Obj a : scope) {
    if (!component_well_typed(n, a)) continue;
    for (Obj b : scope) {
      if (!component_well_typed(n, b)) continue;
      for (Mor m : c.hom(a, b)) {
        if (x.compose(n.to().map(m), n.at(a)) !=
            x.compose(n.at(b), n.from().map(m))) {
          out.push_back(n.name() + " square at " + c.morphism_name(m) +
                        " does not commute");
          if (out.size() > 32) return out;
        }
      }
    }
  }
  return out;
}

// (left -| right) with unit 1 => right.left and counit left.right => 1.
struct Adjunction {
  Functor left;
  Functor right;
  std::function<Mor(Obj)> unit;
  std::function<Mor(Obj)> counit;

  NaturalTransformation unit_transformation() const {
    return NaturalTransformation("unit", Functor::identity(left.source()),
                                 compose(right, left), unit);
  }
  NaturalTransformation counit_transformation() const {
    return NaturalTransformation("counit", compose(left, right),
                                 Functor::identity(right.source()), counit);
  }
};

inline ValidationReport validate_adjunction(const Adjunction& adj,
                                            std::span<const Obj> c_scope,
                                            std::span<const Obj> x_scope) {
  ValidationReport report;
  const Category& c = adj.left.source();
  const Category& x = adj.left.target();
  const NaturalTransformation unit = adj.unit_transformation();
  const NaturalTransformation counit = adj.counit_transformation();
  for (auto& v : naturality_violations(unit, c_scope)) {
    report.violations.push_back(v);
  }
  for (auto& v : naturality_violations(counit, x_scope)) {
    report.violations.push_back(v);
  }
  // Ill-typed components already reported; triangles need typed data.
  if (!report.ok()) return report;
  for (Obj a : c_scope) {
    // counit at left(a) after left(unit at a) = identity
    const Mor composite =
        x.compose(adj.counit(adj.left.map(a)), adj.left.map(adj.unit(a)));
    if (composite != x.identity(adj.left.map(a))) {
      report.violations.push_back("left triangle fails at " +
                                  c.object_name(a));
    }
  }
  for (Obj b : x_scope) {
    const Mor composite =
        c.compose(adj.right.map(adj.counit(b)), adj.unit(adj.right.map(b)));
    if (composite != c.identity(adj.right.map(b))) {
      report.violations.push_back("right triangle fails at " +
                                  x.object_name(b));
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Functor property flags

struct PropertyCheck {
  bool holds = true;
  std::string witness;
};

struct PropertyReport {
  PropertyCheck faithful;
  PropertyCheck full;
  PropertyCheck preserves_monos;
  PropertyCheck reflects_monos;
  PropertyCheck preserves_epis;
  PropertyCheck reflects_epis;
  PropertyCheck preserves_pullbacks;
  PropertyCheck preserves_terminal;
};

inline PropertyReport functor_properties(const Functor& f, const Tier& tc,
                                         const Tier& tx) {
  if (!f.source().same_underlying(tc.ambient) ||
      !f.target().same_underlying(tx.ambient)) {
    throw std::invalid_argument(
        "functor_properties: tiers do not match the functor");
  }
  PropertyReport report;
  const Category& c = tc.ambient;
  const Category& x = tx.ambient;

  for (Obj a : tc.core) {
    for (Obj b : tc.core) {
      std::unordered_map<Mor, Mor> image;
      for (Mor m : c.hom(a, b)) {
        auto [it, fresh] = image.emplace(f.map(m), m);
        if (!fresh && report.faithful.holds) {
          report.faithful = {false, c.morphism_name(it->second) + " and " +
                                        c.morphism_name(m)};
        }
      }
      for (Mor u : x.hom(f.map(a), f.map(b))) {
        if (!image.count(u) && report.full.holds) {
          report.full = {false, x.morphism_name(u) + " is not in the image"};
        }
      }
    }
  }

  for (Obj a : tc.core) {
    for (Obj b : tc.core) {
      for (Mor m : c.hom(a, b)) {
        const bool mono_here = is_mono(c, m, tc.core);
        const bool mono_there = is_mono(x, f.map(m), tx.core);
        const bool epi_here = is_epi(c, m, tc.core);
        const bool epi_there = is_epi(x, f.map(m), tx.core);
        if (mono_here && !mono_there && report.preserves_monos.holds) {
          report.preserves_monos = {false, c.morphism_name(m)};
        }
        if (mono_there && !mono_here && report.reflects_monos.holds) {
          report.reflects_monos = {false, c.morphism_name(m)};
        }
        if (epi_here && !epi_there && report.preserves_epis.holds) {
          report.preserves_epis = {false, c.morphism_name(m)};
        }
        if (epi_there && !epi_here && report.reflects_epis.holds) {
          report.reflects_epis = {false, c.morphism_name(m)};
        }
      }
    }
  }

  // Every pullback square of core data must land on a pullback square.
  const std::vector<Obj> candidates = all_objects(c);
  for (Obj z : tc.core) {
    for (Obj a : tc.core) {
      for (Obj b : tc.core) {
        for (Mor m : c.hom(a, z)) {
          for (Mor g : c.hom(b, z)) {
            if (!report.preserves_pullbacks.holds) break;
            const PullbackResult pb = tier_pullback(tc, m, g, candidates);
            if (!pb.present) continue;
            std::vector<std::uint64_t> cone_counts(tx.core.size());
            for (std::size_t i = 0; i < tx.core.size(); ++i) {
              cone_counts[i] =
                  detail::count_cones(x, f.map(m), f.map(g), tx.core[i]);
            }
            if (!detail::verify_pullback(x, f.map(m), f.map(g),
                                         f.map(pb.apex), f.map(pb.to_left),
                                         f.map(pb.to_right), tx.core,
                                         cone_counts)) {
              report.preserves_pullbacks = {
                  false, "square over (" + c.morphism_name(m) + ", " +
                             c.morphism_name(g) + ")"};
            }
          }
        }
      }
    }
  }

  const std::vector<Obj> c_candidates = all_objects(c);
  if (auto t = terminal(c, tc.core, c_candidates)) {
    for (Obj w : tx.core) {
      if (x.hom_size(w, f.map(*t)) != 1) {
        report.preserves_terminal = {false, c.object_name(*t)};
        break;
      }
    }
  }
  return report;
}

inline bool is_fully_faithful(const PropertyReport& r) {
  return r.faithful.holds && r.full.holds;
}

// ---------------------------------------------------------------------------
// Localization triples: H -| F -| G with F : C -> X

struct LocalizationTriple {
  std::string name;
  Tier c_tier;
  Tier x_tier;
  Functor forward;    // F : C -> X
  Functor right_adj;  // G : X -> C, fully faithful under the definitions
  Functor left_adj;   // H : X -> C
  std::function<Mor(Obj)> unit;         // eta_c : c -> GF(c)
  std::function<Mor(Obj)> counit;       // eps_x : FG(x) -> x
  std::function<Mor(Obj)> left_unit;    // zeta_x : x -> FH(x)
  std::function<Mor(Obj)> left_counit;  // theta_c : HF(c) -> c

  Adjunction fg_adjunction() const {
    return Adjunction{forward, right_adj, unit, counit};
  }
  Adjunction hf_adjunction() const {
    return Adjunction{left_adj, forward, left_unit, left_counit};
  }
};

inline LocalizationTriple identity_localization(const Tier& t) {
  const Category& c = t.ambient;
  const Functor id = Functor::identity(c);
  auto id_component = [c](Obj o) { return c.identity(o); };
  return LocalizationTriple{"identity", t,       t,
                            id,         id,      id,
                            id_component, id_component, id_component,
                            id_component};
}

// F -| G and H -| F flip roles under op: the opposite triple localizes C^op
// over X^op with H^op as the new right adjoint.
inline LocalizationTriple opposite_triple(const LocalizationTriple& l) {
  return LocalizationTriple{
      l.name + "^op",
      opposite_tier(l.c_tier),
      opposite_tier(l.x_tier),
      opposite(l.forward),
      opposite(l.left_adj),
      opposite(l.right_adj),
      [l](Obj c) { return opposite_mor(l.left_counit(c)); },
      [l](Obj x) { return opposite_mor(l.left_unit(x)); },
      [l](Obj x) { return opposite_mor(l.counit(x)); },
      [l](Obj c) { return opposite_mor(l.unit(c)); }};
}

// ---------------------------------------------------------------------------
// Theorem verification plumbing

struct TheoremCheck {
  explicit TheoremCheck(std::string theorem_id) : id(std::move(theorem_id)) {}

  std::string id;
  bool applicable = true;
  std::string blocker;  // failing hypothesis when not applicable
  bool passed = false;
  std::vector<std::string> failures;

  bool ok() const { return !applicable || (passed && failures.empty()); }
};

struct TheoremReport {
  std::vector<TheoremCheck> checks;
  bool all_ok() const {
    for (const auto& c : checks) {
      if (!c.ok()) return false;
    }
    return true;
  }
};

struct LocalizationVerdict {
  bool holds = true;
  std::vector<std::string> failures;

  void fail(std::string why) {
    holds = false;
    failures.push_back(std::move(why));
  }
};

// Faithful essential localization: both adjunctions valid, F faithful and
// finite-limit preserving (pullbacks and the terminal object over the tier),
// G fully faithful, and H fully faithful as a cross-check.
inline LocalizationVerdict is_faithful_essential_localization(
    const LocalizationTriple& l) {
  LocalizationVerdict verdict;
  for (auto& v : functor_violations(l.forward, l.c_tier.core)) {
    verdict.fail("F: " + v);
  }
  for (auto& v : functor_violations(l.right_adj, l.x_tier.core)) {
    verdict.fail("G: " + v);
  }
  for (auto& v : functor_violations(l.left_adj, l.x_tier.core)) {
    verdict.fail("H: " + v);
  }
  if (!verdict.holds) return verdict;

  const ValidationReport fg =
      validate_adjunction(l.fg_adjunction(), l.c_tier.core, l.x_tier.core);
  for (auto& v : fg.violations) verdict.fail("F -| G: " + v);
  const ValidationReport hf =
      validate_adjunction(l.hf_adjunction(), l.x_tier.core, l.c_tier.core);
  for (auto& v : hf.violations) verdict.fail("H -| F: " + v);
  if (!verdict.holds) return verdict;

  const PropertyReport f_props =
      functor_properties(l.forward, l.c_tier, l.x_tier);
  if (!f_props.faithful.holds) {
    verdict.fail("F not faithful: " + f_props.faithful.witness);
  }
  if (!f_props.preserves_pullbacks.holds) {
    verdict.fail("F does not preserve pullbacks: " +
                 f_props.preserves_pullbacks.witness);
  }
  if (!f_props.preserves_terminal.holds) {
    verdict.fail("F does not preserve the terminal object");
  }
  const PropertyReport g_props =
      functor_properties(l.right_adj, l.x_tier, l.c_tier);
  if (!is_fully_faithful(g_props)) verdict.fail("G not fully faithful");
  const PropertyReport h_props =
      functor_properties(l.left_adj, l.x_tier, l.c_tier);
  if (!is_fully_faithful(h_props)) verdict.fail("H not fully faithful");
  return verdict;
}

}  // namespace fincat

#endif  // FINCAT_FUNCTOR_HPP_
