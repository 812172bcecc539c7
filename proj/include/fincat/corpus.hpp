#ifndef FINCAT_CORPUS_HPP_
#define FINCAT_CORPUS_HPP_

#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fincat/cats/abelian.hpp"
#include "fincat/cats/finset.hpp"
#include "fincat/cats/pointed_set.hpp"
#include "fincat/cats/preorder.hpp"
#include "fincat/cats/semilattice.hpp"
#include "fincat/essentials.hpp"
#include "fincat/functor.hpp"

namespace fincat::corpus {

// ---------------------------------------------------------------------------
// Semilattices

inline Category terminal_category() {
  TableBuilder b;
  const Obj star = b.add_object("*");
  const Mor id = b.add_morphism("id", star, star);
  b.set_identity(star, id);
  b.set_composite(id, id, id);
  return b.build();
}

inline Tier semilattice_tier(const cats::MeetTable& table) {
  Category c = cats::semilattice_category(table);
  std::vector<Obj> core = all_objects(c);
  return make_tier(std::move(c), std::move(core), true, true);
}

inline Tier terminal_tier() {
  Category c = terminal_category();
  return make_tier(c, all_objects(c), true, true);
}

// The collapse of a bounded semilattice onto the terminal category; its right
// adjoint picks the top element and its left adjoint the bottom one.
inline LocalizationTriple semilattice_localization(
    const cats::MeetTable& table) {
  Tier c_tier = semilattice_tier(table);
  Tier x_tier = terminal_tier();
  const Category c = c_tier.ambient;
  const Category x = x_tier.ambient;
  const auto top = terminal(c);
  const auto bottom = initial(c);
  if (!top || !bottom) {
    throw std::invalid_argument(
        "semilattice localization needs both a top and a bottom element");
  }
  const Obj t = *top;
  const Obj bot = *bottom;
  Functor forward("!", c, x, [](Obj) { return Obj{0}; },
                  [x](Mor) { return x.identity(0); });
  Functor pick_top("top", x, c, [t](Obj) { return t; },
                   [c, t](Mor) { return c.identity(t); });
  Functor pick_bottom("bottom", x, c, [bot](Obj) { return bot; },
                      [c, bot](Mor) { return c.identity(bot); });
  return LocalizationTriple{
      "semilattice-over-terminal",
      std::move(c_tier),
      std::move(x_tier),
      std::move(forward),
      std::move(pick_top),
      std::move(pick_bottom),
      [c, t](Obj o) { return c.hom(o, t).at(0); },
      [x](Obj) { return x.identity(0); },
      [x](Obj) { return x.identity(0); },
      [c, bot](Obj o) { return c.hom(bot, o).at(0); }};
}

// ---------------------------------------------------------------------------
// Finite sets

inline Tier finset_tier(Obj core_bound, Obj ambient_bound) {
  if (ambient_bound < core_bound * core_bound) {
    throw std::invalid_argument(
        "finset tier needs ambient >= core^2 to host pullbacks");
  }
  Category ambient = cats::finset_category(ambient_bound);
  std::vector<Obj> core;
  for (Obj o = 0; o <= core_bound; ++o) core.push_back(o);
  const bool claim_pushouts = ambient_bound >= 2 * core_bound;
  return make_tier(std::move(ambient), std::move(core), true, claim_pushouts);
}

// ---------------------------------------------------------------------------
// Pointed sets, with or without the freely added initial object

inline Tier pointed_finset_with_initial(Obj core_bound, Obj ambient_bound) {
  if (ambient_bound < core_bound * core_bound) {
    throw std::invalid_argument(
        "pointed tier needs ambient >= core^2 to host pullbacks");
  }
  auto provider =
      std::make_shared<cats::PointedSetProvider>(ambient_bound, true);
  Category ambient(provider);
  std::vector<Obj> core;
  for (Obj o = 0; o <= core_bound; ++o) core.push_back(o);  // I plus sizes<=n
  return make_tier(std::move(ambient), std::move(core), true,
                   ambient_bound >= 2 * core_bound);
}

inline Tier pointed_finset_tier(Obj core_bound, Obj ambient_bound) {
  if (ambient_bound < core_bound * core_bound) {
    throw std::invalid_argument(
        "pointed tier needs ambient >= core^2 to host pullbacks");
  }
  auto provider =
      std::make_shared<cats::PointedSetProvider>(ambient_bound, false);
  Category ambient(provider);
  std::vector<Obj> core;
  for (Obj s = 1; s <= core_bound; ++s) {
    core.push_back(provider->object_of_size(s));
  }
  return make_tier(std::move(ambient), std::move(core), true,
                   ambient_bound >= 2 * core_bound);
}

// ---------------------------------------------------------------------------
// Finite preorders (= finite topological spaces) over finite sets

namespace detail {

inline std::vector<Obj> preorder_core(const cats::PreorderProvider& provider,
                                      Obj core_points) {
  std::vector<Obj> core;
  for (Obj o = 0; o < provider.object_count(); ++o) {
    if (provider.points_of(o) <= core_points) core.push_back(o);
  }
  return core;
}

}  // namespace detail

// The forgetful functor from preorders on <= ambient_bound labelled points to
// the finite-set skeleton, with the indiscrete and discrete reflections as
// right and left adjoints. Every arrow of the adjunction data carries the
// identity on points.
inline LocalizationTriple finpreord_localization(Obj core_bound,
                                                 Obj ambient_bound) {
  auto pre = std::make_shared<cats::PreorderProvider>(ambient_bound, false);
  Category c_ambient{pre};
  Tier c_tier = make_tier(c_ambient, detail::preorder_core(*pre, core_bound),
                          true, true);
  Tier x_tier = finset_tier(core_bound, ambient_bound);

  Functor forward(
      "points", c_ambient, x_tier.ambient,
      [pre](Obj o) { return pre->points_of(o); },
      [pre](Mor m) {
        return cats::FinSetProvider::encode(pre->points_of(mor_dom(m)),
                                            pre->points_of(mor_cod(m)),
                                            pre->decode(m));
      });
  auto fs = std::dynamic_pointer_cast<const cats::FinSetProvider>(
      x_tier.ambient.provider_ptr());
  Functor indiscrete(
      "indiscrete", x_tier.ambient, c_ambient,
      [pre](Obj s) { return pre->indiscrete_object(s); },
      [pre, fs](Mor m) {
        return pre->encode(pre->indiscrete_object(mor_dom(m)),
                           pre->indiscrete_object(mor_cod(m)), fs->decode(m));
      });
  Functor discrete(
      "discrete", x_tier.ambient, c_ambient,
      [pre](Obj s) { return pre->discrete_object(s); },
      [pre, fs](Mor m) {
        return pre->encode(pre->discrete_object(mor_dom(m)),
                           pre->discrete_object(mor_cod(m)), fs->decode(m));
      });

  auto carried = [pre](Obj from, Obj to) {
    std::vector<Obj> digits(pre->points_of(from));
    std::iota(digits.begin(), digits.end(), 0);
    return pre->encode(from, to, digits);
  };
  const Category x = x_tier.ambient;
  return LocalizationTriple{
      "finpreord/" + std::to_string(core_bound) + "," +
          std::to_string(ambient_bound),
      std::move(c_tier),
      std::move(x_tier),
      std::move(forward),
      std::move(indiscrete),
      std::move(discrete),
      [pre, carried](Obj o) {
        return carried(o, pre->indiscrete_object(pre->points_of(o)));
      },
      [x](Obj s) { return x.identity(s); },
      [x](Obj s) { return x.identity(s); },
      [pre, carried](Obj o) {
        return carried(pre->discrete_object(pre->points_of(o)), o);
      }};
}

inline LocalizationTriple pointed_finpreord_localization(Obj core_bound,
                                                         Obj ambient_bound) {
  auto pre = std::make_shared<cats::PreorderProvider>(ambient_bound, true);
  Category c_ambient{pre};
  Tier c_tier = make_tier(c_ambient, detail::preorder_core(*pre, core_bound),
                          true, true);
  Tier x_tier = pointed_finset_tier(core_bound, ambient_bound);
  auto ps = std::dynamic_pointer_cast<const cats::PointedSetProvider>(
      x_tier.ambient.provider_ptr());

  Functor forward(
      "points", c_ambient, x_tier.ambient,
      [pre, ps](Obj o) { return ps->object_of_size(pre->points_of(o)); },
      [pre, ps](Mor m) {
        return ps->encode(ps->object_of_size(pre->points_of(mor_dom(m))),
                          ps->object_of_size(pre->points_of(mor_cod(m))),
                          pre->decode(m));
      });
  Functor indiscrete(
      "indiscrete", x_tier.ambient, c_ambient,
      [pre, ps](Obj s) { return pre->indiscrete_object(ps->size_of(s)); },
      [pre, ps](Mor m) {
        return pre->encode(pre->indiscrete_object(ps->size_of(mor_dom(m))),
                           pre->indiscrete_object(ps->size_of(mor_cod(m))),
                           ps->decode(m));
      });
  Functor discrete(
      "discrete", x_tier.ambient, c_ambient,
      [pre, ps](Obj s) { return pre->discrete_object(ps->size_of(s)); },
      [pre, ps](Mor m) {
        return pre->encode(pre->discrete_object(ps->size_of(mor_dom(m))),
                           pre->discrete_object(ps->size_of(mor_cod(m))),
                           ps->decode(m));
      });

  auto carried = [pre](Obj from, Obj to) {
    std::vector<Obj> digits(pre->points_of(from));
    std::iota(digits.begin(), digits.end(), 0);
    return pre->encode(from, to, digits);
  };
  const Category x = x_tier.ambient;
  return LocalizationTriple{
      "pointed-finpreord/" + std::to_string(core_bound) + "," +
          std::to_string(ambient_bound),
      std::move(c_tier),
      std::move(x_tier),
      std::move(forward),
      std::move(indiscrete),
      std::move(discrete),
      [pre, carried](Obj o) {
        return carried(o, pre->indiscrete_object(pre->points_of(o)));
      },
      [x](Obj s) { return x.identity(s); },
      [x](Obj s) { return x.identity(s); },
      [pre, carried](Obj o) {
        return carried(pre->discrete_object(pre->points_of(o)), o);
      }};
}

// ---------------------------------------------------------------------------
// Abelian-group fragment

inline std::vector<std::vector<std::uint32_t>> default_ab_groups() {
  return {{}, {2}, {4}, {2, 2}, {2, 4}};
}

// No closure of any kind is claimed: the fragment refuses pullback-dependent
// checks instead of silently growing.
inline Tier ab_fragment(std::vector<std::vector<std::uint32_t>> groups) {
  Category c(std::make_shared<cats::AbGroupProvider>(std::move(groups)));
  Tier t{c, all_objects(c)};
  return t;
}

// ---------------------------------------------------------------------------
// An adjunction whose unit fails to be an epimorphism: collapse finite sets
// onto the terminal category, with the singleton as right adjoint. The unit
// at 0 is the non-epi 0 -> 1.
struct AdjunctionFixture {
  Tier c_tier;
  Tier x_tier;
  Adjunction adjunction;
};

inline AdjunctionFixture collapse_adjunction(Obj core_bound,
                                             Obj ambient_bound) {
  Tier c_tier = finset_tier(core_bound, ambient_bound);
  Tier x_tier = terminal_tier();
  const Category c = c_tier.ambient;
  const Category x = x_tier.ambient;
  Functor collapse("!", c, x, [](Obj) { return Obj{0}; },
                   [x](Mor) { return x.identity(0); });
  Functor point("one", x, c, [](Obj) { return Obj{1}; },
                [c](Mor) { return c.identity(1); });
  Adjunction adj{std::move(collapse), std::move(point),
                 [](Obj o) { return make_mor(o, 1, 0); },
                 [x](Obj) { return x.identity(0); }};
  return AdjunctionFixture{std::move(c_tier), std::move(x_tier),
                           std::move(adj)};
}

// ---------------------------------------------------------------------------
// Named corpus lookup (the CLI boundary)

struct CorpusHandle {
  std::string description;
  Tier tier;
  std::optional<LocalizationTriple> triple;
};

struct BoundOverrides {
  std::optional<Obj> core;
  std::optional<Obj> ambient;
};

namespace detail {

inline std::pair<Obj, Obj> parse_bounds(const std::string& args, Obj def_core,
                                        Obj def_ambient,
                                        const BoundOverrides& overrides) {
  Obj core = def_core;
  Obj ambient = def_ambient;
  if (!args.empty()) {
    const auto comma = args.find(',');
    if (comma == std::string::npos) {
      throw std::invalid_argument("expected <core>,<ambient> in corpus spec");
    }
    core = static_cast<Obj>(std::stoul(args.substr(0, comma)));
    ambient = static_cast<Obj>(std::stoul(args.substr(comma + 1)));
  }
  if (overrides.core) core = *overrides.core;
  if (overrides.ambient) ambient = *overrides.ambient;
  return {core, ambient};
}

}  // namespace detail

inline CorpusHandle build_corpus(const std::string& spec,
                                 const BoundOverrides& overrides = {}) {
  const auto colon = spec.find(':');
  const std::string name = spec.substr(0, colon);
  const std::string args =
      colon == std::string::npos ? "" : spec.substr(colon + 1);

  if (name == "semilattice") {
    cats::MeetTable table;
    if (args.empty() || args == "B2") {
      table = cats::boolean_b2();
    } else if (args.rfind("chain", 0) == 0) {
      table = cats::chain(std::stoul(args.substr(5)));
    } else {
      throw std::invalid_argument("unknown semilattice: " + args);
    }
    LocalizationTriple triple = semilattice_localization(table);
    Tier tier = triple.c_tier;
    return CorpusHandle{"semilattice " + (args.empty() ? "B2" : args),
                        std::move(tier), std::move(triple)};
  }
  if (name == "finset") {
    const auto [n, m] = detail::parse_bounds(args, 3, 9, overrides);
    Tier tier = finset_tier(n, m);
    LocalizationTriple triple = identity_localization(tier);
    return CorpusHandle{"finite sets, core <= " + std::to_string(n) +
                            ", ambient <= " + std::to_string(m),
                        std::move(tier), std::move(triple)};
  }
  if (name == "pointed-finset") {
    const auto [n, m] = detail::parse_bounds(args, 2, 4, overrides);
    Tier tier = pointed_finset_tier(n, m);
    return CorpusHandle{"pointed finite sets", std::move(tier), std::nullopt};
  }
  if (name == "pointed-finset-initial") {
    const auto [n, m] = detail::parse_bounds(args, 2, 4, overrides);
    Tier tier = pointed_finset_with_initial(n, m);
    return CorpusHandle{"pointed finite sets with a free initial object",
                        std::move(tier), std::nullopt};
  }
  if (name == "finpreord" || name == "finpreord-unpointed") {
    const auto [n, m] = detail::parse_bounds(args, 2, 4, overrides);
    LocalizationTriple triple = finpreord_localization(n, m);
    Tier tier = triple.c_tier;
    return CorpusHandle{"finite preorders over finite sets", std::move(tier),
                        std::move(triple)};
  }
  if (name == "pointed-finpreord" || name == "finpreord-pointed") {
    const auto [n, m] = detail::parse_bounds(args, 2, 4, overrides);
    LocalizationTriple triple = pointed_finpreord_localization(n, m);
    Tier tier = triple.c_tier;
    return CorpusHandle{"pointed finite preorders over pointed finite sets",
                        std::move(tier), std::move(triple)};
  }
  if (name == "ab") {
    if (!args.empty() && args != "default") {
      throw std::invalid_argument("only the default abelian fragment exists");
    }
    return CorpusHandle{"abelian 2-group fragment",
                        ab_fragment(default_ab_groups()), std::nullopt};
  }
  throw std::invalid_argument("unknown corpus: " + name);
}

}  // namespace fincat::corpus

#endif  // FINCAT_CORPUS_HPP_
