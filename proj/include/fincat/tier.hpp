#ifndef FINCAT_TIER_HPP_
#define FINCAT_TIER_HPP_

#include <algorithm>
#include <span>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/limits.hpp"

namespace fincat {

// A finite stand-in for a category with all finite (co)limits: quantifiers of
// every check run over the designated core objects, while pullbacks and
// pushouts of core data are hosted by the larger ambient category. Closure
// flags are computed at construction, never asserted.
struct Tier {
  Category ambient;
  std::vector<Obj> core;  // ascending
  bool pullback_closed = false;
  bool pushout_closed = false;

  bool is_core(Obj o) const {
    return std::binary_search(core.begin(), core.end(), o);
  }
};

inline LimitSearchOptions tier_limit_options(const Tier& t,
                                             std::span<const Obj> candidates) {
  LimitSearchOptions options;
  options.probes = t.core;
  options.candidates = candidates;
  return options;
}

// Pullback of a core cospan, certified against all core cones; the apex may
// be any ambient object.
inline PullbackResult tier_pullback(const Tier& t, Mor f, Mor g,
                                    std::span<const Obj> candidates) {
  return pullback(t.ambient, f, g, tier_limit_options(t, candidates));
}

inline PushoutResult tier_pushout(const Tier& t, Mor f, Mor g,
                                  std::span<const Obj> candidates) {
  return pushout(t.ambient, f, g, tier_limit_options(t, candidates));
}

namespace detail {

inline bool cospans_closed(const Tier& t, std::span<const Obj> candidates,
                           bool pullbacks) {
  const Category& c = t.ambient;
  for (Obj z : t.core) {
    for (Obj a : t.core) {
      for (Obj b : t.core) {
        if (b < a) continue;  // pullback(f, g) present iff pullback(g, f) is
        for (Mor f : pullbacks ? c.hom(a, z) : c.hom(z, a)) {
          for (Mor g : pullbacks ? c.hom(b, z) : c.hom(z, b)) {
            const bool present =
                pullbacks ? tier_pullback(t, f, g, candidates).present
                          : tier_pushout(t, f, g, candidates).present;
            if (!present) return false;
          }
        }
      }
    }
  }
  return true;
}

}  // namespace detail

// Builds a tier and runs the exhaustive closure checks for whichever limit
// kinds the caller claims.
inline Tier make_tier(Category ambient, std::vector<Obj> core,
                      bool claim_pullbacks, bool claim_pushouts) {
  std::sort(core.begin(), core.end());
  core.erase(std::unique(core.begin(), core.end()), core.end());
  for (Obj o : core) {
    if (o >= ambient.object_count()) {
      throw std::invalid_argument("tier core object outside ambient category");
    }
  }
  Tier t{std::move(ambient), std::move(core)};
  const std::vector<Obj> candidates = all_objects(t.ambient);
  if (claim_pullbacks) {
    t.pullback_closed = detail::cospans_closed(t, candidates, true);
  }
  if (claim_pushouts) {
    t.pushout_closed = detail::cospans_closed(t, candidates, false);
  }
  return t;
}

inline Tier opposite_tier(const Tier& t) {
  Tier op{t.ambient.opposite(), t.core};
  op.pullback_closed = t.pushout_closed;
  op.pushout_closed = t.pullback_closed;
  return op;
}

// All morphisms whose codomain lies in the core, in ascending id order; this
// is the enumeration domain of the class registries and condition checks.
inline std::vector<Mor> core_codomain_morphisms(const Tier& t) {
  std::vector<Mor> out;
  const std::size_t n = t.ambient.object_count();
  for (Obj a = 0; a < n; ++a) {
    for (Obj b : t.core) {
      const auto& hom = t.ambient.hom(a, b);
      out.insert(out.end(), hom.begin(), hom.end());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fincat

#endif  // FINCAT_TIER_HPP_
