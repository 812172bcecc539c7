#ifndef FINCAT_LIMITS_HPP_
#define FINCAT_LIMITS_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/ids.hpp"

namespace fincat {

struct PullbackResult {
  bool present = false;
  Obj apex = 0;
  Mor to_left = kInvalidMor;   // apex -> dom(f)
  Mor to_right = kInvalidMor;  // apex -> dom(g)
};

struct PushoutResult {
  bool present = false;
  Obj apex = 0;
  Mor from_left = kInvalidMor;   // cod(f) -> apex
  Mor from_right = kInvalidMor;  // cod(g) -> apex
};

namespace detail {

struct MorPairHash {
  std::size_t operator()(const std::pair<Mor, Mor>& p) const {
    return std::hash<Mor>()(p.first * 0x9e3779b97f4a7c15ull ^ p.second);
  }
};

// Cones over the cospan (f, g) with a fixed vertex, counted by bucketing on
// the common composite into cod(f).
inline std::uint64_t count_cones(const Category& c, Mor f, Mor g, Obj w) {
  std::unordered_map<Mor, std::uint64_t> by_composite;
  for (Mor q : c.hom(w, mor_dom(g))) ++by_composite[c.compose(g, q)];
  std::uint64_t total = 0;
  for (Mor p : c.hom(w, mor_dom(f))) {
    auto it = by_composite.find(c.compose(f, p));
    if (it != by_composite.end()) total += it->second;
  }
  return total;
}

// The universal property, checked exhaustively over the probe objects: for
// each probe W, postcomposition with the projections must carry hom(W, apex)
// bijectively onto the cones from W. Injectivity plus the count equality is
// exactly that bijection, since every image commutes by construction.
inline bool verify_pullback(const Category& c, Mor f, Mor g, Obj apex,
                            Mor p1, Mor p2, std::span<const Obj> probes,
                            const std::vector<std::uint64_t>& cone_counts) {
  if (mor_dom(p1) != apex || mor_dom(p2) != apex) return false;
  if (mor_cod(p1) != mor_dom(f) || mor_cod(p2) != mor_dom(g)) return false;
  if (!c.contains(p1) || !c.contains(p2)) return false;
  if (c.compose(f, p1) != c.compose(g, p2)) return false;

  std::unordered_set<std::pair<Mor, Mor>, MorPairHash> image;
  for (std::size_t i = 0; i < probes.size(); ++i) {
    const Obj w = probes[i];
    if (c.hom_size(w, apex) != cone_counts[i]) return false;
    image.clear();
    for (Mor h : c.hom(w, apex)) {
      if (!image.emplace(c.compose(p1, h), c.compose(p2, h)).second) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

struct LimitSearchOptions {
  // Objects whose cones certify the universal property.
  std::span<const Obj> probes;
  // Apex candidates, tried in the order given; ties between isomorphic
  // apexes resolve to the earliest (smallest id when ascending).
  std::span<const Obj> candidates;
  // Guard against hom-set blowup while enumerating projection pairs.
  std::uint64_t pair_cap = std::uint64_t{1} << 22;
};

inline PullbackResult pullback(const Category& c, Mor f, Mor g,
                               const LimitSearchOptions& options) {
  if (mor_cod(f) != mor_cod(g)) {
    throw std::invalid_argument("pullback: morphisms do not form a cospan");
  }
  std::vector<std::uint64_t> cone_counts(options.probes.size());
  for (std::size_t i = 0; i < options.probes.size(); ++i) {
    cone_counts[i] = detail::count_cones(c, f, g, options.probes[i]);
  }

  // A constructive candidate from the category wins if it certifies.
  if (auto hint = c.pullback_hint(f, g)) {
    if (detail::verify_pullback(c, f, g, hint->apex, hint->left, hint->right,
                                options.probes, cone_counts)) {
      return PullbackResult{true, hint->apex, hint->left, hint->right};
    }
  }

  std::uint64_t pairs_tried = 0;
  std::unordered_map<Mor, std::vector<Mor>> bucket;
  for (Obj apex : options.candidates) {
    bool counts_match = true;
    for (std::size_t i = 0; i < options.probes.size(); ++i) {
      if (c.hom_size(options.probes[i], apex) != cone_counts[i]) {
        counts_match = false;
        break;
      }
    }
    if (!counts_match) continue;

    bucket.clear();
    for (Mor p2 : c.hom(apex, mor_dom(g))) {
      bucket[c.compose(g, p2)].push_back(p2);
    }
    for (Mor p1 : c.hom(apex, mor_dom(f))) {
      auto it = bucket.find(c.compose(f, p1));
      if (it == bucket.end()) continue;
      for (Mor p2 : it->second) {
        if (++pairs_tried > options.pair_cap) {
          throw std::runtime_error(
              "pullback: projection-pair search exceeded cap");
        }
        if (detail::verify_pullback(c, f, g, apex, p1, p2, options.probes,
                                    cone_counts)) {
          return PullbackResult{true, apex, p1, p2};
        }
      }
    }
  }
  return PullbackResult{};
}

inline PushoutResult pushout(const Category& c, Mor f, Mor g,
                             const LimitSearchOptions& options) {
  if (mor_dom(f) != mor_dom(g)) {
    throw std::invalid_argument("pushout: morphisms do not form a span");
  }
  const Category op = c.opposite();
  const PullbackResult pb =
      pullback(op, opposite_mor(f), opposite_mor(g), options);
  PushoutResult result;
  result.present = pb.present;
  if (pb.present) {
    result.apex = pb.apex;
    result.from_left = opposite_mor(pb.to_left);
    result.from_right = opposite_mor(pb.to_right);
  }
  return result;
}

// Exhaustive versions quantifying over the whole category.
inline PullbackResult pullback(const Category& c, Mor f, Mor g) {
  const std::vector<Obj> objs = all_objects(c);
  return pullback(c, f, g, LimitSearchOptions{objs, objs});
}

inline PushoutResult pushout(const Category& c, Mor f, Mor g) {
  const std::vector<Obj> objs = all_objects(c);
  return pushout(c, f, g, LimitSearchOptions{objs, objs});
}

inline std::optional<Obj> terminal(const Category& c,
                                   std::span<const Obj> probes,
                                   std::span<const Obj> candidates) {
  for (Obj t : candidates) {
    bool ok = true;
    for (Obj w : probes) {
      if (c.hom_size(w, t) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<Obj> initial(const Category& c,
                                  std::span<const Obj> probes,
                                  std::span<const Obj> candidates) {
  for (Obj t : candidates) {
    bool ok = true;
    for (Obj w : probes) {
      if (c.hom_size(t, w) != 1) {
        ok = false;
        break;
      }
    }
    if (ok) return t;
  }
  return std::nullopt;
}

inline std::optional<Obj> terminal(const Category& c) {
  const std::vector<Obj> objs = all_objects(c);
  return terminal(c, objs, objs);
}

inline std::optional<Obj> initial(const Category& c) {
  const std::vector<Obj> objs = all_objects(c);
  return initial(c, objs, objs);
}

}  // namespace fincat

#endif  // FINCAT_LIMITS_HPP_
