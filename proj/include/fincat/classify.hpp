#ifndef FINCAT_CLASSIFY_HPP_
#define FINCAT_CLASSIFY_HPP_

#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/ids.hpp"

namespace fincat {

struct MorphismFlags {
  bool mono = false;
  bool epi = false;
  bool split_mono = false;
  bool split_epi = false;
  bool iso = false;
  bool bimorphism = false;
};

// A pair (g, h) with m.g == m.h but g != h refutes mono-ness; the epi case is
// dual. Witness functions return the first violation in id order so reports
// are reproducible.

inline std::optional<std::pair<Mor, Mor>> mono_failure(
    const Category& c, Mor m, std::span<const Obj> probes) {
  const Obj s = mor_dom(m);
  std::unordered_map<Mor, Mor> seen;  // m.g -> g
  for (Obj w : probes) {
    seen.clear();
    for (Mor g : c.hom(w, s)) {
      const Mor mg = c.compose(m, g);
      auto [it, inserted] = seen.emplace(mg, g);
      if (!inserted) return std::make_pair(it->second, g);
    }
  }
  return std::nullopt;
}

inline std::optional<std::pair<Mor, Mor>> epi_failure(
    const Category& c, Mor m, std::span<const Obj> probes) {
  const Obj t = mor_cod(m);
  std::unordered_map<Mor, Mor> seen;  // g.m -> g
  for (Obj w : probes) {
    seen.clear();
    for (Mor g : c.hom(t, w)) {
      const Mor gm = c.compose(g, m);
      auto [it, inserted] = seen.emplace(gm, g);
      if (!inserted) return std::make_pair(it->second, g);
    }
  }
  return std::nullopt;
}

inline bool is_mono(const Category& c, Mor m, std::span<const Obj> probes) {
  return !mono_failure(c, m, probes).has_value();
}

inline bool is_epi(const Category& c, Mor m, std::span<const Obj> probes) {
  return !epi_failure(c, m, probes).has_value();
}

// Retraction r with r.m == id_dom(m), if one exists.
inline std::optional<Mor> retraction_of(const Category& c, Mor m) {
  const Mor want = c.identity(mor_dom(m));
  for (Mor r : c.hom(mor_cod(m), mor_dom(m))) {
    if (c.compose(r, m) == want) return r;
  }
  return std::nullopt;
}

inline std::optional<Mor> section_of(const Category& c, Mor m) {
  const Mor want = c.identity(mor_cod(m));
  for (Mor s : c.hom(mor_cod(m), mor_dom(m))) {
    if (c.compose(m, s) == want) return s;
  }
  return std::nullopt;
}

inline std::optional<Mor> inverse_of(const Category& c, Mor m) {
  const Mor id_dom = c.identity(mor_dom(m));
  const Mor id_cod = c.identity(mor_cod(m));
  for (Mor r : c.hom(mor_cod(m), mor_dom(m))) {
    if (c.compose(r, m) == id_dom && c.compose(m, r) == id_cod) return r;
  }
  return std::nullopt;
}

inline bool is_split_mono(const Category& c, Mor m) {
  return retraction_of(c, m).has_value();
}

inline bool is_split_epi(const Category& c, Mor m) {
  return section_of(c, m).has_value();
}

inline bool is_iso(const Category& c, Mor m) {
  return inverse_of(c, m).has_value();
}

inline MorphismFlags classify(const Category& c, Mor m,
                              std::span<const Obj> probes) {
  if (!c.contains(m)) {
    throw std::invalid_argument("classify: unknown morphism id");
  }
  MorphismFlags flags;
  flags.mono = is_mono(c, m, probes);
  flags.epi = is_epi(c, m, probes);
  flags.split_mono = is_split_mono(c, m);
  flags.split_epi = is_split_epi(c, m);
  flags.iso = inverse_of(c, m).has_value();
  flags.bimorphism = flags.mono && flags.epi;
  return flags;
}

// Quantifiers run over the whole category.
inline MorphismFlags classify_basic(const Category& c, Mor m) {
  const std::vector<Obj> objs = all_objects(c);
  return classify(c, m, objs);
}

}  // namespace fincat

#endif  // FINCAT_CLASSIFY_HPP_
