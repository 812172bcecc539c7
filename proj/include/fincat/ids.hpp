#ifndef FINCAT_IDS_HPP_
#define FINCAT_IDS_HPP_

#include <cstdint>
#include <limits>
#include <stdexcept>

namespace fincat {

// Objects are dense indices 0..object_count-1.
using Obj = std::uint32_t;

// A morphism id packs (dom, cod, k) where k is the position of the morphism
// in the hom-set hom(dom, cod), enumerated in a fixed order by the category.
// Layout: [dom:14][cod:14][k:36].
using Mor = std::uint64_t;

inline constexpr int kObjBits = 14;
inline constexpr int kIndexBits = 36;
inline constexpr Obj kMaxObj = (Obj{1} << kObjBits) - 1;
inline constexpr std::uint64_t kMaxHomIndex = (std::uint64_t{1} << kIndexBits) - 1;
inline constexpr Mor kInvalidMor = std::numeric_limits<Mor>::max();

constexpr Mor make_mor(Obj dom, Obj cod, std::uint64_t k) {
  return (static_cast<Mor>(dom) << (kObjBits + kIndexBits)) |
         (static_cast<Mor>(cod) << kIndexBits) | k;
}

constexpr Obj mor_dom(Mor m) {
  return static_cast<Obj>(m >> (kObjBits + kIndexBits));
}

constexpr Obj mor_cod(Mor m) {
  return static_cast<Obj>((m >> kIndexBits) & kMaxObj);
}

constexpr std::uint64_t mor_index(Mor m) { return m & kMaxHomIndex; }

inline Mor checked_mor(std::uint64_t dom, std::uint64_t cod, std::uint64_t k) {
  if (dom > kMaxObj || cod > kMaxObj || k > kMaxHomIndex) {
    throw std::overflow_error("morphism id out of representable range");
  }
  return make_mor(static_cast<Obj>(dom), static_cast<Obj>(cod), k);
}

}  // namespace fincat

#endif  // FINCAT_IDS_HPP_
