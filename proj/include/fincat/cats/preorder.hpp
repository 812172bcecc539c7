#ifndef FINCAT_CATS_PREORDER_HPP_
#define FINCAT_CATS_PREORDER_HPP_

#include <algorithm>
#include <cstdint>
#include <mutex>
#include <sstream>
#include <unordered_map>
#include <vector>

#include "fincat/cats/finset.hpp"
#include "fincat/category.hpp"

namespace fincat::cats {

// All preorders on labelled point sets {0..k-1}, k up to max_points, with
// monotone maps. These are exactly the finite topological spaces with their
// continuous maps, encoded through the specialization order. A relation on k
// points is a k*k bitmask, row-major, diagonal always set. Morphisms are
// digit strings like the finite-set skeleton, filtered to monotone ones; the
// hom index is the rank in that filtered lexicographic list.
//
// When `pointed` is set, point 0 of every space is a basepoint: sizes start
// at 1 and maps fix point 0.
class PreorderProvider final : public CatProvider {
 public:
  PreorderProvider(Obj max_points, bool pointed)
      : max_points_(max_points), pointed_(pointed) {
    if (max_points > 5) {
      throw std::invalid_argument("preorder enumeration capped at 5 points");
    }
    const Obj first = pointed_ ? 1 : 0;
    for (Obj k = first; k <= max_points_; ++k) {
      offsets_.push_back(static_cast<Obj>(total_));
      sizes_.push_back(k);
      masks_.emplace_back(enumerate_preorders(k));
      total_ += masks_.back().size();
    }
  }

  std::size_t object_count() const override { return total_; }

  Obj points_of(Obj o) const { return sizes_.at(tier_of(o)); }
  std::uint32_t mask_of(Obj o) const {
    const std::size_t t = tier_of(o);
    return masks_[t][o - offsets_[t]];
  }

  // Object with the given point count and relation mask, if enumerated.
  std::optional<Obj> object_for(Obj points, std::uint32_t mask) const {
    for (std::size_t t = 0; t < sizes_.size(); ++t) {
      if (sizes_[t] != points) continue;
      const auto& list = masks_[t];
      auto it = std::lower_bound(list.begin(), list.end(), mask);
      if (it == list.end() || *it != mask) return std::nullopt;
      return static_cast<Obj>(offsets_[t] + (it - list.begin()));
    }
    return std::nullopt;
  }

  Obj discrete_object(Obj points) const {
    return *object_for(points, diagonal_mask(points));
  }
  Obj indiscrete_object(Obj points) const {
    return *object_for(points, full_mask(points));
  }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    return maps(a, b).size();
  }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    const std::size_t n = maps(a, b).size();
    out.clear();
    out.reserve(n);
    for (std::size_t k = 0; k < n; ++k) out.push_back(make_mor(a, b, k));
  }

  Mor identity(Obj a) const override {
    const Obj k = points_of(a);
    std::vector<Obj> digits(k);
    std::iota(digits.begin(), digits.end(), 0);
    return encode(a, a, digits);
  }

  Mor compose(Mor g, Mor f) const override {
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    std::vector<Obj> composite(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) composite[i] = dg[df[i]];
    return encode(mor_dom(f), mor_cod(g), composite);
  }

  std::string object_name(Obj o) const override {
    std::ostringstream os;
    os << (pointed_ ? "Q" : "P") << points_of(o) << "#"
       << (o - offsets_[tier_of(o)]);
    return os.str();
  }

  std::string morphism_name(Mor m) const override {
    std::ostringstream os;
    os << "(";
    const std::vector<Obj> d = decode(m);
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
    os << "):" << object_name(mor_dom(m)) << "->" << object_name(mor_cod(m));
    return os.str();
  }

  std::optional<Square> pullback_hint(Mor f, Mor g) const override {
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    const Obj ka = points_of(mor_dom(f));
    const Obj kb = points_of(mor_dom(g));
    const std::uint32_t ra = mask_of(mor_dom(f));
    const std::uint32_t rb = mask_of(mor_dom(g));
    std::vector<Obj> xs, ys;
    for (Obj x = 0; x < ka; ++x) {
      for (Obj y = 0; y < kb; ++y) {
        if (df[x] == dg[y]) {
          xs.push_back(x);
          ys.push_back(y);
        }
      }
    }
    const Obj m = static_cast<Obj>(xs.size());
    if (m > max_points_ || (pointed_ && m == 0)) return std::nullopt;
    // Componentwise order on the matched pairs.
    std::uint32_t mask = 0;
    for (Obj i = 0; i < m; ++i) {
      for (Obj j = 0; j < m; ++j) {
        if (related(ra, ka, xs[i], xs[j]) && related(rb, kb, ys[i], ys[j])) {
          mask |= std::uint32_t{1} << (i * m + j);
        }
      }
    }
    const auto apex = object_for(m, mask);
    if (!apex) return std::nullopt;
    return Square{*apex, encode(*apex, mor_dom(f), xs),
                  encode(*apex, mor_dom(g), ys)};
  }

  std::optional<Square> pushout_hint(Mor f, Mor g) const override {
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    const Obj a = mor_cod(f);
    const Obj b = mor_cod(g);
    const Obj ka = points_of(a);
    const Obj kb = points_of(b);
    detail::TinyPartition part(ka + kb);
    if (pointed_) part.merge(0, ka);
    for (std::size_t z = 0; z < df.size(); ++z) part.merge(df[z], ka + dg[z]);
    const std::vector<std::size_t> label = part.labels();
    const std::size_t classes =
        label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    if (classes > max_points_ || (pointed_ && classes == 0)) {
      return std::nullopt;
    }
    // Transitive closure of the transported relations.
    const Obj m = static_cast<Obj>(classes);
    std::vector<std::vector<bool>> rel(m, std::vector<bool>(m, false));
    for (Obj i = 0; i < m; ++i) rel[i][i] = true;
    const std::uint32_t ra = mask_of(a);
    const std::uint32_t rb = mask_of(b);
    for (Obj i = 0; i < ka; ++i) {
      for (Obj j = 0; j < ka; ++j) {
        if (related(ra, ka, i, j)) rel[label[i]][label[j]] = true;
      }
    }
    for (Obj i = 0; i < kb; ++i) {
      for (Obj j = 0; j < kb; ++j) {
        if (related(rb, kb, i, j)) rel[label[ka + i]][label[ka + j]] = true;
      }
    }
    for (Obj via = 0; via < m; ++via) {
      for (Obj i = 0; i < m; ++i) {
        if (!rel[i][via]) continue;
        for (Obj j = 0; j < m; ++j) {
          if (rel[via][j]) rel[i][j] = true;
        }
      }
    }
    std::uint32_t mask = 0;
    for (Obj i = 0; i < m; ++i) {
      for (Obj j = 0; j < m; ++j) {
        if (rel[i][j]) mask |= std::uint32_t{1} << (i * m + j);
      }
    }
    const auto apex = object_for(m, mask);
    if (!apex) return std::nullopt;
    std::vector<Obj> in1(ka), in2(kb);
    for (Obj i = 0; i < ka; ++i) in1[i] = static_cast<Obj>(label[i]);
    for (Obj j = 0; j < kb; ++j) in2[j] = static_cast<Obj>(label[ka + j]);
    return Square{*apex, encode(a, *apex, in1), encode(b, *apex, in2)};
  }

  std::vector<Obj> decode(Mor m) const {
    const std::uint32_t packed = maps(mor_dom(m), mor_cod(m)).at(mor_index(m));
    return unpack(packed, points_of(mor_dom(m)), points_of(mor_cod(m)));
  }

  Mor encode(Obj a, Obj b, const std::vector<Obj>& digits) const {
    const std::uint32_t packed = pack(digits, points_of(b));
    const auto& list = maps(a, b);
    const auto it = std::lower_bound(list.begin(), list.end(), packed);
    if (it == list.end() || *it != packed) {
      throw std::logic_error("map is not monotone (or not basepointed)");
    }
    return make_mor(a, b, static_cast<std::uint64_t>(it - list.begin()));
  }

  bool pointed() const { return pointed_; }
  Obj max_points() const { return max_points_; }

  static bool related(std::uint32_t mask, Obj k, Obj i, Obj j) {
    return (mask >> (i * k + j)) & 1u;
  }
  static std::uint32_t diagonal_mask(Obj k) {
    std::uint32_t mask = 0;
    for (Obj i = 0; i < k; ++i) mask |= std::uint32_t{1} << (i * k + i);
    return mask;
  }
  static std::uint32_t full_mask(Obj k) {
    return k == 0 ? 0
                  : static_cast<std::uint32_t>((std::uint64_t{1} << (k * k)) -
                                               1);
  }

 private:
  std::size_t tier_of(Obj o) const {
    std::size_t t = 0;
    while (t + 1 < offsets_.size() && o >= offsets_[t + 1]) ++t;
    if (o >= total_) throw std::invalid_argument("unknown object id");
    return t;
  }

  static std::vector<std::uint32_t> enumerate_preorders(Obj k) {
    std::vector<std::uint32_t> out;
    const Obj off_bits = k * k - k;
    const std::uint64_t limit = std::uint64_t{1} << off_bits;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
      std::uint32_t mask = diagonal_mask(k);
      Obj t = 0;
      for (Obj i = 0; i < k; ++i) {
        for (Obj j = 0; j < k; ++j) {
          if (i == j) continue;
          if ((bits >> t) & 1u) mask |= std::uint32_t{1} << (i * k + j);
          ++t;
        }
      }
      bool transitive = true;
      for (Obj i = 0; i < k && transitive; ++i) {
        for (Obj j = 0; j < k && transitive; ++j) {
          if (!related(mask, k, i, j)) continue;
          for (Obj l = 0; l < k; ++l) {
            if (related(mask, k, j, l) && !related(mask, k, i, l)) {
              transitive = false;
              break;
            }
          }
        }
      }
      if (transitive) out.push_back(mask);
    }
    return out;  // ascending: the off-diagonal spread is order-preserving
  }

  static std::uint32_t pack(const std::vector<Obj>& digits, Obj base) {
    std::uint32_t k = 0;
    for (Obj d : digits) k = k * std::max<Obj>(base, 1) + d;
    return k;
  }
  static std::vector<Obj> unpack(std::uint32_t packed, Obj len, Obj base) {
    std::vector<Obj> digits(len);
    for (Obj i = len; i-- > 0;) {
      digits[i] = packed % base;
      packed /= base;
    }
    return digits;
  }

  const std::vector<std::uint32_t>& maps(Obj a, Obj b) const {
    const std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = map_cache_.find(key);
    if (it != map_cache_.end()) return *it->second;

    const Obj ka = points_of(a);
    const Obj kb = points_of(b);
    const std::uint32_t ra = mask_of(a);
    const std::uint32_t rb = mask_of(b);
    auto list = std::make_unique<std::vector<std::uint32_t>>();
    std::vector<Obj> digits(ka, 0);
    const std::uint64_t candidates = detail::checked_pow(kb, ka);
    for (std::uint64_t n = 0; n < candidates; ++n) {
      std::uint64_t v = n;
      for (Obj i = ka; i-- > 0;) {
        digits[i] = static_cast<Obj>(v % kb);
        v /= kb;
      }
      if (pointed_ && ka > 0 && digits[0] != 0) continue;
      bool monotone = true;
      for (Obj i = 0; i < ka && monotone; ++i) {
        for (Obj j = 0; j < ka; ++j) {
          if (related(ra, ka, i, j) && !related(rb, kb, digits[i], digits[j])) {
            monotone = false;
            break;
          }
        }
      }
      if (monotone) list->push_back(pack(digits, kb));
    }
    return *map_cache_.emplace(key, std::move(list)).first->second;
  }

  Obj max_points_;
  bool pointed_;
  std::size_t total_ = 0;
  std::vector<Obj> offsets_;
  std::vector<Obj> sizes_;
  std::vector<std::vector<std::uint32_t>> masks_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<std::uint64_t,
                             std::unique_ptr<std::vector<std::uint32_t>>>
      map_cache_;
};

}  // namespace fincat::cats

#endif  // FINCAT_CATS_PREORDER_HPP_
