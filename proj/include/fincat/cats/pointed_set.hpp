#ifndef FINCAT_CATS_POINTED_SET_HPP_
#define FINCAT_CATS_POINTED_SET_HPP_

#include <cstdint>
#include <sstream>
#include <vector>

#include "fincat/cats/finset.hpp"
#include "fincat/category.hpp"

namespace fincat::cats {

// Skeletal pointed finite sets: one object per size 1..max_size, basepoint 0,
// maps fixing the basepoint. With `with_initial` the category gains a strict
// initial object I below everything: exactly one morphism out of I into each
// object and none into I. That is the category of algebras for one unary
// operation subject to w(x) = w(y), with I the empty algebra.
//
// Morphisms are digit strings over the non-basepoint points of the domain;
// index = base-|cod| value, lexicographic.
class PointedSetProvider final : public CatProvider {
 public:
  PointedSetProvider(Obj max_size, bool with_initial)
      : max_size_(max_size), with_initial_(with_initial) {
    if (max_size > 10) {
      throw std::invalid_argument("pointed-set skeleton capped at size 10");
    }
  }

  std::size_t object_count() const override {
    return max_size_ + (with_initial_ ? 1 : 0);
  }

  bool is_initial_object(Obj o) const { return with_initial_ && o == 0; }
  // Number of points of a pointed object; 0 flags the initial object.
  Obj size_of(Obj o) const {
    return with_initial_ ? o : o + 1;
  }
  Obj object_of_size(Obj s) const {
    return with_initial_ ? s : s - 1;
  }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    if (is_initial_object(a)) return 1;
    if (is_initial_object(b)) return 0;
    return detail::checked_pow(size_of(b), size_of(a) - 1);
  }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    out.clear();
    const std::uint64_t n = hom_size(a, b);
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(make_mor(a, b, k));
  }

  Mor identity(Obj a) const override {
    if (is_initial_object(a)) return make_mor(a, a, 0);
    std::vector<Obj> digits(size_of(a));
    std::iota(digits.begin(), digits.end(), 0);
    return encode(a, a, digits);
  }

  Mor compose(Mor g, Mor f) const override {
    if (is_initial_object(mor_dom(f))) {
      return make_mor(mor_dom(f), mor_cod(g), 0);
    }
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    std::vector<Obj> composite(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) composite[i] = dg[df[i]];
    return encode(mor_dom(f), mor_cod(g), composite);
  }

  std::string object_name(Obj o) const override {
    if (is_initial_object(o)) return "I";
    return "S" + std::to_string(size_of(o));
  }

  std::string morphism_name(Mor m) const override {
    if (is_initial_object(mor_dom(m))) {
      return "!:" + object_name(mor_dom(m)) + "->" + object_name(mor_cod(m));
    }
    std::ostringstream os;
    os << "(";
    const std::vector<Obj> d = decode(m);
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
    os << "):" << object_name(mor_dom(m)) << "->" << object_name(mor_cod(m));
    return os.str();
  }

  std::optional<Square> pullback_hint(Mor f, Mor g) const override {
    const Obj a = mor_dom(f);
    const Obj b = mor_dom(g);
    // Any cospan with an I leg pulls back to I itself: cones can only have
    // vertex I because nothing else maps into I.
    if (is_initial_object(a) || is_initial_object(b)) {
      const Obj i = 0;
      return Square{i, make_mor(i, a, 0), make_mor(i, b, 0)};
    }
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    std::vector<Obj> xs, ys;
    for (Obj x = 0; x < size_of(a); ++x) {
      for (Obj y = 0; y < size_of(b); ++y) {
        if (df[x] == dg[y]) {
          xs.push_back(x);
          ys.push_back(y);
        }
      }
    }
    // (0, 0) is always matched, so the apex is pointed with basepoint first.
    if (xs.size() > max_size_) return std::nullopt;
    const Obj apex = object_of_size(static_cast<Obj>(xs.size()));
    return Square{apex, encode(apex, a, xs), encode(apex, b, ys)};
  }

  std::optional<Square> pushout_hint(Mor f, Mor g) const override {
    const Obj z = mor_dom(f);
    const Obj a = mor_cod(f);
    const Obj b = mor_cod(g);
    if (is_initial_object(a) && is_initial_object(b)) {
      return Square{a, make_mor(a, a, 0), make_mor(b, a, 0)};
    }
    if (is_initial_object(a)) {  // forced z == I; the pushout is b itself
      return Square{b, make_mor(a, b, 0), identity(b)};
    }
    if (is_initial_object(b)) {
      return Square{a, identity(a), make_mor(b, a, 0)};
    }
    const Obj ka = size_of(a);
    const Obj kb = size_of(b);
    detail::TinyPartition part(ka + kb);
    part.merge(0, ka);  // wedge: basepoints coincide
    if (!is_initial_object(z)) {
      const std::vector<Obj> df = decode(f);
      const std::vector<Obj> dg = decode(g);
      for (std::size_t p = 0; p < df.size(); ++p) {
        part.merge(df[p], ka + dg[p]);
      }
    }
    const std::vector<std::size_t> label = part.labels();
    const std::size_t classes =
        *std::max_element(label.begin(), label.end()) + 1;
    if (classes > max_size_) return std::nullopt;
    const Obj apex = object_of_size(static_cast<Obj>(classes));
    std::vector<Obj> in1(ka), in2(kb);
    for (Obj i = 0; i < ka; ++i) in1[i] = static_cast<Obj>(label[i]);
    for (Obj j = 0; j < kb; ++j) in2[j] = static_cast<Obj>(label[ka + j]);
    return Square{apex, encode(a, apex, in1), encode(b, apex, in2)};
  }

  // Full point map, basepoint included.
  std::vector<Obj> decode(Mor m) const {
    const Obj a = mor_dom(m);
    const Obj b = mor_cod(m);
    std::vector<Obj> digits(size_of(a));
    std::uint64_t k = mor_index(m);
    for (Obj i = size_of(a); i-- > 1;) {
      digits[i] = static_cast<Obj>(k % size_of(b));
      k /= size_of(b);
    }
    digits[0] = 0;
    return digits;
  }

  Mor encode(Obj a, Obj b, const std::vector<Obj>& digits) const {
    if (digits.at(0) != 0) {
      throw std::logic_error("pointed map must fix the basepoint");
    }
    std::uint64_t k = 0;
    for (Obj i = 1; i < size_of(a); ++i) k = k * size_of(b) + digits[i];
    return make_mor(a, b, k);
  }

  bool with_initial() const { return with_initial_; }
  Obj max_size() const { return max_size_; }

 private:
  Obj max_size_;
  bool with_initial_;
};

}  // namespace fincat::cats

#endif  // FINCAT_CATS_POINTED_SET_HPP_
