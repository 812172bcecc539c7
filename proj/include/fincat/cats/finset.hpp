#ifndef FINCAT_CATS_FINSET_HPP_
#define FINCAT_CATS_FINSET_HPP_

#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::cats {

namespace detail {

inline std::uint64_t checked_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && out > kMaxHomIndex / base) {
      throw std::overflow_error("hom-set size exceeds index range");
    }
    out *= base;
  }
  return out;
}

using fincat::detail::TinyPartition;

}  // namespace detail

// Skeleton of finite sets: objects 0..max_size, all functions between them.
// A function f : a -> b is the digit string (f(0), ..., f(a-1)) and its hom
// index is the value of that string read as a base-b numeral, f(0) most
// significant; enumeration order is therefore lexicographic.
class FinSetProvider final : public CatProvider {
 public:
  explicit FinSetProvider(Obj max_size) : max_size_(max_size) {
    if (max_size > 10) {
      throw std::invalid_argument("finite-set skeleton capped at size 10");
    }
  }

  std::size_t object_count() const override { return max_size_ + 1; }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    return detail::checked_pow(b, a);
  }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    out.clear();
    const std::uint64_t n = hom_size(a, b);
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(make_mor(a, b, k));
  }

  Mor identity(Obj a) const override {
    std::vector<Obj> digits(a);
    std::iota(digits.begin(), digits.end(), 0);
    return encode(a, a, digits);
  }

  Mor compose(Mor g, Mor f) const override {
    std::vector<Obj> df = decode(f);
    std::vector<Obj> dg = decode(g);
    std::vector<Obj> composite(df.size());
    for (std::size_t i = 0; i < df.size(); ++i) composite[i] = dg[df[i]];
    return encode(mor_dom(f), mor_cod(g), composite);
  }

  std::string object_name(Obj a) const override { return std::to_string(a); }

  std::string morphism_name(Mor m) const override {
    std::ostringstream os;
    os << "(";
    const std::vector<Obj> d = decode(m);
    for (std::size_t i = 0; i < d.size(); ++i) os << (i ? " " : "") << d[i];
    os << "):" << mor_dom(m) << "->" << mor_cod(m);
    return os.str();
  }

  std::optional<Square> pullback_hint(Mor f, Mor g) const override {
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    std::vector<Obj> p1, p2;
    for (Obj x = 0; x < mor_dom(f); ++x) {
      for (Obj y = 0; y < mor_dom(g); ++y) {
        if (df[x] == dg[y]) {
          p1.push_back(x);
          p2.push_back(y);
        }
      }
    }
    if (p1.size() > max_size_) return std::nullopt;
    const Obj apex = static_cast<Obj>(p1.size());
    return Square{apex, encode(apex, mor_dom(f), p1),
                  encode(apex, mor_dom(g), p2)};
  }

  std::optional<Square> pushout_hint(Mor f, Mor g) const override {
    const std::vector<Obj> df = decode(f);
    const std::vector<Obj> dg = decode(g);
    const Obj a = mor_cod(f);
    const Obj b = mor_cod(g);
    detail::TinyPartition part(a + b);
    for (Obj z = 0; z < mor_dom(f); ++z) part.merge(df[z], a + dg[z]);
    const std::vector<std::size_t> label = part.labels();
    const std::size_t classes =
        label.empty() ? 0 : *std::max_element(label.begin(), label.end()) + 1;
    if (classes > max_size_) return std::nullopt;
    std::vector<Obj> in1(a), in2(b);
    for (Obj i = 0; i < a; ++i) in1[i] = static_cast<Obj>(label[i]);
    for (Obj j = 0; j < b; ++j) in2[j] = static_cast<Obj>(label[a + j]);
    const Obj apex = static_cast<Obj>(classes);
    return Square{apex, encode(a, apex, in1), encode(b, apex, in2)};
  }

  std::vector<Obj> decode(Mor m) const {
    const Obj a = mor_dom(m);
    const Obj b = mor_cod(m);
    std::vector<Obj> digits(a);
    std::uint64_t k = mor_index(m);
    for (Obj i = a; i-- > 0;) {
      digits[i] = static_cast<Obj>(k % b);
      k /= b;
    }
    return digits;
  }

  static Mor encode(Obj a, Obj b, const std::vector<Obj>& digits) {
    std::uint64_t k = 0;
    for (Obj i = 0; i < a; ++i) k = k * b + digits[i];
    return make_mor(a, b, k);
  }

 private:
  Obj max_size_;
};

inline Category finset_category(Obj max_size) {
  return Category(std::make_shared<FinSetProvider>(max_size));
}

}  // namespace fincat::cats

#endif  // FINCAT_CATS_FINSET_HPP_
