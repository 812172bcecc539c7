#ifndef FINCAT_CATS_ABELIAN_HPP_
#define FINCAT_CATS_ABELIAN_HPP_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::cats {

// A full subcategory of finite abelian groups, each given as a direct sum of
// cyclic groups. Elements are mixed-radix tuples; a homomorphism is the tuple
// of generator images, ordered lexicographically over the per-generator
// candidate lists (elements whose order divides the generator's order).
//
// No closure of any kind is claimed for these fragments: pullbacks and
// pushouts generally leave them, so only limit-free checks apply.
class AbGroupProvider final : public CatProvider {
 public:
  explicit AbGroupProvider(std::vector<std::vector<std::uint32_t>> groups)
      : orders_(std::move(groups)) {
    for (const auto& orders : orders_) {
      std::uint64_t size = 1;
      for (std::uint32_t o : orders) {
        if (o < 2) throw std::invalid_argument("cyclic order must be >= 2");
        size *= o;
        if (size > 4096) throw std::invalid_argument("group too large");
      }
      sizes_.push_back(size);
      std::vector<std::uint32_t> ords(size);
      for (std::uint64_t e = 0; e < size; ++e) {
        ords[e] = element_order(orders, e);
      }
      element_orders_.push_back(std::move(ords));
    }
    candidates_.resize(orders_.size());
    for (std::size_t a = 0; a < orders_.size(); ++a) {
      candidates_[a].resize(orders_.size());
      for (std::size_t b = 0; b < orders_.size(); ++b) {
        auto& lists = candidates_[a][b];
        lists.resize(orders_[a].size());
        for (std::size_t i = 0; i < orders_[a].size(); ++i) {
          for (std::uint64_t e = 0; e < sizes_[b]; ++e) {
            if (orders_[a][i] % element_orders_[b][e] == 0) {
              lists[i].push_back(e);
            }
          }
        }
      }
    }
  }

  std::size_t object_count() const override { return orders_.size(); }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    std::uint64_t n = 1;
    for (const auto& list : candidates_.at(a).at(b)) n *= list.size();
    return n;
  }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    out.clear();
    const std::uint64_t n = hom_size(a, b);
    out.reserve(n);
    for (std::uint64_t k = 0; k < n; ++k) out.push_back(make_mor(a, b, k));
  }

  Mor identity(Obj a) const override {
    std::vector<std::uint64_t> images(orders_[a].size());
    for (std::size_t i = 0; i < images.size(); ++i) {
      images[i] = basis_element(a, i);
    }
    return encode(a, a, images);
  }

  Mor compose(Mor g, Mor f) const override {
    const auto img_f = images(f);
    std::vector<std::uint64_t> composite(img_f.size());
    for (std::size_t i = 0; i < img_f.size(); ++i) {
      composite[i] = apply(g, img_f[i]);
    }
    return encode(mor_dom(f), mor_cod(g), composite);
  }

  std::string object_name(Obj a) const override {
    if (orders_[a].empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < orders_[a].size(); ++i) {
      os << (i ? "+" : "") << "Z/" << orders_[a][i];
    }
    return os.str();
  }

  std::string morphism_name(Mor m) const override {
    std::ostringstream os;
    os << "[";
    const auto img = images(m);
    for (std::size_t i = 0; i < img.size(); ++i) os << (i ? " " : "") << img[i];
    os << "]:" << object_name(mor_dom(m)) << "->" << object_name(mor_cod(m));
    return os.str();
  }

  // Element of cod(m) that m sends the given dom(m)-element to.
  std::uint64_t apply(Mor m, std::uint64_t element) const {
    const Obj a = mor_dom(m);
    const Obj b = mor_cod(m);
    const auto img = images(m);
    std::vector<std::uint32_t> acc(orders_[b].size(), 0);
    for (std::size_t i = 0; i < orders_[a].size(); ++i) {
      const std::uint32_t coeff = component(a, element, i);
      const auto img_tuple = tuple_of(b, img[i]);
      for (std::size_t j = 0; j < acc.size(); ++j) {
        acc[j] = (acc[j] + coeff * img_tuple[j]) % orders_[b][j];
      }
    }
    return index_of(b, acc);
  }

  std::vector<std::uint64_t> images(Mor m) const {
    const Obj a = mor_dom(m);
    const Obj b = mor_cod(m);
    const auto& lists = candidates_[a][b];
    std::vector<std::uint64_t> img(lists.size());
    std::uint64_t k = mor_index(m);
    for (std::size_t i = lists.size(); i-- > 0;) {
      img[i] = lists[i][k % lists[i].size()];
      k /= lists[i].size();
    }
    return img;
  }

  Mor encode(Obj a, Obj b, const std::vector<std::uint64_t>& img) const {
    const auto& lists = candidates_[a][b];
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < lists.size(); ++i) {
      const auto it =
          std::lower_bound(lists[i].begin(), lists[i].end(), img[i]);
      if (it == lists[i].end() || *it != img[i]) {
        throw std::logic_error("generator image of too large an order");
      }
      k = k * lists[i].size() + static_cast<std::uint64_t>(it - lists[i].begin());
    }
    return make_mor(a, b, k);
  }

  std::uint64_t group_size(Obj a) const { return sizes_[a]; }

 private:
  std::uint32_t component(Obj a, std::uint64_t element, std::size_t i) const {
    const auto& orders = orders_[a];
    for (std::size_t j = orders.size(); j-- > i + 1;) element /= orders[j];
    return static_cast<std::uint32_t>(element % orders[i]);
  }

  std::vector<std::uint32_t> tuple_of(Obj a, std::uint64_t element) const {
    const auto& orders = orders_[a];
    std::vector<std::uint32_t> tuple(orders.size());
    for (std::size_t j = orders.size(); j-- > 0;) {
      tuple[j] = static_cast<std::uint32_t>(element % orders[j]);
      element /= orders[j];
    }
    return tuple;
  }

  std::uint64_t index_of(Obj a, const std::vector<std::uint32_t>& tuple) const {
    std::uint64_t e = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      e = e * orders_[a][j] + tuple[j];
    }
    return e;
  }

  std::uint64_t basis_element(Obj a, std::size_t i) const {
    std::vector<std::uint32_t> tuple(orders_[a].size(), 0);
    tuple[i] = 1;
    return index_of(a, tuple);
  }

  static std::uint32_t element_order(const std::vector<std::uint32_t>& orders,
                                     std::uint64_t element) {
    std::uint32_t ord = 1;
    for (std::size_t j = orders.size(); j-- > 0;) {
      const std::uint32_t v = static_cast<std::uint32_t>(element % orders[j]);
      element /= orders[j];
      const std::uint32_t component_ord = orders[j] / std::gcd(orders[j], v);
      ord = std::lcm(ord, v == 0 ? 1 : component_ord);
    }
    return ord;
  }

  std::vector<std::vector<std::uint32_t>> orders_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::vector<std::uint32_t>> element_orders_;
  // candidates_[a][b][i] = elements of b whose order divides order of gen i.
  std::vector<std::vector<std::vector<std::vector<std::uint64_t>>>>
      candidates_;
};

}  // namespace fincat::cats

#endif  // FINCAT_CATS_ABELIAN_HPP_
