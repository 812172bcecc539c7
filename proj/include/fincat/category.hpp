#ifndef FINCAT_CATEGORY_HPP_
#define FINCAT_CATEGORY_HPP_

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "fincat/ids.hpp"

namespace fincat {

// A commuting square produced by a limit construction: for pullbacks the two
// legs leave the apex, for pushouts they enter it.
struct Square {
  Obj apex;
  Mor left;
  Mor right;
};

// Backend of a finite category. Hom-sets are enumerated on demand so that
// large ambient categories (all maps between sets of size <= 9, say) never
// have to be materialised in full. Implementations must be deterministic:
// hom(a, b) always lists morphisms with ascending k.
class CatProvider {
 public:
  virtual ~CatProvider() = default;

  virtual std::size_t object_count() const = 0;
  virtual void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const = 0;
  virtual Mor identity(Obj a) const = 0;
  // Requires dom(g) == cod(f); must return the id of g after f.
  virtual Mor compose(Mor g, Mor f) const = 0;

  // Override when a closed form beats enumeration.
  virtual std::uint64_t hom_size(Obj a, Obj b) const {
    std::vector<Mor> tmp;
    enumerate_hom(a, b, tmp);
    return tmp.size();
  }

  virtual std::string object_name(Obj a) const {
    return "o" + std::to_string(a);
  }
  virtual std::string morphism_name(Mor m) const {
    std::ostringstream os;
    os << "m" << mor_index(m) << ":" << object_name(mor_dom(m)) << "->"
       << object_name(mor_cod(m));
    return os.str();
  }

  // Optional constructive candidates for limits. Whatever is returned is
  // re-verified against the universal property by the caller; a candidate is
  // never trusted.
  virtual std::optional<Square> pullback_hint(Mor /*f*/, Mor /*g*/) const {
    return std::nullopt;
  }
  virtual std::optional<Square> pushout_hint(Mor /*f*/, Mor /*g*/) const {
    return std::nullopt;
  }
};

namespace detail {

struct CatState {
  std::shared_ptr<const CatProvider> provider;
  mutable std::mutex mutex;
  mutable std::unordered_map<std::uint64_t, std::unique_ptr<std::vector<Mor>>>
      hom_cache;
};

// Union-find over a handful of points; quotient constructions and class
// partitions label their classes by smallest member through this.
class TinyPartition {
 public:
  explicit TinyPartition(std::size_t n) : parent_(n) {
    for (std::size_t i = 0; i < n; ++i) parent_[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void merge(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  // Class labels numbered by smallest member, ascending.
  std::vector<std::size_t> labels() {
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      if (find(i) == i) reps.push_back(i);
    }
    std::vector<std::size_t> label(parent_.size());
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      label[i] = static_cast<std::size_t>(
          std::lower_bound(reps.begin(), reps.end(), find(i)) - reps.begin());
    }
    return label;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace detail

// Value handle on a finite category. Copies share the provider and its
// hom-set cache; every operation is const and safe to call concurrently.
class Category {
 public:
  explicit Category(std::shared_ptr<const CatProvider> provider)
      : state_(std::make_shared<detail::CatState>()) {
    state_->provider = std::move(provider);
  }

  std::size_t object_count() const { return provider().object_count(); }

  const std::vector<Mor>& hom(Obj a, Obj b) const {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
    std::lock_guard<std::mutex> lock(state_->mutex);
    auto it = state_->hom_cache.find(key);
    if (it == state_->hom_cache.end()) {
      auto vec = std::make_unique<std::vector<Mor>>();
      provider().enumerate_hom(a, b, *vec);
      it = state_->hom_cache.emplace(key, std::move(vec)).first;
    }
    return *it->second;
  }

  std::uint64_t hom_size(Obj a, Obj b) const {
    return provider().hom_size(a, b);
  }

  Mor identity(Obj a) const { return provider().identity(a); }

  Mor compose(Mor g, Mor f) const {
    if (mor_dom(g) != mor_cod(f)) {
      throw std::invalid_argument("compose: morphisms are not composable");
    }
    return provider().compose(g, f);
  }

  bool contains(Mor m) const {
    const Obj a = mor_dom(m);
    const Obj b = mor_cod(m);
    if (a >= object_count() || b >= object_count()) return false;
    return mor_index(m) < hom_size(a, b);
  }

  std::string object_name(Obj a) const { return provider().object_name(a); }
  std::string morphism_name(Mor m) const {
    return provider().morphism_name(m);
  }

  std::optional<Square> pullback_hint(Mor f, Mor g) const {
    return provider().pullback_hint(f, g);
  }
  std::optional<Square> pushout_hint(Mor f, Mor g) const {
    return provider().pushout_hint(f, g);
  }

  bool same_underlying(const Category& other) const {
    return state_->provider == other.state_->provider ||
           state_ == other.state_;
  }

  Category opposite() const;

  const CatProvider& provider() const { return *state_->provider; }
  std::shared_ptr<const CatProvider> provider_ptr() const {
    return state_->provider;
  }

 private:
  std::shared_ptr<detail::CatState> state_;
};

// ---------------------------------------------------------------------------
// Opposite category

namespace detail {

class OppositeProvider final : public CatProvider {
 public:
  explicit OppositeProvider(Category base) : base_(std::move(base)) {}

  std::size_t object_count() const override { return base_.object_count(); }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    const std::vector<Mor>& hom = base_.hom(b, a);
    out.clear();
    out.reserve(hom.size());
    for (Mor m : hom) out.push_back(make_mor(a, b, mor_index(m)));
  }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    return base_.hom_size(b, a);
  }

  Mor identity(Obj a) const override {
    return flip(base_.identity(a));
  }

  Mor compose(Mor g, Mor f) const override {
    return flip(base_.compose(flip(f), flip(g)));
  }

  std::string object_name(Obj a) const override {
    return base_.object_name(a);
  }
  std::string morphism_name(Mor m) const override {
    return "op(" + base_.morphism_name(flip(m)) + ")";
  }

  std::optional<Square> pullback_hint(Mor f, Mor g) const override {
    auto hint = base_.pushout_hint(flip(f), flip(g));
    if (!hint) return std::nullopt;
    return Square{hint->apex, flip(hint->left), flip(hint->right)};
  }
  std::optional<Square> pushout_hint(Mor f, Mor g) const override {
    auto hint = base_.pullback_hint(flip(f), flip(g));
    if (!hint) return std::nullopt;
    return Square{hint->apex, flip(hint->left), flip(hint->right)};
  }

  const Category& base() const { return base_; }

  static Mor flip(Mor m) {
    return make_mor(mor_cod(m), mor_dom(m), mor_index(m));
  }

 private:
  Category base_;
};

}  // namespace detail

inline Category Category::opposite() const {
  // opposite(opposite(C)) hands back C itself, with the shared hom cache.
  if (auto op = dynamic_cast<const detail::OppositeProvider*>(
          state_->provider.get())) {
    return op->base();
  }
  return Category(std::make_shared<detail::OppositeProvider>(*this));
}

// Translates a morphism id between a category and its opposite.
inline Mor opposite_mor(Mor m) { return detail::OppositeProvider::flip(m); }

// ---------------------------------------------------------------------------
// Full subcategory on a chosen object subset (objects are re-indexed in the
// order given).

namespace detail {

class FullSubProvider final : public CatProvider {
 public:
  FullSubProvider(Category base, std::vector<Obj> objects)
      : base_(std::move(base)), objects_(std::move(objects)) {
    for (Obj o : objects_) {
      if (o >= base_.object_count()) {
        throw std::invalid_argument("full subcategory: unknown object");
      }
    }
  }

  std::size_t object_count() const override { return objects_.size(); }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    const std::vector<Mor>& hom = base_.hom(objects_.at(a), objects_.at(b));
    out.clear();
    out.reserve(hom.size());
    for (Mor m : hom) out.push_back(make_mor(a, b, mor_index(m)));
  }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    return base_.hom_size(objects_.at(a), objects_.at(b));
  }

  Mor identity(Obj a) const override {
    return make_mor(a, a, mor_index(base_.identity(objects_.at(a))));
  }

  Mor compose(Mor g, Mor f) const override {
    const Mor composite = base_.compose(to_base(g), to_base(f));
    return make_mor(mor_dom(f), mor_cod(g), mor_index(composite));
  }

  std::string object_name(Obj a) const override {
    return base_.object_name(objects_.at(a));
  }
  std::string morphism_name(Mor m) const override {
    return base_.morphism_name(to_base(m));
  }

  Mor to_base(Mor m) const {
    return make_mor(objects_.at(mor_dom(m)), objects_.at(mor_cod(m)),
                    mor_index(m));
  }
  Mor from_base(Mor m) const {
    return make_mor(index_of(mor_dom(m)), index_of(mor_cod(m)), mor_index(m));
  }
  Obj index_of(Obj base_obj) const {
    auto it = std::find(objects_.begin(), objects_.end(), base_obj);
    if (it == objects_.end()) {
      throw std::invalid_argument("object not in subcategory");
    }
    return static_cast<Obj>(it - objects_.begin());
  }

  const Category& base() const { return base_; }
  const std::vector<Obj>& objects() const { return objects_; }

 private:
  Category base_;
  std::vector<Obj> objects_;
};

}  // namespace detail

inline Category full_subcategory(const Category& base,
                                 std::vector<Obj> objects) {
  return Category(
      std::make_shared<detail::FullSubProvider>(base, std::move(objects)));
}

// ---------------------------------------------------------------------------
// Explicit composition-table categories (DSL files, Spec quotients, ad-hoc
// counterexamples).

namespace detail {

class TableProvider final : public CatProvider {
 public:
  std::size_t object_count() const override { return object_names_.size(); }

  void enumerate_hom(Obj a, Obj b, std::vector<Mor>& out) const override {
    out.clear();
    auto it = homs_.find(hom_key(a, b));
    if (it == homs_.end()) return;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      out.push_back(make_mor(a, b, k));
    }
  }

  std::uint64_t hom_size(Obj a, Obj b) const override {
    auto it = homs_.find(hom_key(a, b));
    return it == homs_.end() ? 0 : it->second.size();
  }

  Mor identity(Obj a) const override {
    const Mor id = identities_.at(a);
    if (id == kInvalidMor) {
      throw std::logic_error("identity of " + object_name(a) + " not set");
    }
    return id;
  }

  Mor compose(Mor g, Mor f) const override {
    auto it = table_.find(std::make_pair(g, f));
    if (it == table_.end()) {
      throw std::logic_error("composite of " + morphism_name(g) + " after " +
                             morphism_name(f) + " not defined");
    }
    return it->second;
  }

  std::string object_name(Obj a) const override { return object_names_.at(a); }
  std::string morphism_name(Mor m) const override {
    auto it = homs_.find(hom_key(mor_dom(m), mor_cod(m)));
    if (it != homs_.end() && mor_index(m) < it->second.size()) {
      return it->second[mor_index(m)];
    }
    return CatProvider::morphism_name(m);
  }

 private:
  friend class TableBuilderAccess;
  static std::uint64_t hom_key(Obj a, Obj b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  }

  std::vector<std::string> object_names_;
  std::unordered_map<std::uint64_t, std::vector<std::string>> homs_;
  std::vector<Mor> identities_;
  std::map<std::pair<Mor, Mor>, Mor> table_;
};

class TableBuilderAccess {
 protected:
  static std::vector<std::string>& object_names(TableProvider& p) {
    return p.object_names_;
  }
  static std::unordered_map<std::uint64_t, std::vector<std::string>>& homs(
      TableProvider& p) {
    return p.homs_;
  }
  static std::vector<Mor>& identities(TableProvider& p) {
    return p.identities_;
  }
  static std::map<std::pair<Mor, Mor>, Mor>& table(TableProvider& p) {
    return p.table_;
  }
  static std::uint64_t hom_key(Obj a, Obj b) {
    return TableProvider::hom_key(a, b);
  }
};

}  // namespace detail

class TableBuilder : detail::TableBuilderAccess {
 public:
  TableBuilder() : provider_(std::make_shared<detail::TableProvider>()) {}

  Obj add_object(std::string name) {
    auto& names = object_names(*provider_);
    if (names.size() > kMaxObj) {
      throw std::overflow_error("too many objects");
    }
    names.push_back(std::move(name));
    identities(*provider_).push_back(kInvalidMor);
    return static_cast<Obj>(names.size() - 1);
  }

  Mor add_morphism(std::string name, Obj dom, Obj cod) {
    check_object(dom);
    check_object(cod);
    auto& hom = homs(*provider_)[hom_key(dom, cod)];
    hom.push_back(std::move(name));
    return make_mor(dom, cod, hom.size() - 1);
  }

  void set_identity(Obj a, Mor id) {
    check_object(a);
    if (mor_dom(id) != a || mor_cod(id) != a) {
      throw std::invalid_argument("identity endpoints must both be " +
                                  std::to_string(a));
    }
    identities(*provider_)[a] = id;
  }

  // Declares g . f = gf. Typing is enforced here; totality is a validate()
  // concern so that ill-formed inputs yield reports, not exceptions.
  void set_composite(Mor g, Mor f, Mor gf) {
    if (mor_dom(g) != mor_cod(f)) {
      throw std::invalid_argument("set_composite: pair is not composable");
    }
    table(*provider_)[std::make_pair(g, f)] = gf;
  }

  bool has_composite(Mor g, Mor f) const {
    return table(*provider_).count(std::make_pair(g, f)) > 0;
  }

  std::size_t object_count() const {
    return object_names(*provider_).size();
  }

  Category build() { return Category(provider_); }

 private:
  void check_object(Obj a) const {
    if (a >= object_names(*provider_).size()) {
      throw std::invalid_argument("unknown object id " + std::to_string(a));
    }
  }

  std::shared_ptr<detail::TableProvider> provider_;
};

// ---------------------------------------------------------------------------
// Axiom validation

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the category axioms over the given objects: identities typed and
// neutral, composites typed, associativity on every composable triple.
// Passing all objects gives the full exhaustive check; tier-scale categories
// are validated over their core.
inline ValidationReport validate(const Category& c,
                                 std::span<const Obj> objects) {
  ValidationReport report;
  auto complain = [&](const std::string& what) {
    report.violations.push_back(what);
  };

  for (Obj a : objects) {
    Mor id = kInvalidMor;
    try {
      id = c.identity(a);
    } catch (const std::exception& e) {
      complain(e.what());
      continue;
    }
    if (mor_dom(id) != a || mor_cod(id) != a) {
      complain("identity of " + c.object_name(a) + " has wrong endpoints");
    }
    if (!c.contains(id)) {
      complain("identity of " + c.object_name(a) + " is not a morphism");
    }
  }

  auto composite_of = [&](Mor g, Mor f) -> std::optional<Mor> {
    try {
      Mor gf = c.compose(g, f);
      if (mor_dom(gf) != mor_dom(f) || mor_cod(gf) != mor_cod(g) ||
          !c.contains(gf)) {
        complain("composite " + c.morphism_name(g) + " . " +
                 c.morphism_name(f) + " is ill-typed");
        return std::nullopt;
      }
      return gf;
    } catch (const std::exception& e) {
      complain(e.what());
      return std::nullopt;
    }
  };

  // Identity laws.
  for (Obj a : objects) {
    for (Obj b : objects) {
      for (Mor f : c.hom(a, b)) {
        auto left = composite_of(c.identity(b), f);
        if (left && *left != f) {
          complain("id . " + c.morphism_name(f) + " != " + c.morphism_name(f));
        }
        auto right = composite_of(f, c.identity(a));
        if (right && *right != f) {
          complain(c.morphism_name(f) + " . id != " + c.morphism_name(f));
        }
      }
    }
  }

  // Associativity over all composable triples within the scope.
  for (Obj a : objects) {
    for (Obj b : objects) {
      const auto& fs = c.hom(a, b);
      if (fs.empty()) continue;
      for (Obj d : objects) {
        const auto& gs = c.hom(b, d);
        if (gs.empty()) continue;
        for (Obj e : objects) {
          const auto& hs = c.hom(d, e);
          if (hs.empty()) continue;
          for (Mor f : fs) {
            for (Mor g : gs) {
              auto gf = composite_of(g, f);
              if (!gf) continue;
              for (Mor h : hs) {
                auto hg = composite_of(h, g);
                if (!hg) continue;
                auto l = composite_of(h, *gf);
                auto r = composite_of(*hg, f);
                if (l && r && *l != *r) {
                  complain("associativity fails on (" + c.morphism_name(h) +
                           ", " + c.morphism_name(g) + ", " +
                           c.morphism_name(f) + ")");
                  if (report.violations.size() > 64) return report;
                }
              }
            }
          }
        }
      }
    }
  }
  return report;
}

inline std::vector<Obj> all_objects(const Category& c) {
  std::vector<Obj> objs(c.object_count());
  for (std::size_t i = 0; i < objs.size(); ++i) objs[i] = static_cast<Obj>(i);
  return objs;
}

inline ValidationReport validate(const Category& c) {
  const std::vector<Obj> objs = all_objects(c);
  return validate(c, objs);
}

}  // namespace fincat

#endif  // FINCAT_CATEGORY_HPP_
