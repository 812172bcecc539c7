#ifndef FINCAT_TESTS_TEST_ORACLES_HPP_
#define FINCAT_TESTS_TEST_ORACLES_HPP_

// Brute-force reference predicates, written straight from the definitions and
// kept independent of the library's (hashed, bucketed, hinted) code paths.
// Expected values in the test files are frozen from these.

#include <cstdint>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/cats/semilattice.hpp"

namespace oracles {

using fincat::Category;
using fincat::Mor;
using fincat::Obj;

// Literal left-cancellation, by looping over all pairs.
inline bool mono_by_pairs(const Category& c, Mor m) {
  for (Obj w = 0; w < c.object_count(); ++w) {
    const auto& hom = c.hom(w, fincat::mor_dom(m));
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (c.compose(m, hom[i]) == c.compose(m, hom[j])) return false;
      }
    }
  }
  return true;
}

inline bool epi_by_pairs(const Category& c, Mor m) {
  for (Obj w = 0; w < c.object_count(); ++w) {
    const auto& hom = c.hom(fincat::mor_cod(m), w);
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (c.compose(hom[i], m) == c.compose(hom[j], m)) return false;
      }
    }
  }
  return true;
}

// Number of comparable pairs a <= b of a meet table; each is one morphism of
// the associated thin category.
inline std::size_t comparable_pairs(const fincat::cats::MeetTable& t) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < t.size(); ++a) {
    for (std::size_t b = 0; b < t.size(); ++b) {
      if (t.meet[a][b] == a) ++count;
    }
  }
  return count;
}

// Counts reflexive-transitive relations on k labelled points by building
// them row by row, independently of the provider's bitmask filter.
inline std::uint64_t count_preorders(unsigned k) {
  std::vector<std::vector<bool>> rel(k, std::vector<bool>(k, false));
  std::uint64_t count = 0;
  const unsigned off = k * k - k;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << off); ++bits) {
    unsigned t = 0;
    for (unsigned i = 0; i < k; ++i) {
      for (unsigned j = 0; j < k; ++j) {
        rel[i][j] = (i == j) || ((bits >> t) & 1u && i != j);
        if (i != j) ++t;
      }
    }
    bool ok = true;
    for (unsigned i = 0; i < k && ok; ++i) {
      for (unsigned j = 0; j < k && ok; ++j) {
        for (unsigned l = 0; l < k && ok; ++l) {
          if (rel[i][j] && rel[j][l] && !rel[i][l]) ok = false;
        }
      }
    }
    if (ok) ++count;
  }
  return count;
}

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t out = 1;
  while (e-- > 0) out *= b;
  return out;
}

inline bool mono_by_pairs_scoped(const Category& c, Mor m,
                                 const std::vector<Obj>& probes) {
  for (Obj w : probes) {
    const auto& hom = c.hom(w, fincat::mor_dom(m));
    for (std::size_t i = 0; i < hom.size(); ++i) {
      for (std::size_t j = i + 1; j < hom.size(); ++j) {
        if (c.compose(m, hom[i]) == c.compose(m, hom[j])) return false;
      }
    }
  }
  return true;
}

// Essentiality from the definition, on top of the pair-based mono test.
inline bool essential_by_definition(const Category& c, Mor m,
                                    const std::vector<Obj>& probes,
                                    const std::vector<Obj>& targets) {
  if (!mono_by_pairs_scoped(c, m, probes)) return false;
  for (Obj y : targets) {
    for (Mor f : c.hom(fincat::mor_cod(m), y)) {
      if (mono_by_pairs_scoped(c, c.compose(f, m), probes) &&
          !mono_by_pairs_scoped(c, f, probes)) {
        return false;
      }
    }
  }
  return true;
}

// Universal property spelled out: every cone factors through the square by
// exactly one mediating morphism. Quantifies over the given probe objects.
inline bool is_pullback_square(const Category& c, Mor f, Mor g, Obj apex,
                               Mor p1, Mor p2, const std::vector<Obj>& probes) {
  if (c.compose(f, p1) != c.compose(g, p2)) return false;
  for (Obj w : probes) {
    for (Mor p : c.hom(w, fincat::mor_dom(f))) {
      for (Mor q : c.hom(w, fincat::mor_dom(g))) {
        if (c.compose(f, p) != c.compose(g, q)) continue;
        std::size_t mediators = 0;
        for (Mor h : c.hom(w, apex)) {
          if (c.compose(p1, h) == p && c.compose(p2, h) == q) ++mediators;
        }
        if (mediators != 1) return false;
      }
    }
  }
  return true;
}

}  // namespace oracles

#endif  // FINCAT_TESTS_TEST_ORACLES_HPP_
