#ifndef FINCAT_CATS_SEMILATTICE_HPP_
#define FINCAT_CATS_SEMILATTICE_HPP_

#include <string>
#include <vector>

#include "fincat/category.hpp"

namespace fincat::cats {

// A finite meet-semilattice presented by its meet table.
struct MeetTable {
  std::vector<std::string> elements;
  // meet[i][j] = index of elements[i] /\ elements[j]
  std::vector<std::vector<std::size_t>> meet;
  std::size_t top;  // index of the unit element 1

  std::size_t size() const { return elements.size(); }
  bool leq(std::size_t a, std::size_t b) const { return meet[a][b] == a; }
};

inline void validate_meet_table(const MeetTable& t) {
  const std::size_t n = t.size();
  if (t.meet.size() != n || t.top >= n) {
    throw std::invalid_argument("meet table is malformed");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (t.meet[a].size() != n) {
      throw std::invalid_argument("meet table is not square");
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (t.meet[a][b] >= n) {
        throw std::invalid_argument("meet table entry out of range");
      }
      if (t.meet[a][b] != t.meet[b][a]) {
        throw std::invalid_argument("meet is not commutative");
      }
    }
    if (t.meet[a][a] != a) {
      throw std::invalid_argument("meet is not idempotent");
    }
    if (t.meet[a][t.top] != a) {
      throw std::invalid_argument("top element is not a unit");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t c = 0; c < n; ++c) {
        if (t.meet[t.meet[a][b]][c] != t.meet[a][t.meet[b][c]]) {
          throw std::invalid_argument("meet is not associative");
        }
      }
    }
  }
}

// The semilattice as a thin category: hom(a, b) is a singleton exactly when
// a /\ b = a.
inline Category semilattice_category(const MeetTable& table) {
  validate_meet_table(table);
  TableBuilder builder;
  for (const std::string& name : table.elements) builder.add_object(name);
  const std::size_t n = table.size();
  std::vector<std::vector<Mor>> arrow(n, std::vector<Mor>(n, kInvalidMor));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table.leq(a, b)) {
        arrow[a][b] = builder.add_morphism(
            "le[" + table.elements[a] + "<=" + table.elements[b] + "]",
            static_cast<Obj>(a), static_cast<Obj>(b));
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    builder.set_identity(static_cast<Obj>(a), arrow[a][a]);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (arrow[a][b] == kInvalidMor) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (arrow[b][c] == kInvalidMor) continue;
        builder.set_composite(arrow[b][c], arrow[a][b], arrow[a][c]);
      }
    }
  }
  return builder.build();
}

// The four-element Boolean lattice {0, a, b, 1}.
inline MeetTable boolean_b2() {
  MeetTable t;
  t.elements = {"0", "a", "b", "1"};
  t.top = 3;
  t.meet = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 2, 2}, {0, 1, 2, 3}};
  return t;
}

// The chain 0 < 1 < ... < n-1.
inline MeetTable chain(std::size_t n) {
  if (n == 0) throw std::invalid_argument("chain needs at least one element");
  MeetTable t;
  t.top = n - 1;
  t.meet.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    t.elements.push_back(std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) t.meet[i][j] = std::min(i, j);
  }
  return t;
}

}  // namespace fincat::cats

#endif  // FINCAT_CATS_SEMILATTICE_HPP_
