#ifndef FINCAT_DSL_HPP_
#define FINCAT_DSL_HPP_

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "fincat/category.hpp"
#include "fincat/functor.hpp"

namespace fincat::dsl {

// Line-oriented description of finite categories, with optional functor and
// adjunction blocks:
//
//   category C
//   obj A
//   mor f : A -> B
//   id A = idA
//   comp g . f = h
//
//   functor F : C -> D
//   fobj A = X
//   fmor f = u
//
//   adjunction L : F -| G
//   unit A = m
//   counit X = e
//
// '#' starts a comment. Identity lines implicitly declare the identity
// morphism when it was not introduced by a mor line. Composites with an
// identity factor may be omitted; anything else missing is a diagnostic.

struct Diagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  std::string to_string() const {
    return std::to_string(line) + ":" + std::to_string(column) + ": " +
           message;
  }
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(Diagnostic d)
      : std::runtime_error(d.to_string()), diagnostic_(std::move(d)) {}
  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

struct ParsedCategory {
  std::string name;
  Category category;
  std::vector<std::string> object_names;          // by object id
  std::map<std::string, Obj> object_ids;
  std::map<std::string, Mor> morphism_ids;        // includes identities
  std::map<Mor, std::string> morphism_names;
  std::vector<std::pair<std::pair<Mor, Mor>, Mor>> composites;  // g.f = gf
};

struct ParsedFunctor {
  std::string name;
  std::size_t source;  // index into document categories
  std::size_t target;
  Functor functor;
};

struct ParsedAdjunction {
  std::string name;
  std::size_t left;   // indices into document functors
  std::size_t right;
  Adjunction adjunction;
};

struct FincatDocument {
  std::vector<ParsedCategory> categories;
  std::vector<ParsedFunctor> functors;
  std::vector<ParsedAdjunction> adjunctions;

  const ParsedCategory& category(const std::string& name) const {
    for (const auto& c : categories) {
      if (c.name == name) return c;
    }
    throw std::invalid_argument("no category named " + name);
  }
};

namespace detail {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
  std::vector<std::size_t> columns;
};

inline std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view raw = text.substr(
        start, end == std::string_view::npos ? text.size() - start
                                             : end - start);
    ++line_no;
    Line line{line_no, {}, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      if (std::isspace(static_cast<unsigned char>(raw[i]))) {
        ++i;
        continue;
      }
      if (raw[i] == '#') break;
      std::size_t j = i;
      while (j < raw.size() &&
             !std::isspace(static_cast<unsigned char>(raw[j]))) {
        ++j;
      }
      line.tokens.emplace_back(raw.substr(i, j - i));
      line.columns.push_back(i + 1);
      i = j;
    }
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return lines;
}

[[noreturn]] inline void fail(const Line& line, std::size_t token,
                              const std::string& message) {
  const std::size_t column =
      token < line.columns.size() ? line.columns[token] : 1;
  throw ParseError(Diagnostic{line.number, column, message});
}

inline void expect_tokens(const Line& line, std::size_t count) {
  if (line.tokens.size() != count) {
    fail(line, line.tokens.size() > count ? count : line.tokens.size() - 1,
         "malformed directive: expected " + std::to_string(count) +
             " tokens, got " + std::to_string(line.tokens.size()));
  }
}

inline void expect_keyword(const Line& line, std::size_t index,
                           const char* keyword) {
  if (line.tokens.at(index) != keyword) {
    fail(line, index, std::string("expected '") + keyword + "'");
  }
}

// Mutable category section under construction.
struct CategoryDraft {
  std::string name;
  std::size_t opened_at = 0;
  TableBuilder builder;
  std::vector<std::string> object_names;
  std::map<std::string, Obj> object_ids;
  std::map<std::string, Mor> morphism_ids;
  std::map<Mor, std::string> morphism_names;
  std::map<Obj, Mor> identities;
  std::vector<std::pair<std::pair<Mor, Mor>, Mor>> composites;
};

inline ParsedCategory finish_category(CategoryDraft&& draft) {
  // Identity composites not written out are forced by the laws; add them.
  for (const auto& [obj, id] : draft.identities) {
    for (const auto& [name, m] : draft.morphism_ids) {
      if (mor_dom(m) == obj && !draft.builder.has_composite(m, id)) {
        draft.builder.set_composite(m, id, m);
        draft.composites.push_back({{m, id}, m});
      }
      if (mor_cod(m) == obj && !draft.builder.has_composite(id, m)) {
        draft.builder.set_composite(id, m, m);
        draft.composites.push_back({{id, m}, m});
      }
    }
  }
  Category category = draft.builder.build();
  const ValidationReport report = validate(category);
  if (!report.ok()) {
    throw ParseError(Diagnostic{draft.opened_at, 1,
                                "category " + draft.name + " is invalid: " +
                                    report.violations.front()});
  }
  ParsedCategory out{draft.name,
                     std::move(category),
                     std::move(draft.object_names),
                     std::move(draft.object_ids),
                     std::move(draft.morphism_ids),
                     std::move(draft.morphism_names),
                     std::move(draft.composites)};
  std::sort(out.composites.begin(), out.composites.end());
  return out;
}

}  // namespace detail

inline FincatDocument parse(std::string_view text) {
  using detail::fail;
  FincatDocument doc;
  std::optional<detail::CategoryDraft> category;

  struct FunctorDraft {
    std::string name;
    std::size_t source, target;
    std::size_t opened_at;
    std::map<Obj, Obj> objects;
    std::map<Mor, Mor> morphisms;
  };
  std::optional<FunctorDraft> functor;

  struct AdjunctionDraft {
    std::string name;
    std::size_t left, right;
    std::size_t opened_at;
    std::map<Obj, Mor> unit;
    std::map<Obj, Mor> counit;
  };
  std::optional<AdjunctionDraft> adjunction;

  auto close_functor = [&](const detail::Line& line) {
    if (!functor) return;
    const ParsedCategory& src = doc.categories[functor->source];
    const ParsedCategory& tgt = doc.categories[functor->target];
    for (Obj o = 0; o < src.category.object_count(); ++o) {
      if (!functor->objects.count(o)) {
        fail(line, 0,
             "functor " + functor->name + " does not map object " +
                 src.object_names[o]);
      }
    }
    auto objects = std::make_shared<std::map<Obj, Obj>>(functor->objects);
    auto morphisms =
        std::make_shared<std::map<Mor, Mor>>(functor->morphisms);
    // Unwritten identity images follow from the object map.
    for (const auto& [name, m] : src.morphism_ids) {
      if (morphisms->count(m)) continue;
      bool is_identity = false;
      for (Obj o = 0; o < src.category.object_count(); ++o) {
        if (src.category.identity(o) == m) {
          is_identity = true;
          morphisms->emplace(m, tgt.category.identity(objects->at(o)));
          break;
        }
      }
      if (!is_identity) {
        fail(line, 0,
             "functor " + functor->name + " does not map morphism " + name);
      }
    }
    Functor built(functor->name, src.category, tgt.category,
                  [objects](Obj o) { return objects->at(o); },
                  [morphisms](Mor m) { return morphisms->at(m); });
    const auto violations =
        functor_violations(built, all_objects(src.category));
    if (!violations.empty()) {
      throw ParseError(Diagnostic{functor->opened_at, 1,
                                  "functor " + functor->name +
                                      " is invalid: " + violations.front()});
    }
    doc.functors.push_back(ParsedFunctor{functor->name, functor->source,
                                         functor->target, std::move(built)});
    functor.reset();
  };

  auto close_adjunction = [&](const detail::Line& line) {
    if (!adjunction) return;
    const ParsedFunctor& left = doc.functors[adjunction->left];
    const ParsedFunctor& right = doc.functors[adjunction->right];
    const Category& c = left.functor.source();
    const Category& x = right.functor.source();
    for (Obj o = 0; o < c.object_count(); ++o) {
      if (!adjunction->unit.count(o)) {
        fail(line, 0, "adjunction " + adjunction->name +
                          " lacks a unit component at some object");
      }
    }
    for (Obj o = 0; o < x.object_count(); ++o) {
      if (!adjunction->counit.count(o)) {
        fail(line, 0, "adjunction " + adjunction->name +
                          " lacks a counit component at some object");
      }
    }
    auto unit = std::make_shared<std::map<Obj, Mor>>(adjunction->unit);
    auto counit = std::make_shared<std::map<Obj, Mor>>(adjunction->counit);
    Adjunction built{left.functor, right.functor,
                     [unit](Obj o) { return unit->at(o); },
                     [counit](Obj o) { return counit->at(o); }};
    const ValidationReport report =
        validate_adjunction(built, all_objects(c), all_objects(x));
    if (!report.ok()) {
      throw ParseError(Diagnostic{adjunction->opened_at, 1,
                                  "adjunction " + adjunction->name +
                                      " is invalid: " +
                                      report.violations.front()});
    }
    doc.adjunctions.push_back(ParsedAdjunction{adjunction->name,
                                               adjunction->left,
                                               adjunction->right,
                                               std::move(built)});
    adjunction.reset();
  };

  auto close_category = [&](const detail::Line&) {
    if (!category) return;
    doc.categories.push_back(detail::finish_category(std::move(*category)));
    category.reset();
  };

  auto close_all = [&](const detail::Line& line) {
    close_category(line);
    close_functor(line);
    close_adjunction(line);
  };

  auto functor_index = [&](const detail::Line& line, std::size_t token) {
    const std::string& name = line.tokens[token];
    for (std::size_t i = 0; i < doc.functors.size(); ++i) {
      if (doc.functors[i].name == name) return i;
    }
    fail(line, token, "unknown functor " + name);
  };
  auto category_index = [&](const detail::Line& line, std::size_t token) {
    const std::string& name = line.tokens[token];
    for (std::size_t i = 0; i < doc.categories.size(); ++i) {
      if (doc.categories[i].name == name) return i;
    }
    fail(line, token, "unknown category " + name);
  };

  const std::vector<detail::Line> lines = detail::tokenize(text);
  for (const detail::Line& line : lines) {
    const std::string& head = line.tokens.front();

    // A headerless file is a single anonymous category.
    if (!category && !functor && !adjunction &&
        (head == "obj" || head == "mor" || head == "id" || head == "comp")) {
      category.emplace();
      category->name = "main";
      category->opened_at = line.number;
    }

    if (head == "category") {
      detail::expect_tokens(line, 2);
      close_all(line);
      category.emplace();
      category->name = line.tokens[1];
      category->opened_at = line.number;
      continue;
    }

    if (head == "functor") {
      // functor F : C -> D
      detail::expect_tokens(line, 6);
      detail::expect_keyword(line, 2, ":");
      detail::expect_keyword(line, 4, "->");
      close_all(line);
      functor.emplace();
      functor->name = line.tokens[1];
      functor->opened_at = line.number;
      functor->source = category_index(line, 3);
      functor->target = category_index(line, 5);
      continue;
    }

    if (head == "adjunction") {
      // adjunction L : F -| G
      detail::expect_tokens(line, 6);
      detail::expect_keyword(line, 2, ":");
      detail::expect_keyword(line, 4, "-|");
      close_all(line);
      adjunction.emplace();
      adjunction->name = line.tokens[1];
      adjunction->opened_at = line.number;
      adjunction->left = functor_index(line, 3);
      adjunction->right = functor_index(line, 5);
      const ParsedFunctor& left = doc.functors[adjunction->left];
      const ParsedFunctor& right = doc.functors[adjunction->right];
      if (left.source != right.target || left.target != right.source) {
        fail(line, 3, "adjunction endpoints do not match");
      }
      continue;
    }

    if (category) {
      auto object_of = [&](std::size_t token) {
        auto it = category->object_ids.find(line.tokens[token]);
        if (it == category->object_ids.end()) {
          fail(line, token, "unknown object " + line.tokens[token]);
        }
        return it->second;
      };
      auto morphism_of = [&](std::size_t token) {
        auto it = category->morphism_ids.find(line.tokens[token]);
        if (it == category->morphism_ids.end()) {
          fail(line, token, "unknown morphism " + line.tokens[token]);
        }
        return it->second;
      };

      if (head == "obj") {
        detail::expect_tokens(line, 2);
        if (category->object_ids.count(line.tokens[1])) {
          fail(line, 1, "duplicate object " + line.tokens[1]);
        }
        const Obj o = category->builder.add_object(line.tokens[1]);
        category->object_ids.emplace(line.tokens[1], o);
        category->object_names.push_back(line.tokens[1]);
        continue;
      }
      if (head == "mor") {
        // mor f : A -> B
        detail::expect_tokens(line, 6);
        detail::expect_keyword(line, 2, ":");
        detail::expect_keyword(line, 4, "->");
        if (category->morphism_ids.count(line.tokens[1])) {
          fail(line, 1, "duplicate morphism " + line.tokens[1]);
        }
        const Obj dom = object_of(3);
        const Obj cod = object_of(5);
        const Mor m = category->builder.add_morphism(line.tokens[1], dom, cod);
        category->morphism_ids.emplace(line.tokens[1], m);
        category->morphism_names.emplace(m, line.tokens[1]);
        continue;
      }
      if (head == "id") {
        // id A = idA   (declares idA when necessary)
        detail::expect_tokens(line, 4);
        detail::expect_keyword(line, 2, "=");
        const Obj o = object_of(1);
        Mor id;
        auto it = category->morphism_ids.find(line.tokens[3]);
        if (it == category->morphism_ids.end()) {
          id = category->builder.add_morphism(line.tokens[3], o, o);
          category->morphism_ids.emplace(line.tokens[3], id);
          category->morphism_names.emplace(id, line.tokens[3]);
        } else {
          id = it->second;
          if (mor_dom(id) != o || mor_cod(id) != o) {
            fail(line, 3, "identity endpoints do not match " + line.tokens[1]);
          }
        }
        if (category->identities.count(o)) {
          fail(line, 1, "duplicate identity for " + line.tokens[1]);
        }
        category->identities.emplace(o, id);
        category->builder.set_identity(o, id);
        continue;
      }
      if (head == "comp") {
        // comp g . f = h
        detail::expect_tokens(line, 6);
        detail::expect_keyword(line, 2, ".");
        detail::expect_keyword(line, 4, "=");
        const Mor g = morphism_of(1);
        const Mor f = morphism_of(3);
        const Mor h = morphism_of(5);
        if (mor_dom(g) != mor_cod(f)) {
          fail(line, 1, "pair is not composable");
        }
        if (category->builder.has_composite(g, f)) {
          fail(line, 1, "duplicate composition entry");
        }
        category->builder.set_composite(g, f, h);
        category->composites.push_back({{g, f}, h});
        continue;
      }
      fail(line, 0, "unknown directive '" + head + "'");
    }

    if (functor) {
      const ParsedCategory& src = doc.categories[functor->source];
      const ParsedCategory& tgt = doc.categories[functor->target];
      if (head == "fobj") {
        detail::expect_tokens(line, 4);
        detail::expect_keyword(line, 2, "=");
        auto s = src.object_ids.find(line.tokens[1]);
        auto t = tgt.object_ids.find(line.tokens[3]);
        if (s == src.object_ids.end()) fail(line, 1, "unknown source object");
        if (t == tgt.object_ids.end()) fail(line, 3, "unknown target object");
        functor->objects[s->second] = t->second;
        continue;
      }
      if (head == "fmor") {
        detail::expect_tokens(line, 4);
        detail::expect_keyword(line, 2, "=");
        auto s = src.morphism_ids.find(line.tokens[1]);
        auto t = tgt.morphism_ids.find(line.tokens[3]);
        if (s == src.morphism_ids.end()) {
          fail(line, 1, "unknown source morphism");
        }
        if (t == tgt.morphism_ids.end()) {
          fail(line, 3, "unknown target morphism");
        }
        functor->morphisms[s->second] = t->second;
        continue;
      }
      fail(line, 0, "unknown directive '" + head + "'");
    }

    if (adjunction) {
      const std::size_t c_index = doc.functors[adjunction->left].source;
      const std::size_t x_index = doc.functors[adjunction->right].source;
      if (head == "unit" || head == "counit") {
        detail::expect_tokens(line, 4);
        detail::expect_keyword(line, 2, "=");
        const ParsedCategory& at = doc.categories[head == "unit" ? c_index
                                                                 : x_index];
        auto o = at.object_ids.find(line.tokens[1]);
        if (o == at.object_ids.end()) fail(line, 1, "unknown object");
        auto m = at.morphism_ids.find(line.tokens[3]);
        if (m == at.morphism_ids.end()) fail(line, 3, "unknown morphism");
        auto& table =
            head == "unit" ? adjunction->unit : adjunction->counit;
        table[o->second] = m->second;
        continue;
      }
      fail(line, 0, "unknown directive '" + head + "'");
    }

    fail(line, 0, "directive '" + head + "' outside any block");
  }
  const detail::Line eof{lines.empty() ? 1 : lines.back().number, {}, {}};
  close_all(eof);
  return doc;
}

// Canonical text: blocks in document order, objects in id order, morphisms
// grouped after, composites sorted. parse(render(parse(t))) is parse(t).
inline std::string render(const FincatDocument& doc) {
  std::ostringstream os;
  for (const ParsedCategory& c : doc.categories) {
    os << "category " << c.name << "\n";
    for (const std::string& obj : c.object_names) os << "obj " << obj << "\n";
    std::vector<std::pair<Mor, std::string>> morphisms(
        c.morphism_names.begin(), c.morphism_names.end());
    for (const auto& [m, name] : morphisms) {
      os << "mor " << name << " : " << c.object_names[mor_dom(m)] << " -> "
         << c.object_names[mor_cod(m)] << "\n";
    }
    for (Obj o = 0; o < c.category.object_count(); ++o) {
      os << "id " << c.object_names[o] << " = "
         << c.morphism_names.at(c.category.identity(o)) << "\n";
    }
    for (const auto& [pair, h] : c.composites) {
      os << "comp " << c.morphism_names.at(pair.first) << " . "
         << c.morphism_names.at(pair.second) << " = "
         << c.morphism_names.at(h) << "\n";
    }
    os << "\n";
  }
  for (const ParsedFunctor& f : doc.functors) {
    const ParsedCategory& src = doc.categories[f.source];
    const ParsedCategory& tgt = doc.categories[f.target];
    os << "functor " << f.name << " : " << src.name << " -> " << tgt.name
       << "\n";
    for (Obj o = 0; o < src.category.object_count(); ++o) {
      os << "fobj " << src.object_names[o] << " = "
         << tgt.object_names[f.functor.map(o)] << "\n";
    }
    for (const auto& [m, name] : src.morphism_names) {
      os << "fmor " << name << " = "
         << tgt.morphism_names.at(f.functor.map(m)) << "\n";
    }
    os << "\n";
  }
  for (const ParsedAdjunction& a : doc.adjunctions) {
    const ParsedFunctor& left = doc.functors[a.left];
    const ParsedFunctor& right = doc.functors[a.right];
    const ParsedCategory& c = doc.categories[left.source];
    const ParsedCategory& x = doc.categories[right.source];
    os << "adjunction " << a.name << " : " << left.name << " -| "
       << right.name << "\n";
    for (Obj o = 0; o < c.category.object_count(); ++o) {
      os << "unit " << c.object_names[o] << " = "
         << c.morphism_names.at(a.adjunction.unit(o)) << "\n";
    }
    for (Obj o = 0; o < x.category.object_count(); ++o) {
      os << "counit " << x.object_names[o] << " = "
         << x.morphism_names.at(a.adjunction.counit(o)) << "\n";
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace fincat::dsl

#endif  // FINCAT_DSL_HPP_
