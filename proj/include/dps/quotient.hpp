#ifndef DPS_QUOTIENT_HPP_
#define DPS_QUOTIENT_HPP_

// Enumeration of the quotient monoid A* / rho_R of a finite presentation by
// relation tracing with coincidence merging (Todd-Coxeter, HLT strategy),
// and the check that the presentation of DPS_n defines DPS_n.
//
// Every class is scanned once: each relation is traced from it on both
// sides (defining new classes where the table is undefined) and the two
// end points are merged if they differ; then the row is completed.
// Coincidences are resolved with a union-find forest and a queue, and the
// table entries are resolved lazily through `find`. Dead rows are
// compacted away once they outnumber live ones.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dps/dps_monoid.hpp"
#include "dps/error.hpp"
#include "dps/partial_map.hpp"
#include "dps/presentation.hpp"

namespace dps {

  inline constexpr std::size_t default_max_classes = 100'000;

  struct MonoidTable {
    using class_type = std::uint32_t;

    std::vector<std::string>             alphabet;
    std::size_t                          class_count = 0;
    std::vector<std::vector<class_type>> right_action;  // [class][letter]
    std::vector<Word>                    representatives;
    class_type                           identity_class = 0;

    class_type act(class_type c, Word const& w) const {
      for (Letter x : w) {
        if (x >= alphabet.size()) {
          throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(x));
        }
        c = right_action[c][x];
      }
      return c;
    }

    //! Class of the product of two classes.
    class_type multiply(class_type c, class_type d) const {
      return act(c, representatives[d]);
    }
  };

  namespace detail {

    class Enumerator {
     public:
      static constexpr std::uint32_t UNDEF = UINT32_MAX;

      Enumerator(Presentation const& p, std::size_t max_classes)
          : _letters(p.alphabet.size()), _relations(p.relations), _max(max_classes) {
        new_class();
      }

      MonoidTable run(std::vector<std::string> const& alphabet) {
        std::size_t current = 0;
        while (current < _parent.size()) {
          if (alive(current)) {
            for (auto const& r : _relations) {
              auto const    cur = static_cast<std::uint32_t>(current);
              std::uint32_t u   = trace_define(cur, r.lhs);
              std::uint32_t v   = trace_define(find(cur), r.rhs);
              if (find(u) != find(v)) {
                coincidence(u, v);
              }
              if (!alive(current)) {
                break;
              }
            }
            for (std::size_t x = 0; x < _letters && alive(current); ++x) {
              if (entry(current, x) == UNDEF) {
                define(static_cast<std::uint32_t>(current), x);
              }
            }
          }
          ++current;
          if (_parent.size() > 1024 && 2 * _active < _parent.size()) {
            current = compact(current);
          }
        }
        return standardize(alphabet);
      }

     private:
      bool alive(std::size_t c) const noexcept {
        return _parent[c] == c;
      }

      std::uint32_t find(std::uint32_t c) noexcept {
        std::uint32_t root = c;
        while (_parent[root] != root) {
          root = _parent[root];
        }
        while (_parent[c] != root) {
          std::uint32_t next = _parent[c];
          _parent[c]         = root;
          c                  = next;
        }
        return root;
      }

      std::uint32_t& raw(std::size_t c, std::size_t x) noexcept {
        return _table[c * _letters + x];
      }

      //! Resolved table entry of a live class, or UNDEF.
      std::uint32_t entry(std::size_t c, std::size_t x) noexcept {
        std::uint32_t& t = raw(c, x);
        if (t != UNDEF) {
          t = find(t);
        }
        return t;
      }

      std::uint32_t new_class() {
        auto c = static_cast<std::uint32_t>(_parent.size());
        _parent.push_back(c);
        _table.resize(_table.size() + _letters, UNDEF);
        ++_active;
        return c;
      }

      //! Defines c.x as a new class. May run a lookahead first, so `c` is
      //! re-resolved and an entry found by the lookahead is returned.
      std::uint32_t define(std::uint32_t c, std::size_t x) {
        if (_active >= _max) {
          lookahead();
          c = find(c);
          if (std::uint32_t t = entry(c, x); t != UNDEF) {
            return t;
          }
          if (_active >= _max) {
            throw Error(ErrorCode::BudgetExceeded,
                        "more than " + std::to_string(_max) + " classes",
                        _active);
          }
        }
        std::uint32_t d = new_class();
        raw(c, x)       = d;
        return d;
      }

      std::uint32_t trace_define(std::uint32_t c, Word const& w) {
        for (Letter x : w) {
          std::uint32_t t = entry(c, x);
          c               = (t == UNDEF) ? define(c, x) : t;
        }
        return c;
      }

      //! Traces without defining; UNDEF if the path leaves the table.
      std::uint32_t trace(std::uint32_t c, Word const& w) {
        for (Letter x : w) {
          c = entry(c, x);
          if (c == UNDEF) {
            return UNDEF;
          }
        }
        return c;
      }

      void coincidence(std::uint32_t a, std::uint32_t b) {
        _queue.clear();
        _queue.emplace_back(a, b);
        while (!_queue.empty()) {
          auto [x, y] = _queue.front();
          _queue.pop_front();
          x = find(x);
          y = find(y);
          if (x == y) {
            continue;
          }
          if (y < x) {
            std::swap(x, y);
          }
          _parent[y] = x;
          --_active;
          for (std::size_t l = 0; l < _letters; ++l) {
            std::uint32_t ty = raw(y, l);
            if (ty == UNDEF) {
              continue;
            }
            std::uint32_t tx = raw(x, l);
            if (tx == UNDEF) {
              raw(x, l) = ty;
            } else {
              _queue.emplace_back(tx, ty);
            }
          }
        }
      }

      //! Scans every live class for relations whose two sides are already
      //! traceable and merges their ends. No new classes are defined.
      void lookahead() {
        bool changed = true;
        while (changed) {
          changed = false;
          for (std::uint32_t c = 0; c < _parent.size(); ++c) {
            if (!alive(c)) {
              continue;
            }
            for (auto const& r : _relations) {
              std::uint32_t u = trace(c, r.lhs);
              if (u == UNDEF) {
                continue;
              }
              std::uint32_t v = trace(c, r.rhs);
              if (v != UNDEF && find(u) != find(v)) {
                coincidence(u, v);
                changed = true;
                if (!alive(c)) {
                  break;
                }
              }
            }
          }
        }
      }

      //! Renumbers live classes in increasing order; returns the new index
      //! of the first live class at or after `current`.
      std::size_t compact(std::size_t current) {
        std::vector<std::uint32_t> renum(_parent.size(), UNDEF);
        std::uint32_t              next = 0;
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (alive(c)) {
            renum[c] = next++;
          }
        }
        std::size_t new_current = next;
        for (std::size_t c = current; c < _parent.size(); ++c) {
          if (alive(c)) {
            new_current = renum[c];
            break;
          }
        }
        std::vector<std::uint32_t> table(static_cast<std::size_t>(next) * _letters, UNDEF);
        for (std::size_t c = 0; c < _parent.size(); ++c) {
          if (!alive(c)) {
            continue;
          }
          for (std::size_t l = 0; l < _letters; ++l) {
            std::uint32_t t = entry(c, l);
            table[renum[c] * _letters + l] = (t == UNDEF) ? UNDEF : renum[t];
          }
        }
        _table = std::move(table);
        _parent.resize(next);
        for (std::uint32_t c = 0; c < next; ++c) {
          _parent[c] = c;
        }
        return new_current;
      }

      //! BFS from the identity in letter order: shortlex-minimal
      //! representatives and canonical numbering.
      MonoidTable standardize(std::vector<std::string> const& alphabet) {
        MonoidTable t;
        t.alphabet = alphabet;
        std::unordered_map<std::uint32_t, std::uint32_t> id;
        std::vector<std::uint32_t>                       order;
        std::uint32_t const                              root = find(0);
        id.emplace(root, 0);
        order.push_back(root);
        t.representatives.emplace_back();
        for (std::size_t i = 0; i < order.size(); ++i) {
          std::uint32_t c = order[i];
          for (std::size_t l = 0; l < _letters; ++l) {
            std::uint32_t d = entry(c, l);
            if (id.emplace(d, static_cast<std::uint32_t>(order.size())).second) {
              order.push_back(d);
              Word w = t.representatives[i];
              w.push_back(static_cast<Letter>(l));
              t.representatives.push_back(std::move(w));
            }
          }
        }
        t.class_count = order.size();
        t.right_action.assign(order.size(), std::vector<std::uint32_t>(_letters));
        for (std::size_t i = 0; i < order.size(); ++i) {
          for (std::size_t l = 0; l < _letters; ++l) {
            t.right_action[i][l] = id.at(entry(order[i], l));
          }
        }
        t.identity_class = 0;
        return t;
      }

      std::size_t                                        _letters;
      std::vector<Relation> const&                       _relations;
      std::size_t                                        _max;
      std::vector<std::uint32_t>                         _parent;
      std::vector<std::uint32_t>                         _table;
      std::size_t                                        _active = 0;
      std::deque<std::pair<std::uint32_t, std::uint32_t>> _queue;
    };
  }  // namespace detail

  //! Index of the first relation whose two sides reach different classes
  //! from some class, as (class, relation); nullopt if the table is
  //! compatible with every relation.
  inline std::optional<std::pair<std::size_t, std::size_t>>
  find_violation(MonoidTable const& t, Presentation const& p) {
    for (std::size_t c = 0; c < t.class_count; ++c) {
      for (std::size_t r = 0; r < p.relations.size(); ++r) {
        auto cc = static_cast<MonoidTable::class_type>(c);
        if (t.act(cc, p.relations[r].lhs) != t.act(cc, p.relations[r].rhs)) {
          return std::make_pair(c, r);
        }
      }
    }
    return std::nullopt;
  }

  //! Closed table of A*/rho_R if it has at most `max_classes` elements;
  //! otherwise throws BudgetExceeded.
  inline MonoidTable enumerate_quotient(Presentation const& p, std::size_t max_classes) {
    if (max_classes == 0) {
      throw Error(ErrorCode::BudgetExceeded, "max_classes must be positive");
    }
    for (auto const& r : p.relations) {
      for (Word const* w : {&r.lhs, &r.rhs}) {
        for (Letter x : *w) {
          if (x >= p.alphabet.size()) {
            throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(x));
          }
        }
      }
    }
    detail::Enumerator e(p, max_classes);
    MonoidTable        t = e.run(p.alphabet);
    if (t.class_count > max_classes) {
      throw Error(ErrorCode::BudgetExceeded,
                  "more than " + std::to_string(max_classes) + " classes",
                  t.class_count);
    }
    return t;
  }

  inline MonoidTable::class_type word_class(MonoidTable const& t, Word const& w) {
    return t.act(t.identity_class, w);
  }

  //! True iff `letter_images` (one word over t2's alphabet per letter of
  //! t1) induces a monoid isomorphism t1 -> t2.
  inline bool tables_isomorphic_via(MonoidTable const&       t1,
                                    MonoidTable const&       t2,
                                    std::vector<Word> const& letter_images) {
    if (t1.class_count != t2.class_count || letter_images.size() != t1.alphabet.size()) {
      return false;
    }
    constexpr auto UNSET = UINT32_MAX;
    std::vector<MonoidTable::class_type> phi(t1.class_count, UNSET);
    phi[t1.identity_class] = t2.identity_class;
    // Classes are numbered in BFS order, so each class is reached from an
    // earlier one before it is needed.
    for (std::size_t c = 0; c < t1.class_count; ++c) {
      if (phi[c] == UNSET) {
        return false;
      }
      for (std::size_t x = 0; x < t1.alphabet.size(); ++x) {
        auto target = t2.act(phi[c], letter_images[x]);
        auto d      = t1.right_action[c][x];
        if (phi[d] == UNSET) {
          phi[d] = target;
        } else if (phi[d] != target) {
          return false;
        }
      }
    }
    std::vector<bool> hit(t2.class_count, false);
    for (auto v : phi) {
      if (hit[v]) {
        return false;
      }
      hit[v] = true;
    }
    return true;
  }

  struct PresentationVerdict {
    bool           defined = false;
    std::size_t    class_count = 0;
    BigInt         dps_size = 0;
    RelationReport relations;
    MonoidTable    table;   // empty if the relations already fail
    std::string    detail;  // counterexample when not defined
  };

  //! Checks that the generators satisfy every relation, that the quotient
  //! is finite within budget, and that class -> value of representative is
  //! a bijective homomorphism onto DPS_n.
  inline PresentationVerdict verify_presentation_defines(std::size_t n, std::size_t max_classes) {
    PresentationVerdict verdict;
    Presentation const  p          = dps_presentation(n);
    auto const          assignment = align(p, standard_assignment(n));
    verdict.dps_size               = dps_count(n);
    verdict.relations              = check_relations(p, assignment);
    if (!verdict.relations.ok()) {
      auto const& f  = verdict.relations.failures.front();
      verdict.detail = "relation " + std::to_string(f.index) + " (" + f.label + ") fails: "
                       + to_json(f.lhs_value) + " != " + to_json(f.rhs_value);
      return verdict;
    }
    verdict.table        = enumerate_quotient(p, max_classes);
    MonoidTable const& t = verdict.table;
    verdict.class_count  = t.class_count;

    std::vector<PartialInjection> values;
    values.reserve(t.class_count);
    for (auto const& w : t.representatives) {
      values.push_back(eval_word(assignment, w));
    }
    for (std::size_t c = 0; c < t.class_count; ++c) {
      for (std::size_t x = 0; x < p.alphabet.size(); ++x) {
        if (values[c] * assignment.images[x] != values[t.right_action[c][x]]) {
          verdict.detail = "not multiplicative at class " + std::to_string(c) + " letter "
                           + p.alphabet[x];
          return verdict;
        }
      }
    }
    std::unordered_map<PartialInjection, std::size_t> seen;
    for (std::size_t c = 0; c < values.size(); ++c) {
      auto [it, inserted] = seen.emplace(values[c], c);
      if (!inserted) {
        verdict.detail = "classes " + std::to_string(it->second) + " and " + std::to_string(c)
                         + " both evaluate to " + to_json(values[c]);
        return verdict;
      }
    }
    auto const elements = enumerate_dps(n);
    if (elements.size() != values.size()) {
      verdict.detail = std::to_string(values.size()) + " classes but |DPS_n| = "
                       + std::to_string(elements.size());
      return verdict;
    }
    for (auto const& f : elements) {
      if (!seen.contains(f)) {
        verdict.detail = "element " + to_json(f) + " is not the value of any class";
        return verdict;
      }
    }
    verdict.defined = true;
    return verdict;
  }

  inline std::size_t max_classes_from_env() {
    if (char const* s = std::getenv("DPS_MAX_CLASSES")) {
      try {
        return static_cast<std::size_t>(std::stoull(s));
      } catch (...) {
        throw Error(ErrorCode::ParseError, std::string("DPS_MAX_CLASSES=") + s);
      }
    }
    return default_max_classes;
  }

}  // namespace dps

#endif  // DPS_QUOTIENT_HPP_
