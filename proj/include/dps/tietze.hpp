#ifndef DPS_TIETZE_HPP_
#define DPS_TIETZE_HPP_

// Elementary Tietze transformations. Adding or deleting a relation (T1, T2)
// is accepted only after the enumerated quotient shows the relation to be a
// consequence of the others; this is a semi-decision bounded by the class
// budget.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "dps/error.hpp"
#include "dps/presentation.hpp"
#include "dps/quotient.hpp"

namespace dps {

  struct AddRelation {
    Relation relation;
  };

  struct DeleteRelation {
    Relation relation;
  };

  struct AddGenerator {
    std::string name;
    Word        value;  // over the current alphabet
  };

  struct EliminateGenerator {
    std::string name;
  };

  using TietzeStep = std::variant<AddRelation, DeleteRelation, AddGenerator, EliminateGenerator>;

  struct TietzeOptions {
    std::size_t max_classes = default_max_classes;
  };

  namespace detail {
    inline void check_letters(Presentation const& p, Word const& w) {
      for (Letter x : w) {
        if (x >= p.alphabet.size()) {
          throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(x));
        }
      }
    }

    //! Throws NotAConsequence unless u and v are equal in the quotient of
    //! `base`, and the quotients of `base` and `extended` have the same size.
    inline void require_consequence(Presentation const& base,
                                    Presentation const& extended,
                                    Relation const&     r,
                                    TietzeOptions const& opts) {
      MonoidTable const t = enumerate_quotient(base, opts.max_classes);
      if (word_class(t, r.lhs) != word_class(t, r.rhs)) {
        throw Error(ErrorCode::NotAConsequence,
                    to_string(r.lhs, base.alphabet) + " = " + to_string(r.rhs, base.alphabet));
      }
      MonoidTable const t2 = enumerate_quotient(extended, opts.max_classes);
      if (t2.class_count != t.class_count) {
        throw Error(ErrorCode::NotAConsequence, "quotient sizes differ");
      }
    }

    //! Replaces b by `value` (which avoids b) and closes the gap left in
    //! the letter numbering.
    inline Word substitute(Word const& w, Letter b, Word const& value) {
      auto shift = [b](Letter x) { return x > b ? static_cast<Letter>(x - 1) : x; };
      Word out;
      for (Letter x : w) {
        if (x == b) {
          for (Letter y : value) {
            out.push_back(shift(y));
          }
        } else {
          out.push_back(shift(x));
        }
      }
      return out;
    }
  }  // namespace detail

  inline Presentation apply_tietze(Presentation const& p, TietzeStep const& step,
                                   TietzeOptions const& opts = {}) {
    return std::visit(
        [&](auto const& s) -> Presentation {
          using T = std::decay_t<decltype(s)>;
          Presentation q = p;
          if constexpr (std::is_same_v<T, AddRelation>) {
            detail::check_letters(p, s.relation.lhs);
            detail::check_letters(p, s.relation.rhs);
            q.relations.push_back(s.relation);
            detail::require_consequence(p, q, s.relation, opts);
          } else if constexpr (std::is_same_v<T, DeleteRelation>) {
            auto it = std::find(q.relations.begin(), q.relations.end(), s.relation);
            if (it == q.relations.end()) {
              throw Error(ErrorCode::RelationNotFound,
                          to_string(s.relation.lhs, p.alphabet) + " = "
                              + to_string(s.relation.rhs, p.alphabet));
            }
            q.relations.erase(it);
            detail::require_consequence(q, p, s.relation, opts);
          } else if constexpr (std::is_same_v<T, AddGenerator>) {
            if (std::find(p.alphabet.begin(), p.alphabet.end(), s.name) != p.alphabet.end()) {
              throw Error(ErrorCode::LetterOccursInW, "letter " + s.name + " already exists");
            }
            detail::check_letters(p, s.value);
            q.alphabet.push_back(s.name);
            Word b{static_cast<Letter>(p.alphabet.size())};
            q.relations.push_back({b, s.value, s.name + "=w"});
          } else {
            auto const b      = static_cast<Letter>(p.letter(s.name));
            Word const single = {b};
            bool       seen   = false;
            for (std::size_t i = 0; i < p.relations.size(); ++i) {
              auto const& r = p.relations[i];
              Word const* w = nullptr;
              if (r.lhs == single) {
                w = &r.rhs;
              } else if (r.rhs == single) {
                w = &r.lhs;
              } else {
                continue;
              }
              seen = true;
              if (std::find(w->begin(), w->end(), b) != w->end()) {
                continue;
              }
              Word const value = *w;
              q.alphabet.erase(q.alphabet.begin() + b);
              q.relations.clear();
              for (std::size_t j = 0; j < p.relations.size(); ++j) {
                if (j == i) {
                  continue;
                }
                auto const& rj = p.relations[j];
                q.relations.push_back({detail::substitute(rj.lhs, b, value),
                                       detail::substitute(rj.rhs, b, value), rj.label});
              }
              return q;
            }
            if (seen) {
              throw Error(ErrorCode::LetterOccursInW,
                          "every relation " + s.name + " = w has " + s.name + " in w");
            }
            throw Error(ErrorCode::RelationNotFound, "no relation " + s.name + " = w");
          }
          return q;
        },
        step);
  }

  struct ReplayStage {
    std::string  description;
    Presentation presentation;
  };

  struct TietzeReplay {
    std::vector<ReplayStage> stages;  // stages[0] is the starting presentation
    bool                     matches_target = false;
    std::size_t              start_classes  = 0;
    std::size_t              target_classes = 0;
  };

  //! Rewrites the presentation of I({1..m}) on (a1, a2, b) into the one on
  //! (a1, a2, b1) in five steps, every step checked as above.
  inline TietzeReplay tietze_replay(std::size_t m, TietzeOptions const& opts = {}) {
    using V = SymmetricInverseVariant;
    TietzeReplay out;
    Presentation p = symmetric_inverse_presentation(m, V::b);
    out.stages.push_back({"start", p});

    Letter const a1 = 0, a2 = 1, b = 2, b1 = 3;
    auto a1p = [&](std::size_t k) { return power(Word{a1}, k); };

    // Step 1: b1 = a1 b a1^(m-1).
    p = apply_tietze(p, AddGenerator{"b1", Word{a1, b} + a1p(m - 1)}, opts);
    out.stages.push_back({"step 1: add generator b1 = a1 b a1^(m-1)", p});

    // Step 2: b = a1^(m-1) b1 a1, a consequence of a1^m = 1.
    p = apply_tietze(p, AddRelation{{{b}, a1p(m - 1) + Word{b1, a1}, ""}}, opts);
    out.stages.push_back({"step 2: add relation b = a1^(m-1) b1 a1", p});

    // Step 3: eliminate b. The alphabet becomes (a1, a2, b1).
    p = apply_tietze(p, EliminateGenerator{"b"}, opts);
    out.stages.push_back({"step 3: eliminate b", p});

    Letter const c1 = 2;  // b1 after elimination
    Word const   e  = a1p(m - 1) + Word{c1, a1};

    // Step 4: b1^2 = b1 and a2 b1 = b1 a2.
    p = apply_tietze(p, AddRelation{{{c1, c1}, {c1}, ""}}, opts);
    p = apply_tietze(p, AddRelation{{{a2, c1}, {c1, a2}, ""}}, opts);
    out.stages.push_back({"step 4: add relations b1^2 = b1, a2 b1 = b1 a2", p});

    // Step 5: drop the three relations made redundant by step 4.
    Word const x = a1p(m - 1) + Word{a2, a1} + e + a1p(m - 1) + Word{a2, a1};
    Word const y = Word{a1, a2} + a1p(m - 1) + Word{c1, a1, a2} + a1p(m - 1);
    p = apply_tietze(p, DeleteRelation{{x, y, ""}}, opts);
    p = apply_tietze(p, DeleteRelation{{e, e + e, ""}}, opts);
    p = apply_tietze(p, DeleteRelation{{{c1}, a1p(m) + Word{c1} + a1p(m), ""}}, opts);
    out.stages.push_back({"step 5: delete three redundant relations", p});

    Presentation const target = symmetric_inverse_presentation(m, V::b1);
    out.matches_target        = canonical_form(p) == canonical_form(target);
    out.start_classes = enumerate_quotient(out.stages.front().presentation, opts.max_classes).class_count;
    out.target_classes = enumerate_quotient(target, opts.max_classes).class_count;
    return out;
  }

}  // namespace dps

#endif  // DPS_TIETZE_HPP_
