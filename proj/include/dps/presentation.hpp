#ifndef DPS_PRESENTATION_HPP_
#define DPS_PRESENTATION_HPP_

// Words, relations and monoid presentations; the concrete presentations of
// DPS_n and of the symmetric inverse monoid I({1..m}); evaluation of words
// under a generator assignment; relation checking; a plain-text format.
//
// Chained equalities u = v = w are stored as the adjacent pairs (u, v),
// (v, w). A chain whose last member is the empty word, such as
// a2^2 = a1^m = ... = 1, is stored as one relation per member equal to 1.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dps/error.hpp"
#include "dps/generation.hpp"
#include "dps/partial_map.hpp"

namespace dps {

  using Letter = std::uint16_t;
  using Word   = std::vector<Letter>;

  struct Relation {
    Word        lhs;
    Word        rhs;
    std::string label;  // e.g. "R14[j=2]"; informational only

    friend bool operator==(Relation const& x, Relation const& y) {
      return x.lhs == y.lhs && x.rhs == y.rhs;
    }
  };

  struct Presentation {
    std::vector<std::string> alphabet;
    std::vector<Relation>    relations;

    std::size_t letter(std::string_view name) const {
      auto it = std::find(alphabet.begin(), alphabet.end(), name);
      if (it == alphabet.end()) {
        throw Error(ErrorCode::UnknownLetter, std::string(name));
      }
      return static_cast<std::size_t>(it - alphabet.begin());
    }

    friend bool operator==(Presentation const&, Presentation const&) = default;
  };

  //! Shortlex: shorter first, then lexicographic by letter index.
  inline bool shortlex_less(Word const& u, Word const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  inline Word operator+(Word u, Word const& v) {
    u.insert(u.end(), v.begin(), v.end());
    return u;
  }

  inline Word power(Word const& u, std::size_t k) {
    Word out;
    out.reserve(u.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      out.insert(out.end(), u.begin(), u.end());
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_string(Word const& w, std::vector<std::string> const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += alphabet.at(w[i]);
    }
    return out;
  }

  inline Word parse_word(std::string_view text, std::vector<std::string> const& alphabet) {
    std::istringstream in{std::string(text)};
    std::string        token;
    Word               w;
    bool               saw_one = false;
    while (in >> token) {
      if (token == "1") {
        saw_one = true;
        continue;
      }
      auto it = std::find(alphabet.begin(), alphabet.end(), token);
      if (it == alphabet.end()) {
        throw Error(ErrorCode::UnknownLetter, token);
      }
      w.push_back(static_cast<Letter>(it - alphabet.begin()));
    }
    if (w.empty() && !saw_one) {
      throw Error(ErrorCode::ParseError, "empty side; write 1 for the empty word");
    }
    return w;
  }

  //! One relation per line, `lhs = rhs`, preceded by a `# generators:` line.
  inline std::string to_text(Presentation const& p) {
    std::string out = "# generators:";
    for (auto const& a : p.alphabet) {
      out += ' ' + a;
    }
    out += '\n';
    for (auto const& r : p.relations) {
      out += to_string(r.lhs, p.alphabet) + " = " + to_string(r.rhs, p.alphabet) + '\n';
    }
    return out;
  }

  //! Inverse of to_text. Without a `# generators:` line the alphabet is
  //! taken in order of first appearance.
  inline Presentation parse_presentation(std::string_view text) {
    Presentation             p;
    std::vector<std::string> lines;
    {
      std::istringstream in{std::string(text)};
      std::string        line;
      while (std::getline(in, line)) {
        lines.push_back(line);
      }
    }
    bool declared = false;
    for (auto const& line : lines) {
      constexpr std::string_view tag = "# generators:";
      if (line.rfind(tag, 0) == 0) {
        std::istringstream in(line.substr(tag.size()));
        std::string        a;
        while (in >> a) {
          p.alphabet.push_back(a);
        }
        declared = true;
      }
    }
    for (auto const& line : lines) {
      auto first = line.find_first_not_of(" \t\r");
      if (first == std::string::npos || line[first] == '#') {
        continue;
      }
      auto eq = line.find('=');
      if (eq == std::string::npos || line.find('=', eq + 1) != std::string::npos) {
        throw Error(ErrorCode::ParseError, "expected `lhs = rhs`: " + line);
      }
      if (!declared) {
        std::istringstream in(line.substr(0, eq) + " " + line.substr(eq + 1));
        std::string        token;
        while (in >> token) {
          if (token != "1"
              && std::find(p.alphabet.begin(), p.alphabet.end(), token)
                     == p.alphabet.end()) {
            p.alphabet.push_back(token);
          }
        }
      }
      p.relations.push_back({parse_word(line.substr(0, eq), p.alphabet),
                             parse_word(line.substr(eq + 1), p.alphabet),
                             ""});
    }
    return p;
  }

  //! Each relation oriented shortlex-larger side first, relations sorted,
  //! labels dropped. Two presentations with equal canonical forms have the
  //! same relation set up to order and orientation.
  inline Presentation canonical_form(Presentation p) {
    for (auto& r : p.relations) {
      if (shortlex_less(r.lhs, r.rhs)) {
        std::swap(r.lhs, r.rhs);
      }
      r.label.clear();
    }
    std::sort(p.relations.begin(), p.relations.end(), [](Relation const& x, Relation const& y) {
      if (x.lhs != y.lhs) {
        return shortlex_less(x.lhs, y.lhs);
      }
      return shortlex_less(x.rhs, y.rhs);
    });
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Concrete presentations
  ////////////////////////////////////////////////////////////////////////

  namespace detail {
    inline Word letter(Letter x) {
      return Word{x};
    }

    // Relations shared by both symmetric inverse presentations and the
    // DPS_n presentation, for I({1..m}) on letters a1, a2.
    inline void add_group_relations(std::vector<Relation>& rels,
                                    std::size_t             m,
                                    Word const&             a1,
                                    Word const&             a2) {
      rels.push_back({a2 + a2, {}, "R1"});
      rels.push_back({power(a1, m), {}, "R2"});
      rels.push_back({power(a1 + a2, m - 1), {}, "R3"});
      rels.push_back({power(a2 + power(a1, m - 1) + a2 + a1, 3), {}, "R4"});
      for (std::size_t j = 2; j + 2 <= m; ++j) {
        rels.push_back({power(a2 + power(a1, m - j) + a2 + power(a1, j), 2),
                        {},
                        "R5[j=" + std::to_string(j) + "]"});
      }
    }
  }  // namespace detail

  //! The presentation of DPS_n: 3n + 9 relations over a1, a2, b1, b2, c for
  //! n >= 4, and the small cases on (a1, b2, c), (a, s) and (z).
  inline Presentation dps_presentation(std::size_t n) {
    using detail::letter;
    Presentation p;
    auto&        R = p.relations;
    if (n == 0) {
      throw Error(ErrorCode::OutOfRange, "n must be positive");
    }
    if (n == 1) {
      p.alphabet = {"z"};
      Word z     = letter(0);
      R.push_back({z + z, z, "z^2=z"});
      return p;
    }
    if (n == 2) {
      p.alphabet = {"a", "s"};
      Word a = letter(0), s = letter(1);
      R.push_back({a + a, {}, "a^2=1"});
      R.push_back({s + s, s, "s^2=s"});
      R.push_back({power(s + a, 2), s + a + s, "(sa)^2=sas"});
      R.push_back({s + a + s, power(a + s, 2), "sas=(as)^2"});
      return p;
    }
    if (n == 3) {
      p.alphabet = {"a1", "b2", "c"};
      Word a1 = letter(0), b2 = letter(1), c = letter(2);
      R.push_back({a1 + a1, {}, "a1^2=1"});
      R.push_back({b2 + b2, b2, "b2^2=b2"});
      R.push_back({a1 + b2, b2 + a1, "a1b2=b2a1"});
      R.push_back({power(c, 3), c, "c^3=c"});
      R.push_back({b2 + c + c, c + c + b2, "b2c^2=c^2b2"});
      R.push_back({c + c + b2, c + a1 + c, "c^2b2=ca1c"});
      R.push_back({power(a1 + c + c, 2), power(c + c + a1, 2), "(a1c^2)^2=(c^2a1)^2"});
      R.push_back({power(b2 + c, 2), b2 + c + b2, "(b2c)^2=b2cb2"});
      return p;
    }
    p.alphabet = {"a1", "a2", "b1", "b2", "c"};
    Word a1 = letter(0), a2 = letter(1), b1 = letter(2), b2 = letter(3), c = letter(4);
    auto a1p = [&](std::size_t k) { return power(a1, k); };

    detail::add_group_relations(R, n - 1, a1, a2);
    R.push_back({b1 + b1, b1, "R6"});
    R.push_back({b2 + b2, b2, "R6"});
    R.push_back({a2 + b1, b1 + a2, "R7"});
    R.push_back({b2 + a2, a2 + b2, "R7"});
    R.push_back({b2 + a1, a1 + b2, "R7"});
    R.push_back({b2 + b1, b1 + b2, "R7"});
    Word const e = a1p(n - 2) + b1 + a1;  // lifts the corank-one idempotent
    R.push_back({a1 + a2 + a1p(n - 2) + b1 + a1 + a2 + a1p(n - 2), e, "R8"});
    R.push_back({power(e + a2, 2), power(a2 + e, 2), "R9"});
    R.push_back({e + a2 + e, power(a2 + e, 2), "R10"});
    R.push_back({power(c, 3), c, "R11"});
    R.push_back({c + a1, c + a2, "R12"});
    R.push_back({a1p(n - 2) + c, a2 + c, "R13"});
    for (std::size_t j = 1; j + 3 <= n; ++j) {
      R.push_back({a2 + a1p(j) + c, a1p(j) + c, "R14[j=" + std::to_string(j) + "]"});
    }
    R.push_back({b1 + a1 + c, c + b2, "R15"});
    for (std::size_t j = 2; j + 3 <= n; ++j) {
      R.push_back({b1 + a1p(j) + c, a1p(j) + c, "R16[j=" + std::to_string(j) + "]"});
    }
    R.push_back({power(b1 + a1, n - 3) + b1, c + c + a2 + a1p(n - 4), "R17"});
    R.push_back({b2 + c + c, c + a2 + c, "R18"});
    R.push_back({power(b2 + c, 2), b2 + c + b2, "R19"});
    return p;
  }

  enum class SymmetricInverseVariant { b, b1 };

  //! Presentations of I({1..m}), m >= 3: variant b on (a1, a2, b) with b
  //! the idempotent fixing {2..m}; variant b1 on (a1, a2, b1) with b1 the
  //! idempotent fixing {1..m-1}.
  inline Presentation symmetric_inverse_presentation(std::size_t m, SymmetricInverseVariant variant) {
    using detail::letter;
    if (m < 3) {
      throw Error(ErrorCode::Unsupported, "symmetric inverse presentations need m >= 3");
    }
    Presentation p;
    auto&        R  = p.relations;
    Word const   a1 = letter(0), a2 = letter(1), x = letter(2);
    auto         a1p = [&](std::size_t k) { return power(a1, k); };
    detail::add_group_relations(R, m, a1, a2);
    if (variant == SymmetricInverseVariant::b) {
      p.alphabet   = {"a1", "a2", "b"};
      Word const X = a1p(m - 1) + a2 + a1 + x + a1p(m - 1) + a2 + a1;
      Word const Y = a1 + a2 + x + a2 + a1p(m - 1);
      R.push_back({X, Y, ""});
      R.push_back({Y, x, ""});
      R.push_back({x, x + x, ""});
      R.push_back({power(x + a2, 2), x + a2 + x, ""});
      R.push_back({x + a2 + x, power(a2 + x, 2), ""});
    } else {
      p.alphabet   = {"a1", "a2", "b1"};
      Word const e = a1p(m - 1) + x + a1;
      R.push_back({a1 + a2 + a1p(m - 1) + x + a1 + a2 + a1p(m - 1), e, ""});
      R.push_back({power(e + a2, 2), e + a2 + e, ""});
      R.push_back({e + a2 + e, power(a2 + e, 2), ""});
      R.push_back({x + x, x, ""});
      R.push_back({a2 + x, x + a2, ""});
    }
    return p;
  }

  ////////////////////////////////////////////////////////////////////////
  // Evaluation
  ////////////////////////////////////////////////////////////////////////

  //! Images of the letters of an alphabet, all of one degree.
  struct GeneratorAssignment {
    std::vector<std::string>      letters;
    std::vector<PartialInjection> images;

    std::size_t degree() const noexcept {
      return images.empty() ? 0 : images.front().degree();
    }

    PartialInjection const& image(std::string_view name) const {
      auto it = std::find(letters.begin(), letters.end(), name);
      if (it == letters.end()) {
        throw Error(ErrorCode::UnknownLetter, std::string(name));
      }
      return images[static_cast<std::size_t>(it - letters.begin())];
    }
  };

  //! a1, a2, b1, b2, c -> alpha1, alpha2, beta1, beta2, gamma for n >= 4,
  //! and the matching generators of the small-n presentations.
  inline GeneratorAssignment standard_assignment(std::size_t n) {
    if (n == 1) {
      return {{"z"}, {PartialInjection(1)}};
    }
    if (n == 2) {
      return {{"a", "s"},
              {make_partial_injection(2, {{0, 1}, {1, 0}}), make_partial_injection(2, {{0, 0}})}};
    }
    if (n == 3) {
      return {{"a1", "b2", "c"}, standard_generators(3)};
    }
    return {{"a1", "a2", "b1", "b2", "c"}, standard_generators(n)};
  }

  //! Generators of I({1..m}) inside degree m + 1: the m-cycle, the
  //! transposition (1 2), and the idempotent of the variant. With `lift`
  //! each map also fixes 0.
  inline GeneratorAssignment symmetric_inverse_assignment(std::size_t             m,
                                                          SymmetricInverseVariant variant,
                                                          bool                    lift = false) {
    if (m < 3) {
      throw Error(ErrorCode::Unsupported, "symmetric inverse presentations need m >= 3");
    }
    std::size_t const  n = m + 1;
    std::vector<Point> cyc(n, undefined), swp(n, undefined), idem(n, undefined);
    for (std::size_t x = 1; x <= m; ++x) {
      cyc[x] = static_cast<Point>(x == m ? 1 : x + 1);
      swp[x] = static_cast<Point>(x == 1 ? 2 : (x == 2 ? 1 : x));
      bool keep = variant == SymmetricInverseVariant::b ? x != 1 : x != m;
      idem[x]   = keep ? static_cast<Point>(x) : undefined;
    }
    if (lift) {
      cyc[0] = swp[0] = idem[0] = 0;
    }
    return {{"a1", "a2", variant == SymmetricInverseVariant::b ? "b" : "b1"},
            {PartialInjection(n, cyc), PartialInjection(n, swp), PartialInjection(n, idem)}};
  }

  //! Left-to-right product of the letter images; the empty word gives the
  //! identity.
  inline PartialInjection eval_word(GeneratorAssignment const& assignment, Word const& w) {
    PartialInjection f = PartialInjection::identity(assignment.degree());
    for (Letter x : w) {
      if (x >= assignment.images.size()) {
        throw Error(ErrorCode::UnknownLetter, "letter index " + std::to_string(x));
      }
      f = f * assignment.images[x];
    }
    return f;
  }

  //! The assignment reordered to follow the alphabet of `p`.
  inline GeneratorAssignment align(Presentation const& p, GeneratorAssignment const& assignment) {
    GeneratorAssignment out;
    out.letters = p.alphabet;
    for (auto const& a : p.alphabet) {
      out.images.push_back(assignment.image(a));
    }
    return out;
  }

  struct RelationFailure {
    std::size_t      index;
    std::string      label;
    PartialInjection lhs_value;
    PartialInjection rhs_value;
  };

  struct RelationReport {
    std::size_t                  relation_count = 0;
    std::vector<RelationFailure> failures;

    bool ok() const noexcept {
      return failures.empty();
    }
  };

  inline RelationReport check_relations(Presentation const& p, GeneratorAssignment const& assignment) {
    auto const     aligned = align(p, assignment);
    RelationReport report;
    report.relation_count = p.relations.size();
    for (std::size_t i = 0; i < p.relations.size(); ++i) {
      auto const& r   = p.relations[i];
      auto        lhs = eval_word(aligned, r.lhs);
      auto        rhs = eval_word(aligned, r.rhs);
      if (lhs != rhs) {
        report.failures.push_back({i, r.label, std::move(lhs), std::move(rhs)});
      }
    }
    return report;
  }

}  // namespace dps

#endif  // DPS_PRESENTATION_HPP_
