#ifndef DPS_GREEN_HPP_
#define DPS_GREEN_HPP_

// Green's relations of DPS_n, computed two ways:
//
//  * characterized: L by equal images, R by equal domains, H by both, J by
//    the rank / position-of-0 criterion in j_related, D := J;
//  * ideal_bruteforce: principal left, right and two-sided ideals computed
//    by multiplication over the whole monoid, D as L o R.
//
// Class ids are assigned in first-encounter order over enumerate_dps(n).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dps/dps_monoid.hpp"
#include "dps/element_table.hpp"
#include "dps/error.hpp"
#include "dps/partial_map.hpp"
#include "dps/star_metric.hpp"

namespace dps {

  enum class GreenMode { characterized, ideal_bruteforce };

  enum class GreenRelation { L, R, H, D, J };

  inline constexpr std::size_t characterized_limit = 8;
  inline constexpr std::size_t ideal_limit         = 5;

  struct GreenClassification {
    std::vector<PartialInjection> elements;
    std::vector<std::size_t>      L, R, H, D, J;

    std::vector<std::size_t> const& ids(GreenRelation rel) const noexcept {
      switch (rel) {
        case GreenRelation::L: return L;
        case GreenRelation::R: return R;
        case GreenRelation::H: return H;
        case GreenRelation::D: return D;
        case GreenRelation::J: return J;
      }
      return J;
    }

    //! Sizes of the classes, indexed by class id.
    std::vector<std::size_t> class_sizes(GreenRelation rel) const {
      auto const&              v = ids(rel);
      std::vector<std::size_t> sizes;
      for (std::size_t id : v) {
        if (id >= sizes.size()) {
          sizes.resize(id + 1, 0);
        }
        ++sizes[id];
      }
      return sizes;
    }
  };

  namespace detail {
    //! First-encounter numbering of the classes of a key function.
    template <typename Key, typename Fn>
    std::vector<std::size_t> number_by_key(std::size_t count, Fn&& key) {
      std::map<Key, std::size_t> seen;
      std::vector<std::size_t>   out(count);
      for (std::size_t i = 0; i < count; ++i) {
        auto [it, inserted] = seen.emplace(key(i), seen.size());
        out[i]              = it->second;
      }
      return out;
    }

    //! First-encounter numbering of an equivalence given as a predicate.
    template <typename Pred>
    std::vector<std::size_t> number_by_relation(std::size_t count, Pred&& related) {
      std::vector<std::size_t> out(count, SIZE_MAX);
      std::vector<std::size_t> reps;
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t c = 0; c < reps.size(); ++c) {
          if (related(reps[c], i)) {
            out[i] = c;
            break;
          }
        }
        if (out[i] == SIZE_MAX) {
          out[i] = reps.size();
          reps.push_back(i);
        }
      }
      return out;
    }

    inline void check_pair(PartialInjection const& a, PartialInjection const& b) {
      if (a.degree() != b.degree()) {
        throw Error(ErrorCode::InvalidElement, "degree mismatch");
      }
      if (!is_dps_member(a) || !is_dps_member(b)) {
        throw Error(ErrorCode::InvalidElement,
                    "not a partial isometry of the star graph");
      }
    }

    using Bits = std::vector<std::uint64_t>;

    inline bool test(Bits const& b, std::size_t i) noexcept {
      return (b[i / 64] >> (i % 64)) & 1U;
    }
    inline void set(Bits& b, std::size_t i) noexcept {
      b[i / 64] |= std::uint64_t(1) << (i % 64);
    }
  }  // namespace detail

  //! J-relation of DPS_n by the closed-form criterion: equal rank and either
  //! rank one, 0 in neither domain, or 0 in Dom(a) and Im(b).
  inline bool j_related(PartialInjection const& a, PartialInjection const& b) {
    detail::check_pair(a, b);
    std::size_t const ra = a.rank();
    std::size_t const rb = b.rank();
    if (ra != rb) {
      return false;
    }
    if (ra == 1) {
      return true;
    }
    if (!a.defined_at(0) && !b.defined_at(0)) {
      return true;
    }
    return a.defined_at(0) && b.in_image(0);
  }

  namespace detail {
    inline GreenClassification green_characterized(std::vector<PartialInjection> elts) {
      GreenClassification g;
      std::size_t const   N = elts.size();
      g.L = number_by_key<std::vector<Point>>(N, [&](std::size_t i) {
        return elts[i].image();
      });
      g.R = number_by_key<std::vector<Point>>(N, [&](std::size_t i) {
        return elts[i].domain();
      });
      g.H = number_by_key<std::pair<std::vector<Point>, std::vector<Point>>>(
          N, [&](std::size_t i) {
            return std::make_pair(elts[i].domain(), elts[i].image());
          });
      g.J = number_by_relation(N, [&](std::size_t i, std::size_t j) {
        return j_related(elts[i], elts[j]);
      });
      g.D      = g.J;
      g.elements = std::move(elts);
      return g;
    }

    inline GreenClassification green_bruteforce(std::vector<PartialInjection> elts) {
      ElementTable      table(std::move(elts));
      std::size_t const N     = table.size();
      std::size_t const words = (N + 63) / 64;

      std::vector<Bits> left(N, Bits(words, 0));
      std::vector<Bits> right(N, Bits(words, 0));
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t s = 0; s < N; ++s) {
          set(left[a], table.product(s, a));
          set(right[a], table.product(a, s));
        }
      }

      // Two-sided ideal S a S by saturation under left and right
      // multiplication.
      std::vector<Bits> ideal(N, Bits(words, 0));
      std::vector<std::size_t> stack;
      for (std::size_t a = 0; a < N; ++a) {
        Bits& seen = ideal[a];
        set(seen, a);
        stack.assign(1, a);
        while (!stack.empty()) {
          std::size_t x = stack.back();
          stack.pop_back();
          for (std::size_t s = 0; s < N; ++s) {
            for (std::size_t y : {std::size_t(table.product(s, x)),
                                  std::size_t(table.product(x, s))}) {
              if (!test(seen, y)) {
                set(seen, y);
                stack.push_back(y);
              }
            }
          }
        }
      }

      GreenClassification g;
      g.L = number_by_relation(N, [&](std::size_t i, std::size_t j) {
        return test(left[i], j) && test(left[j], i);
      });
      g.R = number_by_relation(N, [&](std::size_t i, std::size_t j) {
        return test(right[i], j) && test(right[j], i);
      });
      g.H = number_by_relation(N, [&](std::size_t i, std::size_t j) {
        return g.L[i] == g.L[j] && g.R[i] == g.R[j];
      });
      g.J = number_by_relation(N, [&](std::size_t i, std::size_t j) {
        return test(ideal[i], j) && test(ideal[j], i);
      });

      // D = L o R: a D b iff some c has a L c and c R b.
      std::size_t const nL = *std::max_element(g.L.begin(), g.L.end()) + 1;
      std::size_t const nR = *std::max_element(g.R.begin(), g.R.end()) + 1;
      std::vector<std::vector<bool>> meets(nL, std::vector<bool>(nR, false));
      for (std::size_t c = 0; c < N; ++c) {
        meets[g.L[c]][g.R[c]] = true;
      }
      auto l_then_r = [&](std::size_t a, std::size_t b) {
        return static_cast<bool>(meets[g.L[a]][g.R[b]]);
      };
      auto r_then_l = [&](std::size_t a, std::size_t b) {
        return static_cast<bool>(meets[g.L[b]][g.R[a]]);
      };
      for (std::size_t a = 0; a < N; ++a) {
        for (std::size_t b = 0; b < N; ++b) {
          if (l_then_r(a, b) != r_then_l(a, b)) {
            throw Error(ErrorCode::InvalidElement,
                        "L o R != R o L at " + to_json(table[a]) + ", "
                            + to_json(table[b]));
          }
        }
      }
      g.D        = number_by_relation(N, l_then_r);
      g.elements = table.elements();
      return g;
    }
  }  // namespace detail

  inline GreenClassification green_classify(std::size_t n, GreenMode mode) {
    std::size_t const limit
        = mode == GreenMode::characterized ? characterized_limit : ideal_limit;
    if (n == 0 || n > limit) {
      throw Error(ErrorCode::LimitExceeded,
                  "n = " + std::to_string(n) + " outside 1.."
                      + std::to_string(limit) + " for this mode");
    }
    auto elts = enumerate_dps(n);
    return mode == GreenMode::characterized
               ? detail::green_characterized(std::move(elts))
               : detail::green_bruteforce(std::move(elts));
  }

  //! Searches DPS_n for u, v with a = u b v.
  inline std::optional<std::pair<PartialInjection, PartialInjection>>
  find_j_witness(ElementTable const& table,
                 PartialInjection const& a,
                 PartialInjection const& b) {
    auto ia = table.index_of(a);
    auto ib = table.index_of(b);
    if (!ia || !ib) {
      throw Error(ErrorCode::InvalidElement, "element not in the table");
    }
    for (std::size_t u = 0; u < table.size(); ++u) {
      std::size_t ub = table.product(u, *ib);
      for (std::size_t v = 0; v < table.size(); ++v) {
        if (table.product(ub, v) == *ia) {
          return std::make_pair(table[u], table[v]);
        }
      }
    }
    return std::nullopt;
  }

  //! Closed-form factors u, v with a = u b v for the two non-group-like
  //! cases: rank one, and rank two with 0 in both domains. Other cases
  //! reduce to the symmetric inverse monoid and return nullopt.
  inline std::optional<std::pair<PartialInjection, PartialInjection>>
  explicit_j_witness(PartialInjection const& a, PartialInjection const& b) {
    detail::check_pair(a, b);
    std::size_t const n = a.degree();
    if (a.rank() != b.rank()) {
      return std::nullopt;
    }
    if (a.rank() == 1) {
      std::size_t i = a.domain()[0];
      std::size_t j = b.domain()[0];
      return std::make_pair(make_partial_injection(n, {{i, j}}),
                            make_partial_injection(n, {{b[j], a[i]}}));
    }
    if (a.rank() == 2 && a.defined_at(0) && b.defined_at(0)) {
      std::size_t i = a.domain()[1];
      std::size_t j = b.domain()[1];
      return std::make_pair(
          make_partial_injection(n, {{0, 0}, {i, j}}),
          make_partial_injection(n, {{b[0], a[0]}, {b[j], a[i]}}));
    }
    return std::nullopt;
  }

  inline std::string_view to_string(GreenMode mode) noexcept {
    return mode == GreenMode::characterized ? "characterized" : "ideal";
  }

}  // namespace dps

#endif  // DPS_GREEN_HPP_
