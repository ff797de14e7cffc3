#ifndef DPS_GENERATION_HPP_
#define DPS_GENERATION_HPP_

// Standard generators of DPS_n, submonoid closure, and the exhaustive
// search for generating sets of a given size.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <unordered_set>
#include <vector>

#include "dps/dps_monoid.hpp"
#include "dps/element_table.hpp"
#include "dps/error.hpp"
#include "dps/partial_map.hpp"

namespace dps {

  //! (alpha1, alpha2, beta1, beta2, gamma) for n >= 4 and
  //! (alpha1, beta2, gamma) for n = 3.
  inline std::vector<PartialInjection> standard_generators(std::size_t n) {
    if (n < 3 || n > max_degree) {
      throw Error(ErrorCode::Unsupported,
                  "standard generators are defined for n >= 3");
    }
    std::vector<Point> a1(n), a2(n), b1(n), b2(n), c(n, undefined);
    for (std::size_t x = 0; x < n; ++x) {
      a1[x] = static_cast<Point>(x == 0 ? 0 : (x == n - 1 ? 1 : x + 1));
      a2[x] = static_cast<Point>(x == 1 ? 2 : (x == 2 ? 1 : x));
      b1[x] = x == n - 1 ? undefined : static_cast<Point>(x);
      b2[x] = x == 0 ? undefined : static_cast<Point>(x);
    }
    c[0] = 1;
    c[1] = 0;
    if (n == 3) {
      return {PartialInjection(n, a1), PartialInjection(n, b2), PartialInjection(n, c)};
    }
    return {PartialInjection(n, a1),
            PartialInjection(n, a2),
            PartialInjection(n, b1),
            PartialInjection(n, b2),
            PartialInjection(n, c)};
  }

  //! The submonoid generated by `gens`, in canonical order. Throws
  //! LimitExceeded (with the partial count) once more than `limit` elements
  //! have been found.
  inline std::vector<PartialInjection>
  closure(std::size_t n, std::vector<PartialInjection> const& gens, std::size_t limit) {
    for (auto const& g : gens) {
      if (g.degree() != n) {
        throw Error(ErrorCode::DegreeMismatch, "generator " + to_json(g));
      }
    }
    std::unordered_set<PartialInjection> seen;
    std::vector<PartialInjection>        order;
    auto add = [&](PartialInjection const& f) {
      if (seen.insert(f).second) {
        if (seen.size() > limit) {
          throw Error(ErrorCode::LimitExceeded,
                      "closure exceeds " + std::to_string(limit) + " elements",
                      seen.size());
        }
        order.push_back(f);
      }
    };
    add(PartialInjection::identity(n));
    for (std::size_t i = 0; i < order.size(); ++i) {
      for (auto const& g : gens) {
        add(order[i] * g);
      }
    }
    std::sort(order.begin(), order.end(), CanonicalLess{});
    return order;
  }

  struct GeneratingSetSearch {
    std::optional<std::vector<PartialInjection>> witness;
    //! Closures computed; when a witness is found without pruning this is
    //! its 1-based position in lexicographic subset order.
    std::uint64_t examined = 0;
  };

  struct SearchOptions {
    std::uint64_t budget = 10'000'000;
    unsigned      jobs   = 1;
  };

  namespace detail {

    //! Closure of a set of element indices inside a Cayley table;
    //! returns true iff it is the whole monoid.
    class IndexClosure {
     public:
      explicit IndexClosure(ElementTable const& table)
          : _table(table),
            _identity(*table.index_of(PartialInjection::identity(table[0].degree()))),
            _seen((table.size() + 63) / 64, 0) {
        _stack.reserve(table.size());
      }

      bool generates_all(std::vector<std::uint32_t> const& gens) {
        std::fill(_seen.begin(), _seen.end(), 0);
        std::size_t const N = _table.size();
        _stack.clear();
        mark(_identity);
        std::size_t count = 1;
        for (std::size_t i = 0; i < _stack.size(); ++i) {
          std::uint32_t x = _stack[i];
          for (std::uint32_t g : gens) {
            std::uint32_t y = _table.product(x, g);
            if (!marked(y)) {
              mark(y);
              if (++count == N) {
                return true;
              }
            }
          }
        }
        return count == N;
      }

     private:
      bool marked(std::uint32_t i) const noexcept {
        return (_seen[i / 64] >> (i % 64)) & 1U;
      }
      void mark(std::uint32_t i) {
        _seen[i / 64] |= std::uint64_t(1) << (i % 64);
        _stack.push_back(i);
      }

      ElementTable const&        _table;
      std::uint32_t              _identity;
      std::vector<std::uint64_t> _seen;
      std::vector<std::uint32_t> _stack;
    };

    inline bool next_combination(std::vector<std::uint32_t>& c, std::size_t N) {
      std::size_t const k = c.size();
      std::size_t       i = k;
      while (i > 0) {
        --i;
        if (c[i] < N - k + i) {
          ++c[i];
          for (std::size_t j = i + 1; j < k; ++j) {
            c[j] = c[j - 1] + 1;
          }
          return true;
        }
      }
      return false;
    }

    //! 0-based position of the sorted subset c among the k-subsets of
    //! {0..N-1} in lexicographic order.
    inline BigInt combination_rank(std::vector<std::uint32_t> const& c, std::size_t N) {
      std::size_t const k    = c.size();
      BigInt            rank = 0;
      std::size_t       next = 0;
      for (std::size_t p = 0; p < k; ++p) {
        for (std::size_t v = next; v < c[p]; ++v) {
          rank += binomial(N - 1 - v, k - 1 - p);
        }
        next = c[p] + 1;
      }
      return rank;
    }

    enum class Category { unit, fixed_corank_one, swap_centre, leaf_corank_one, other };

    inline Category categorize(PartialInjection const& f) {
      std::size_t const n = f.degree();
      std::size_t const r = f.rank();
      if (r == n) {
        return Category::unit;
      }
      if (f.defined_at(0) && f[0] == 0 && r == n - 1) {
        return Category::fixed_corank_one;
      }
      if (r == 2 && f.defined_at(0) && f[0] != 0) {
        return Category::swap_centre;
      }
      if (!f.defined_at(0) && !f.in_image(0) && r == n - 1) {
        return Category::leaf_corank_one;
      }
      return Category::other;
    }

    inline GeneratingSetSearch
    unpruned_search(ElementTable const& table, std::size_t k, SearchOptions const& opts) {
      std::size_t const N = table.size();
      GeneratingSetSearch result;
      if (k > N) {
        return result;
      }
      BigInt const total = binomial(N, k);
      if (total > opts.budget) {
        throw Error(ErrorCode::LimitExceeded,
                    total.str() + " subsets exceed the budget of "
                        + std::to_string(opts.budget));
      }
      if (k == 0) {
        result.examined = 1;
        if (N == 1) {
          result.witness.emplace();
        }
        return result;
      }

      std::mutex                                mutex;
      std::optional<std::vector<std::uint32_t>> best;
      std::atomic<std::size_t>                  next_first{0};
      std::atomic<std::size_t>                  best_first{N};

      auto worker = [&]() {
        IndexClosure closure(table);
        while (true) {
          std::size_t first = next_first.fetch_add(1);
          if (first + k > N || first > best_first.load()) {
            return;
          }
          std::vector<std::uint32_t> c(k);
          for (std::size_t j = 0; j < k; ++j) {
            c[j] = static_cast<std::uint32_t>(first + j);
          }
          do {
            if (closure.generates_all(c)) {
              std::lock_guard<std::mutex> lock(mutex);
              if (!best || c < *best) {
                best = c;
                best_first.store(first);
              }
              break;
            }
          } while (next_combination(c, N) && c[0] == first);
        }
      };

      unsigned const jobs = std::max(1U, opts.jobs);
      if (jobs == 1) {
        worker();
      } else {
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < jobs; ++t) {
          threads.emplace_back(worker);
        }
        for (auto& t : threads) {
          t.join();
        }
      }

      if (best) {
        result.examined = static_cast<std::uint64_t>(combination_rank(*best, N) + 1);
        result.witness.emplace();
        for (auto i : *best) {
          result.witness->push_back(table[i]);
        }
      } else {
        result.examined = static_cast<std::uint64_t>(total);
      }
      return result;
    }

    inline GeneratingSetSearch
    pruned_search(ElementTable const& table, std::size_t n, std::size_t k) {
      std::size_t const N = table.size();

      // Mandatory slots: (candidate pool, how many to draw from it).
      std::vector<std::pair<std::vector<std::uint32_t>, std::size_t>> slots;
      std::vector<std::uint32_t> units, fixed, swaps, leaves;
      for (std::uint32_t i = 0; i < N; ++i) {
        switch (categorize(table[i])) {
          case Category::unit:
            if (n >= 4 || table[i] != PartialInjection::identity(n)) {
              units.push_back(i);
            }
            break;
          case Category::fixed_corank_one: fixed.push_back(i); break;
          case Category::swap_centre: swaps.push_back(i); break;
          case Category::leaf_corank_one: leaves.push_back(i); break;
          case Category::other: break;
        }
      }
      if (n >= 4) {
        slots = {{units, 2}, {fixed, 1}, {swaps, 1}, {leaves, 1}};
      } else {
        slots = {{units, 1}, {swaps, 1}, {leaves, 1}};
      }

      GeneratingSetSearch result;
      std::size_t         required = 0;
      for (auto const& [pool, m] : slots) {
        required += m;
      }
      if (k < required) {
        return result;
      }

      IndexClosure closure(table);
      std::vector<std::vector<std::uint32_t>> picks(slots.size());
      std::vector<std::uint32_t>              chosen;

      auto fill_extra = [&](std::vector<std::uint32_t> base) -> bool {
        std::vector<std::uint32_t> rest;
        for (std::uint32_t i = 0; i < N; ++i) {
          if (std::find(base.begin(), base.end(), i) == base.end()) {
            rest.push_back(i);
          }
        }
        std::size_t const extra = k - base.size();
        if (extra > rest.size()) {
          return false;
        }
        std::vector<std::uint32_t> c(extra);
        for (std::size_t j = 0; j < extra; ++j) {
          c[j] = static_cast<std::uint32_t>(j);
        }
        do {
          std::vector<std::uint32_t> gens = base;
          for (auto j : c) {
            gens.push_back(rest[j]);
          }
          ++result.examined;
          if (closure.generates_all(gens)) {
            std::sort(gens.begin(), gens.end());
            chosen = gens;
            return true;
          }
        } while (extra > 0 && next_combination(c, rest.size()));
        return false;
      };

      auto recurse = [&](auto&& self, std::size_t s, std::vector<std::uint32_t>& base) -> bool {
        if (s == slots.size()) {
          return fill_extra(base);
        }
        auto const& [pool, m] = slots[s];
        if (m > pool.size()) {
          return false;
        }
        std::vector<std::uint32_t> c(m);
        for (std::size_t j = 0; j < m; ++j) {
          c[j] = static_cast<std::uint32_t>(j);
        }
        do {
          std::size_t const before = base.size();
          for (auto j : c) {
            base.push_back(pool[j]);
          }
          if (self(self, s + 1, base)) {
            return true;
          }
          base.resize(before);
        } while (m > 0 && next_combination(c, pool.size()));
        return false;
      };

      std::vector<std::uint32_t> base;
      if (recurse(recurse, 0, base)) {
        result.witness.emplace();
        for (auto i : chosen) {
          result.witness->push_back(table[i]);
        }
      }
      return result;
    }
  }  // namespace detail

  //! Looks for a k-element generating set of DPS_n. With `prune`, only
  //! subsets meeting the necessary conditions of the rank lower bound are
  //! tried: at least two units, one rank-(n-1) map fixing 0, one map of the
  //! shape 0 -> j, i -> 0, and one rank-(n-1) map avoiding 0 (for n = 3: a
  //! non-identity unit instead of the first two).
  inline GeneratingSetSearch find_generating_set(std::size_t          n,
                                                 std::size_t          k,
                                                 bool                 prune,
                                                 SearchOptions const& opts = {}) {
    if (n < 1 || n > 6) {
      throw Error(ErrorCode::LimitExceeded,
                  "generating-set search supports 1 <= n <= 6");
    }
    ElementTable table(enumerate_dps(n));
    if (prune && n >= 3) {
      return detail::pruned_search(table, n, k);
    }
    return detail::unpruned_search(table, k, opts);
  }

}  // namespace dps

#endif  // DPS_GENERATION_HPP_
