#ifndef DPS_DPS_MONOID_HPP_
#define DPS_DPS_MONOID_HPP_

// Structured construction of DPS_n, the monoid of partial isometries of the
// star graph S_n. For n >= 2 every element lies in exactly one of
//
//   (a) lifts of I({1..n-1}) fixing 0,
//   (b) I({1..n-1}) itself,
//   (c) the maps 0 -> j, i -> 0 with i, j >= 1,
//   (d) the rank-one maps 0 -> i and i -> 0 with i >= 1.

#include <algorithm>
#include <array>
#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dps/error.hpp"
#include "dps/partial_map.hpp"

namespace dps {

  using BigInt = boost::multiprecision::cpp_int;

  namespace detail {
    inline BigInt binomial(std::size_t n, std::size_t k) {
      if (k > n) {
        return 0;
      }
      BigInt r = 1;
      for (std::size_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
      }
      return r;
    }

    inline BigInt factorial(std::size_t k) {
      BigInt r = 1;
      for (std::size_t i = 2; i <= k; ++i) {
        r *= i;
      }
      return r;
    }
  }  // namespace detail

  //! |I(X)| for |X| = m, i.e. the sum over k of C(m, k)^2 k!.
  inline BigInt symmetric_inverse_count(std::size_t m) {
    BigInt total = 0;
    for (std::size_t k = 0; k <= m; ++k) {
      BigInt c = detail::binomial(m, k);
      total += c * c * detail::factorial(k);
    }
    return total;
  }

  //! |DPS_n| = 1 + n^2 + 2 * sum_{k=1}^{n-1} C(n-1, k)^2 k!.
  inline BigInt dps_count(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::OutOfRange, "n must be positive");
    }
    BigInt sum = 0;
    for (std::size_t k = 1; k + 1 <= n; ++k) {
      BigInt c = detail::binomial(n - 1, k);
      sum += c * c * detail::factorial(k);
    }
    return 1 + BigInt(n) * n + 2 * sum;
  }

  //! All partial injections of degree `degree` with domain and image inside
  //! `ground`, in canonical order.
  inline std::vector<PartialInjection>
  enumerate_symmetric_inverse(std::size_t degree, std::vector<Point> ground) {
    std::sort(ground.begin(), ground.end());
    ground.erase(std::unique(ground.begin(), ground.end()), ground.end());
    for (Point p : ground) {
      if (p >= degree) {
        throw Error(ErrorCode::OutOfRange,
                    "ground point " + std::to_string(p) + " outside degree "
                        + std::to_string(degree));
      }
    }
    std::vector<PartialInjection> out;
    PartialTransformation         f(degree);
    std::vector<bool>             used(degree, false);

    auto recurse = [&](auto&& self, std::size_t i) -> void {
      if (i == ground.size()) {
        out.emplace_back(f, PartialInjection::trusted{});
        return;
      }
      Point x = ground[i];
      f.set(x, undefined);
      self(self, i + 1);
      for (Point y : ground) {
        if (!used[y]) {
          used[y] = true;
          f.set(x, y);
          self(self, i + 1);
          used[y] = false;
        }
      }
      f.set(x, undefined);
    };
    recurse(recurse, 0);
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

  //! Extends a map on {1..n-1} to {0..n-1} by fixing 0.
  inline PartialInjection embed_psi(PartialInjection const& xi) {
    if (xi.degree() == 0 || xi.defined_at(0) || xi.in_image(0)) {
      throw Error(ErrorCode::NotZeroFree, "0 occurs in Dom or Im: " + to_json(xi));
    }
    PartialTransformation f = xi.transformation();
    f.set(0, 0);
    return PartialInjection(std::move(f), PartialInjection::trusted{});
  }

  //! The four disjoint parts (a)-(d), each in canonical order. Requires
  //! n >= 2.
  inline std::array<std::vector<PartialInjection>, 4> dps_parts(std::size_t n) {
    if (n < 2) {
      throw Error(ErrorCode::Unsupported, "the decomposition needs n >= 2");
    }
    std::vector<Point> leaves(n - 1);
    std::iota(leaves.begin(), leaves.end(), Point(1));

    std::array<std::vector<PartialInjection>, 4> parts;
    parts[1] = enumerate_symmetric_inverse(n, leaves);
    parts[0].reserve(parts[1].size());
    for (auto const& xi : parts[1]) {
      parts[0].push_back(embed_psi(xi));
    }
    std::sort(parts[0].begin(), parts[0].end(), CanonicalLess{});
    for (Point i : leaves) {
      for (Point j : leaves) {
        parts[2].push_back(make_partial_injection(n, {{0, j}, {i, 0}}));
      }
      parts[3].push_back(make_partial_injection(n, {{0, i}}));
      parts[3].push_back(make_partial_injection(n, {{i, 0}}));
    }
    std::sort(parts[2].begin(), parts[2].end(), CanonicalLess{});
    std::sort(parts[3].begin(), parts[3].end(), CanonicalLess{});
    return parts;
  }

  //! Every element of DPS_n in canonical order: parts (a), (b), (c), (d).
  inline std::vector<PartialInjection> enumerate_dps(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::OutOfRange, "n must be positive");
    }
    if (n == 1) {
      return {PartialInjection(1), PartialInjection::identity(1)};
    }
    auto                          parts = dps_parts(n);
    std::vector<PartialInjection> out;
    std::size_t                   total = 0;
    for (auto const& part : parts) {
      total += part.size();
    }
    out.reserve(total);
    for (auto& part : parts) {
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
    return out;
  }

  //! Group of units: the elements with full domain, in canonical order.
  inline std::vector<PartialInjection> units(std::size_t n) {
    if (n == 0) {
      throw Error(ErrorCode::OutOfRange, "n must be positive");
    }
    std::vector<PartialInjection> out;
    if (n <= 2) {
      for (auto const& f : enumerate_dps(n)) {
        if (f.rank() == n) {
          out.push_back(f);
        }
      }
      return out;
    }
    std::vector<Point> perm(n);
    std::iota(perm.begin(), perm.end(), Point(0));
    do {
      out.emplace_back(n, perm);
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    std::sort(out.begin(), out.end(), CanonicalLess{});
    return out;
  }

}  // namespace dps

#endif  // DPS_DPS_MONOID_HPP_
