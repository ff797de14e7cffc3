#ifndef DPS_STAR_METRIC_HPP_
#define DPS_STAR_METRIC_HPP_

// Geodesic metric of the star graph on {0, ..., n - 1} (centre 0) and the
// two equivalent membership tests for its monoid of partial isometries.

#include <cstddef>
#include <string>

#include "dps/error.hpp"
#include "dps/partial_map.hpp"

namespace dps {

  inline std::size_t star_distance(std::size_t n, std::size_t x, std::size_t y) {
    if (x >= n || y >= n) {
      throw Error(ErrorCode::OutOfRange,
                  "points " + std::to_string(x) + "," + std::to_string(y)
                      + " outside star graph of order " + std::to_string(n));
    }
    if (x == y) {
      return 0;
    }
    return (x == 0 || y == 0) ? 1 : 2;
  }

  //! Brute force: d(xf, yf) = d(x, y) over unordered pairs of Dom(f).
  inline bool is_partial_isometry(PartialTransformation const& f) {
    std::size_t const n   = f.degree();
    auto const        dom = f.domain();
    for (std::size_t i = 0; i < dom.size(); ++i) {
      for (std::size_t j = i + 1; j < dom.size(); ++j) {
        if (star_distance(n, f[dom[i]], f[dom[j]])
            != star_distance(n, dom[i], dom[j])) {
          return false;
        }
      }
    }
    return true;
  }

  //! Closed-form characterization by domain size and the role of 0.
  inline bool is_dps_member(PartialTransformation const& f) {
    std::size_t const k = f.rank();
    if (k <= 1) {
      return true;
    }
    if (!f.is_injective()) {
      return false;
    }
    if (!f.defined_at(0)) {
      return !f.in_image(0);
    }
    if (k == 2) {
      return f.in_image(0);
    }
    return f[0] == 0;
  }

}  // namespace dps

#endif  // DPS_STAR_METRIC_HPP_
