#ifndef DPS_PARTIAL_MAP_HPP_
#define DPS_PARTIAL_MAP_HPP_

// Partial transformations and partial injections of {0, ..., n - 1}.
//
// Maps act on the right: x(fg) = (xf)g, so compose(f, g) applies f first.
// Storage is dense: one byte per point with `undefined` marking points
// outside the domain.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "json.hpp"

#include "dps/error.hpp"

namespace dps {

  using Point = std::uint8_t;

  inline constexpr Point       undefined  = 0xFF;
  inline constexpr std::size_t max_degree = 254;

  class PartialTransformation {
   public:
    PartialTransformation() = default;

    //! The empty map of the given degree.
    explicit PartialTransformation(std::size_t degree)
        : _images(check_degree(degree), undefined) {}

    PartialTransformation(std::size_t degree, std::vector<Point> images)
        : _images(std::move(images)) {
      check_degree(degree);
      if (_images.size() != degree) {
        throw Error(ErrorCode::DegreeMismatch,
                    "expected " + std::to_string(degree) + " images, got "
                        + std::to_string(_images.size()));
      }
      for (Point y : _images) {
        if (y != undefined && y >= degree) {
          throw Error(ErrorCode::OutOfRange,
                      "image " + std::to_string(y) + " >= degree "
                          + std::to_string(degree));
        }
      }
    }

    static PartialTransformation identity(std::size_t degree) {
      PartialTransformation f(degree);
      for (std::size_t x = 0; x < degree; ++x) {
        f._images[x] = static_cast<Point>(x);
      }
      return f;
    }

    std::size_t degree() const noexcept {
      return _images.size();
    }

    //! Image of x, or `undefined`.
    Point operator[](std::size_t x) const noexcept {
      return _images[x];
    }

    bool defined_at(std::size_t x) const noexcept {
      return x < _images.size() && _images[x] != undefined;
    }

    std::span<Point const> images() const noexcept {
      return _images;
    }

    std::vector<Point> domain() const {
      std::vector<Point> out;
      for (std::size_t x = 0; x < _images.size(); ++x) {
        if (_images[x] != undefined) {
          out.push_back(static_cast<Point>(x));
        }
      }
      return out;
    }

    //! Defined images in increasing order (with repetitions for
    //! non-injective maps).
    std::vector<Point> image() const {
      std::vector<Point> out;
      for (Point y : _images) {
        if (y != undefined) {
          out.push_back(y);
        }
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    //! |Dom(f)|.
    std::size_t rank() const noexcept {
      return static_cast<std::size_t>(
          std::count_if(_images.begin(), _images.end(), [](Point y) {
            return y != undefined;
          }));
    }

    bool in_image(Point y) const noexcept {
      return std::find(_images.begin(), _images.end(), y) != _images.end();
    }

    bool is_injective() const noexcept {
      std::uint64_t seen[4] = {0, 0, 0, 0};
      for (Point y : _images) {
        if (y == undefined) {
          continue;
        }
        std::uint64_t bit = std::uint64_t(1) << (y % 64);
        if (seen[y / 64] & bit) {
          return false;
        }
        seen[y / 64] |= bit;
      }
      return true;
    }

    void set(std::size_t x, Point y) {
      if (x >= degree() || (y != undefined && y >= degree())) {
        throw Error(ErrorCode::OutOfRange, "point outside {0..n-1}");
      }
      _images[x] = y;
    }

    friend bool operator==(PartialTransformation const&,
                           PartialTransformation const&)
        = default;

   private:
    static std::size_t check_degree(std::size_t degree) {
      if (degree > max_degree) {
        throw Error(ErrorCode::OutOfRange,
                    "degree " + std::to_string(degree) + " exceeds "
                        + std::to_string(max_degree));
      }
      return degree;
    }

    std::vector<Point> _images;
  };

  //! A partial transformation whose defined images are pairwise distinct.
  class PartialInjection {
   public:
    PartialInjection() = default;

    explicit PartialInjection(std::size_t degree) : _map(degree) {}

    explicit PartialInjection(PartialTransformation f) : _map(std::move(f)) {
      if (!_map.is_injective()) {
        throw Error(ErrorCode::NotInjective, "repeated image point");
      }
    }

    PartialInjection(std::size_t degree, std::vector<Point> images)
        : PartialInjection(PartialTransformation(degree, std::move(images))) {}

    static PartialInjection identity(std::size_t degree) {
      return PartialInjection(PartialTransformation::identity(degree),
                              trusted{});
    }

    std::size_t degree() const noexcept {
      return _map.degree();
    }
    Point operator[](std::size_t x) const noexcept {
      return _map[x];
    }
    bool defined_at(std::size_t x) const noexcept {
      return _map.defined_at(x);
    }
    std::span<Point const> images() const noexcept {
      return _map.images();
    }
    std::vector<Point> domain() const {
      return _map.domain();
    }
    std::vector<Point> image() const {
      return _map.image();
    }
    std::size_t rank() const noexcept {
      return _map.rank();
    }
    bool in_image(Point y) const noexcept {
      return _map.in_image(y);
    }

    PartialTransformation const& transformation() const noexcept {
      return _map;
    }
    operator PartialTransformation const&() const noexcept {  // NOLINT
      return _map;
    }

    friend bool operator==(PartialInjection const&, PartialInjection const&)
        = default;

    struct trusted {};

    //! Skips the injectivity scan; callers guarantee the invariant.
    PartialInjection(PartialTransformation f, trusted) noexcept
        : _map(std::move(f)) {}

   private:
    PartialTransformation _map;
  };

  using MapPair = std::pair<std::size_t, std::size_t>;

  inline PartialInjection make_partial_injection(std::size_t          degree,
                                                 std::span<MapPair const> pairs) {
    if (degree == 0) {
      throw Error(ErrorCode::OutOfRange, "degree must be positive");
    }
    PartialTransformation f(degree);
    std::vector<bool>     hit(degree, false);
    for (auto [x, y] : pairs) {
      if (x >= degree || y >= degree) {
        throw Error(ErrorCode::OutOfRange,
                    "pair (" + std::to_string(x) + "," + std::to_string(y)
                        + ") outside degree " + std::to_string(degree));
      }
      if (f.defined_at(x)) {
        throw Error(ErrorCode::DuplicateDomain,
                    "point " + std::to_string(x) + " mapped twice");
      }
      if (hit[y]) {
        throw Error(ErrorCode::NotInjective,
                    "image " + std::to_string(y) + " repeated");
      }
      hit[y] = true;
      f.set(x, static_cast<Point>(y));
    }
    return PartialInjection(std::move(f), PartialInjection::trusted{});
  }

  inline PartialInjection
  make_partial_injection(std::size_t degree, std::initializer_list<MapPair> pairs) {
    return make_partial_injection(
        degree, std::span<MapPair const>(pairs.begin(), pairs.size()));
  }

  //! Left-to-right product: x(compose(f, g)) = (xf)g.
  inline PartialTransformation compose(PartialTransformation const& f,
                                       PartialTransformation const& g) {
    if (f.degree() != g.degree()) {
      throw Error(ErrorCode::DegreeMismatch,
                  std::to_string(f.degree())
                      + " != " + std::to_string(g.degree()));
    }
    std::vector<Point> images(f.degree(), undefined);
    for (std::size_t x = 0; x < f.degree(); ++x) {
      Point y = f[x];
      images[x] = (y == undefined) ? undefined : g[y];
    }
    return PartialTransformation(f.degree(), std::move(images));
  }

  inline PartialInjection compose(PartialInjection const& f,
                                  PartialInjection const& g) {
    return PartialInjection(compose(f.transformation(), g.transformation()),
                            PartialInjection::trusted{});
  }

  inline PartialTransformation operator*(PartialTransformation const& f,
                                         PartialTransformation const& g) {
    return compose(f, g);
  }

  inline PartialInjection operator*(PartialInjection const& f,
                                    PartialInjection const& g) {
    return compose(f, g);
  }

  inline PartialInjection invert(PartialInjection const& f) {
    PartialTransformation out(f.degree());
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (f[x] != undefined) {
        out.set(f[x], static_cast<Point>(x));
      }
    }
    return PartialInjection(std::move(out), PartialInjection::trusted{});
  }

  //! Canonical order: lexicographic on the serialized image array with
  //! undefined (null) before every point.
  inline bool canonical_less(PartialTransformation const& f,
                             PartialTransformation const& g) noexcept {
    if (f.degree() != g.degree()) {
      return f.degree() < g.degree();
    }
    auto key = [](Point y) { return static_cast<int>(y == undefined ? -1 : y); };
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (f[x] != g[x]) {
        return key(f[x]) < key(g[x]);
      }
    }
    return false;
  }

  struct CanonicalLess {
    bool operator()(PartialTransformation const& f,
                    PartialTransformation const& g) const noexcept {
      return canonical_less(f, g);
    }
    bool operator()(PartialInjection const& f,
                    PartialInjection const& g) const noexcept {
      return canonical_less(f.transformation(), g.transformation());
    }
  };

  ////////////////////////////////////////////////////////////////////////
  // Serialization: a JSON array of length n, null for undefined points.
  ////////////////////////////////////////////////////////////////////////

  inline std::string to_json(PartialTransformation const& f) {
    std::string out = "[";
    for (std::size_t x = 0; x < f.degree(); ++x) {
      if (x != 0) {
        out += ',';
      }
      out += f[x] == undefined ? std::string("null") : std::to_string(f[x]);
    }
    out += ']';
    return out;
  }

  inline std::string to_json(PartialInjection const& f) {
    return to_json(f.transformation());
  }

  inline PartialTransformation parse_transformation(std::string_view text) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (nlohmann::json::parse_error const& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
    if (!j.is_array() || j.empty()) {
      throw Error(ErrorCode::ParseError, "expected a non-empty JSON array");
    }
    std::size_t const  n = j.size();
    std::vector<Point> images(n, undefined);
    for (std::size_t x = 0; x < n; ++x) {
      if (j[x].is_null()) {
        continue;
      }
      if (!j[x].is_number_integer()) {
        throw Error(ErrorCode::ParseError, "entries must be integers or null");
      }
      auto y = j[x].get<long long>();
      if (y < 0 || static_cast<std::size_t>(y) >= n) {
        throw Error(ErrorCode::OutOfRange,
                    "image " + std::to_string(y) + " outside degree "
                        + std::to_string(n));
      }
      images[x] = static_cast<Point>(y);
    }
    return PartialTransformation(n, std::move(images));
  }

  inline PartialInjection parse_injection(std::string_view text) {
    return PartialInjection(parse_transformation(text));
  }

  inline std::ostream& operator<<(std::ostream& os,
                                  PartialTransformation const& f) {
    return os << to_json(f);
  }

  inline std::ostream& operator<<(std::ostream& os, PartialInjection const& f) {
    return os << to_json(f);
  }

  ////////////////////////////////////////////////////////////////////////
  // Exhaustive sources
  ////////////////////////////////////////////////////////////////////////

  //! Calls `fn` on each of the (n + 1)^n partial transformations of degree
  //! n, in canonical order.
  template <typename Fn>
  void for_each_partial_transformation(std::size_t degree, Fn&& fn) {
    std::vector<int> digits(degree, -1);
    PartialTransformation f(degree);
    while (true) {
      fn(static_cast<PartialTransformation const&>(f));
      std::size_t x = degree;
      while (x > 0) {
        --x;
        if (digits[x] + 1 < static_cast<int>(degree)) {
          ++digits[x];
          f.set(x, static_cast<Point>(digits[x]));
          break;
        }
        digits[x] = -1;
        f.set(x, undefined);
        if (x == 0) {
          return;
        }
      }
      if (degree == 0) {
        return;
      }
    }
  }

}  // namespace dps

template <>
struct std::hash<dps::PartialTransformation> {
  std::size_t operator()(dps::PartialTransformation const& f) const noexcept {
    std::size_t h = 14695981039346656037ULL;
    for (dps::Point y : f.images()) {
      h = (h ^ y) * 1099511628211ULL;
    }
    return h;
  }
};

template <>
struct std::hash<dps::PartialInjection> {
  std::size_t operator()(dps::PartialInjection const& f) const noexcept {
    return std::hash<dps::PartialTransformation>{}(f.transformation());
  }
};

#endif  // DPS_PARTIAL_MAP_HPP_
