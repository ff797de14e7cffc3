#ifndef DPS_ELEMENT_TABLE_HPP_
#define DPS_ELEMENT_TABLE_HPP_

// A finite monoid of partial injections given by its element list, with an
// index lookup and a dense Cayley table. Used by the exhaustive kernels
// (Green's relations, generating-set search).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "dps/error.hpp"
#include "dps/partial_map.hpp"

namespace dps {

  class ElementTable {
   public:
    using index_type = std::uint32_t;

    explicit ElementTable(std::vector<PartialInjection> elements)
        : _elements(std::move(elements)) {
      _index.reserve(_elements.size());
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        _index.emplace(_elements[i], static_cast<index_type>(i));
      }
      if (_index.size() != _elements.size()) {
        throw Error(ErrorCode::InvalidElement, "duplicate elements");
      }
      std::size_t const N = _elements.size();
      _products.resize(N * N);
      for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
          auto it = _index.find(_elements[i] * _elements[j]);
          if (it == _index.end()) {
            throw Error(ErrorCode::InvalidElement,
                        "element set is not closed under composition");
          }
          _products[i * N + j] = it->second;
        }
      }
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    PartialInjection const& operator[](std::size_t i) const noexcept {
      return _elements[i];
    }

    std::vector<PartialInjection> const& elements() const noexcept {
      return _elements;
    }

    std::optional<index_type> index_of(PartialInjection const& f) const {
      auto it = _index.find(f);
      if (it == _index.end()) {
        return std::nullopt;
      }
      return it->second;
    }

    index_type product(std::size_t i, std::size_t j) const noexcept {
      return _products[i * _elements.size() + j];
    }

   private:
    std::vector<PartialInjection>                         _elements;
    std::unordered_map<PartialInjection, index_type>      _index;
    std::vector<index_type>                               _products;
  };

}  // namespace dps

#endif  // DPS_ELEMENT_TABLE_HPP_
