#ifndef DIAGMON_ELEMENT_HPP_
#define DIAGMON_ELEMENT_HPP_

#include <cstddef>
#include <variant>

#include "diagmon/partition.hpp"
#include "diagmon/relation.hpp"

namespace diagmon {

  // The concrete element types a FiniteMonoid can decode to.
  using Element = std::variant<Partition, BinaryRelation>;

  // Throws DimensionError if the kinds or degrees differ.
  Element     multiply(Element const& a, Element const& b);
  Element     identity_like(Element const& a);
  Element     involute(Element const& a);  // converse for relations
  std::size_t degree_of(Element const& a);

  struct ElementHash {
    std::size_t operator()(Element const& a) const noexcept {
      return std::visit([](auto const& x) { return x.hash(); }, a) ^ a.index();
    }
  };

}  // namespace diagmon

#endif  // DIAGMON_ELEMENT_HPP_
