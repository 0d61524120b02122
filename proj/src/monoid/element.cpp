#include "diagmon/element.hpp"

#include "diagmon/errors.hpp"

namespace diagmon {

  Element multiply(Element const& a, Element const& b) {
    if (a.index() != b.index()) {
      throw DimensionError("cannot multiply a partition by a relation");
    }
    if (auto const* p = std::get_if<Partition>(&a)) {
      return multiply(*p, std::get<Partition>(b));
    }
    return compose(std::get<BinaryRelation>(a), std::get<BinaryRelation>(b));
  }

  Element identity_like(Element const& a) {
    if (auto const* p = std::get_if<Partition>(&a)) {
      return Partition::identity(p->degree());
    }
    return BinaryRelation::identity(std::get<BinaryRelation>(a).degree());
  }

  Element involute(Element const& a) {
    if (auto const* p = std::get_if<Partition>(&a)) {
      return involute(*p);
    }
    return converse(std::get<BinaryRelation>(a));
  }

  std::size_t degree_of(Element const& a) {
    return std::visit([](auto const& x) { return x.degree(); }, a);
  }

}  // namespace diagmon
