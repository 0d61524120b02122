#ifndef DIAGMON_JSON_IO_HPP_
#define DIAGMON_JSON_IO_HPP_

#include <string>

#include "json.hpp"

#include "diagmon/element.hpp"
#include "diagmon/finite_monoid.hpp"

namespace diagmon {

  using Json = nlohmann::json;

  // {"n": n, "blocks": [[+i | -i, ...], ...]}, blocks by least vertex.
  Json to_json(Partition const& a);
  // {"n": n, "pairs": [[x, y], ...]}, pairs sorted.
  Json to_json(BinaryRelation const& a);
  Json to_json(Element const& a);

  // Accepts either encoding; throws ValidationError on malformed input.
  Element element_from_json(Json const& j);

  // {"elements", "identity" (index or null), "mul" (row-major), "size"}.
  Json monoid_to_json(FiniteMonoid const& s);

  // Short printable name: Partition::key() for partitions, and for relations
  // one hex digit group per row joined by '.'.
  std::string element_key(Element const& a);

}  // namespace diagmon

#endif  // DIAGMON_JSON_IO_HPP_
