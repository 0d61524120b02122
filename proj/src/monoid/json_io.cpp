#include "diagmon/json_io.hpp"

#include <cstdio>

#include "diagmon/errors.hpp"

namespace diagmon {

  Json to_json(Partition const& a) {
    return Json{{"n", a.degree()}, {"blocks", a.blocks()}};
  }

  Json to_json(BinaryRelation const& a) {
    Json pairs = Json::array();
    for (auto [x, y] : a.pairs()) {
      pairs.push_back({x, y});
    }
    return Json{{"n", a.degree()}, {"pairs", pairs}};
  }

  Json to_json(Element const& a) {
    return std::visit([](auto const& x) { return to_json(x); }, a);
  }

  Element element_from_json(Json const& j) {
    try {
      if (!j.is_object() || !j.contains("n")) {
        throw ValidationError("element JSON needs an object with key \"n\"");
      }
      auto const n = j.at("n").get<std::size_t>();
      if (j.contains("blocks")) {
        return Partition::from_blocks(n, j.at("blocks").get<std::vector<std::vector<int>>>());
      }
      if (j.contains("pairs")) {
        return BinaryRelation::from_pairs(
            n, j.at("pairs").get<std::vector<std::pair<int, int>>>());
      }
      throw ValidationError("element JSON needs \"blocks\" or \"pairs\"");
    } catch (Json::exception const& e) {
      throw ValidationError(std::string("malformed element JSON: ") + e.what());
    }
  }

  Json monoid_to_json(FiniteMonoid const& s) {
    Json elements = Json::array();
    for (auto const& e : s.elements()) {
      elements.push_back(to_json(e));
    }
    std::vector<Index> mul;
    mul.reserve(s.size() * s.size());
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        mul.push_back(s.mul(x, y));
      }
    }
    Json out;
    out["size"]     = s.size();
    out["identity"] = s.identity() ? Json(*s.identity()) : Json(nullptr);
    out["mul"]      = mul;
    out["elements"] = std::move(elements);
    return out;
  }

  std::string element_key(Element const& a) {
    if (auto const* p = std::get_if<Partition>(&a)) {
      return p->key();
    }
    auto const& r = std::get<BinaryRelation>(a);
    std::string out;
    for (std::size_t x = 0; x < r.degree(); ++x) {
      char buf[8];
      std::snprintf(buf, sizeof buf, "%x", static_cast<unsigned>(r.row(x)));
      if (x > 0) {
        out += '.';
      }
      out += buf;
    }
    return out;
  }

}  // namespace diagmon
