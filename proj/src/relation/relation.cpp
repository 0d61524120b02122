#include "diagmon/relation.hpp"

#include <bit>
#include <string>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {
    void check_degree(std::size_t n) {
      if (n > kMaxDegree) {
        throw DimensionError("relation degree " + std::to_string(n)
                             + " exceeds the supported maximum "
                             + std::to_string(kMaxDegree));
      }
    }
  }  // namespace

  BinaryRelation::BinaryRelation(std::size_t n) : degree_(static_cast<std::uint8_t>(n)) {
    check_degree(n);
  }

  BinaryRelation BinaryRelation::identity(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.insert(i, i);
    }
    return r;
  }

  BinaryRelation BinaryRelation::full(std::size_t n) {
    BinaryRelation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.rows_[i] = static_cast<std::uint16_t>((1U << n) - 1);
    }
    return r;
  }

  BinaryRelation BinaryRelation::from_pairs(std::size_t                             n,
                                            std::vector<std::pair<int, int>> const& pairs) {
    BinaryRelation r(n);
    for (auto [x, y] : pairs) {
      if (x < 1 || y < 1 || static_cast<std::size_t>(x) > n
          || static_cast<std::size_t>(y) > n) {
        throw ValidationError("pair (" + std::to_string(x) + "," + std::to_string(y)
                              + ") outside {1.." + std::to_string(n) + "}^2");
      }
      r.insert(x - 1, y - 1);
    }
    return r;
  }

  BinaryRelation BinaryRelation::from_code(std::size_t n, std::uint64_t code) {
    if (n * n > 64) {
      throw DimensionError("relation codes are limited to n <= 8");
    }
    BinaryRelation r(n);
    for (std::size_t x = 0; x < n; ++x) {
      r.rows_[x] = static_cast<std::uint16_t>((code >> (x * n)) & ((1U << n) - 1));
    }
    return r;
  }

  std::size_t BinaryRelation::size() const noexcept {
    std::size_t c = 0;
    for (std::size_t x = 0; x < degree_; ++x) {
      c += static_cast<std::size_t>(std::popcount(rows_[x]));
    }
    return c;
  }

  std::vector<std::pair<int, int>> BinaryRelation::pairs() const {
    std::vector<std::pair<int, int>> out;
    for (std::size_t x = 0; x < degree_; ++x) {
      for (std::size_t y = 0; y < degree_; ++y) {
        if (contains(x, y)) {
          out.emplace_back(static_cast<int>(x) + 1, static_cast<int>(y) + 1);
        }
      }
    }
    return out;
  }

  std::size_t BinaryRelation::hash() const noexcept {
    std::size_t h = 1469598103934665603ULL ^ (std::size_t{degree_} << 32);
    for (std::size_t x = 0; x < degree_; ++x) {
      h ^= rows_[x];
      h *= 1099511628211ULL;
    }
    return h;
  }

  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b) {
    if (a.degree() != b.degree()) {
      throw DimensionError("compose: degree mismatch (" + std::to_string(a.degree()) + " vs "
                           + std::to_string(b.degree()) + ")");
    }
    std::size_t const n = a.degree();
    BinaryRelation    r(n);
    for (std::size_t x = 0; x < n; ++x) {
      std::uint16_t row = 0;
      for (std::uint16_t mid = a.row(x); mid != 0; mid &= mid - 1) {
        row |= b.row(static_cast<std::size_t>(std::countr_zero(mid)));
      }
      for (std::size_t y = 0; y < n; ++y) {
        if ((row >> y) & 1U) {
          r.insert(x, y);
        }
      }
    }
    return r;
  }

  BinaryRelation converse(BinaryRelation const& a) {
    std::size_t const n = a.degree();
    BinaryRelation    r(n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (a.contains(x, y)) {
          r.insert(y, x);
        }
      }
    }
    return r;
  }

  BinaryRelation relation_identity(Subset const& a) {
    BinaryRelation r(a.degree());
    for (std::size_t i = 0; i < a.degree(); ++i) {
      if (a.contains(i)) {
        r.insert(i, i);
      }
    }
    return r;
  }

  RelationParams rel_params(BinaryRelation const& a) {
    std::size_t const n     = a.degree();
    std::uint32_t     dom   = 0;
    std::uint32_t     codom = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (a.row(x) != 0) {
        dom |= 1U << x;
      }
      codom |= a.row(x);
    }
    auto const conv = converse(a);
    return RelationParams{Subset(n, dom), Subset(n, codom), compose(a, conv), compose(conv, a)};
  }

  RelationPredicates predicates(BinaryRelation const& a) {
    auto const p = rel_params(a);
    return RelationPredicates{
        .injective    = p.ker == relation_identity(p.dom),
        .coinjective  = p.coker == relation_identity(p.codom),
        .surjective   = p.codom.is_full(),
        .cosurjective = p.dom.is_full(),
    };
  }

  std::vector<BinaryRelation> all_relations(std::size_t n) {
    if (n * n > 24) {
      throw ResourceError("enumerating all relations is capped at n <= 4");
    }
    std::vector<BinaryRelation> out;
    std::uint64_t const         count = std::uint64_t{1} << (n * n);
    out.reserve(count);
    for (std::uint64_t c = 0; c < count; ++c) {
      out.push_back(BinaryRelation::from_code(n, c));
    }
    return out;
  }

}  // namespace diagmon
