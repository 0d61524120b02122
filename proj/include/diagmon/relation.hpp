#ifndef DIAGMON_RELATION_HPP_
#define DIAGMON_RELATION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "diagmon/subset.hpp"

namespace diagmon {

  // A binary relation on {1..n}, stored as packed rows: bit y of row x is set
  // iff (x+1, y+1) is in the relation.
  class BinaryRelation {
   public:
    BinaryRelation() = default;
    explicit BinaryRelation(std::size_t n);  // the empty relation

    static BinaryRelation identity(std::size_t n);
    static BinaryRelation full(std::size_t n);
    // Pairs are 1-based.
    static BinaryRelation from_pairs(std::size_t n, std::vector<std::pair<int, int>> const& pairs);
    // Row-major bit k = x * n + y; the enumeration order of all_relations.
    static BinaryRelation from_code(std::size_t n, std::uint64_t code);

    std::size_t   degree() const noexcept { return degree_; }
    std::uint16_t row(std::size_t x) const noexcept { return rows_[x]; }
    bool          contains(std::size_t x, std::size_t y) const noexcept {
      return (rows_[x] >> y) & 1U;
    }
    void insert(std::size_t x, std::size_t y) noexcept {
      rows_[x] = static_cast<std::uint16_t>(rows_[x] | (1U << y));
    }
    std::size_t size() const noexcept;

    // 1-based pairs in lexicographic order.
    std::vector<std::pair<int, int>> pairs() const;

    std::size_t hash() const noexcept;

    auto operator<=>(BinaryRelation const&) const = default;

   private:
    std::uint8_t                           degree_ = 0;
    std::array<std::uint16_t, kMaxDegree> rows_{};
  };

  BinaryRelation compose(BinaryRelation const& a, BinaryRelation const& b);
  inline BinaryRelation operator*(BinaryRelation const& a, BinaryRelation const& b) {
    return compose(a, b);
  }
  BinaryRelation converse(BinaryRelation const& a);

  // id_A = {(a, a) : a in A}.
  BinaryRelation relation_identity(Subset const& a);

  // ker and coker are reflexive and symmetric on dom/codom, but need not be
  // transitive, so they stay relations.
  struct RelationParams {
    Subset         dom;
    Subset         codom;
    BinaryRelation ker;
    BinaryRelation coker;
  };
  RelationParams rel_params(BinaryRelation const& a);

  struct RelationPredicates {
    bool injective    = false;
    bool coinjective  = false;
    bool surjective   = false;
    bool cosurjective = false;
  };
  RelationPredicates predicates(BinaryRelation const& a);

  // All 2^(n^2) relations in code order.
  std::vector<BinaryRelation> all_relations(std::size_t n);

  struct RelationHash {
    std::size_t operator()(BinaryRelation const& a) const noexcept { return a.hash(); }
  };

}  // namespace diagmon

#endif  // DIAGMON_RELATION_HPP_
