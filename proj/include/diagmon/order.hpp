#ifndef DIAGMON_ORDER_HPP_
#define DIAGMON_ORDER_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "diagmon/bitset.hpp"

namespace diagmon {

  // A binary relation on {0..n-1} stored as down-sets: below(y) holds every
  // x with x <= y. Used for the natural partial orders and Green preorders.
  class PartialOrder {
   public:
    PartialOrder() = default;
    explicit PartialOrder(std::size_t n) : below_(n, Bitset(n)) {}

    std::size_t size() const noexcept { return below_.size(); }

    void set(std::size_t x, std::size_t y) { below_[y].set(x); }
    bool leq(std::size_t x, std::size_t y) const { return below_[y].test(x); }

    Bitset const& below(std::size_t y) const { return below_[y]; }

    bool is_reflexive() const;
    bool is_antisymmetric() const;
    bool is_transitive() const;
    bool is_partial_order() const {
      return is_reflexive() && is_antisymmetric() && is_transitive();
    }
    // Every pair comparable.
    bool is_chain() const;

    // Elements listed so that x precedes y whenever x < y; ties broken by
    // index. Requires a partial order.
    std::vector<std::size_t> linear_extension() const;

    // Covering pairs (x, y): x < y with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covers() const;

    bool operator==(PartialOrder const&) const = default;

   private:
    std::vector<Bitset> below_;
  };

}  // namespace diagmon

#endif  // DIAGMON_ORDER_HPP_
