#ifndef DIAGMON_SEMILATTICE_HPP_
#define DIAGMON_SEMILATTICE_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "diagmon/finite_monoid.hpp"

namespace diagmon {

  // A non-empty set of pairwise commuting idempotents of a monoid, closed
  // under the product. Validated on construction; the parent must outlive
  // the semilattice.
  class Semilattice {
   public:
    // Throws ValidationError naming the first offending member or pair.
    Semilattice(FiniteMonoid const& parent, std::vector<Index> members, std::string name = "");

    FiniteMonoid const&       parent() const noexcept { return *parent_; }
    std::vector<Index> const& members() const noexcept { return members_; }  // sorted
    std::size_t               size() const noexcept { return members_.size(); }
    std::string const&        name() const noexcept { return name_; }

    bool contains(Index x) const { return x < position_.size() && position_[x] >= 0; }
    // Position of a member within members(), or -1.
    int position(Index x) const { return x < position_.size() ? position_[x] : -1; }

   private:
    FiniteMonoid const* parent_;
    std::vector<Index>  members_;
    std::vector<int>    position_;
    std::string         name_;
  };

}  // namespace diagmon

#endif  // DIAGMON_SEMILATTICE_HPP_
