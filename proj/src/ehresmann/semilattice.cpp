#include "diagmon/semilattice.hpp"

#include <algorithm>

#include "diagmon/errors.hpp"

namespace diagmon {

  Semilattice::Semilattice(FiniteMonoid const& parent, std::vector<Index> members, std::string name)
      : parent_(&parent), members_(std::move(members)), name_(std::move(name)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    if (members_.empty()) {
      throw ValidationError("a semilattice needs at least one element");
    }
    position_.assign(parent.size(), -1);
    for (std::size_t k = 0; k < members_.size(); ++k) {
      Index const e = members_[k];
      if (e >= parent.size()) {
        throw ValidationError("semilattice member " + std::to_string(e) + " is out of range");
      }
      if (parent.mul(e, e) != e) {
        throw ValidationError("semilattice member " + std::to_string(e) + " is not idempotent");
      }
      position_[e] = static_cast<int>(k);
    }
    for (Index e : members_) {
      for (Index f : members_) {
        Index const ef = parent.mul(e, f);
        if (ef != parent.mul(f, e)) {
          throw ValidationError("semilattice members " + std::to_string(e) + " and "
                                + std::to_string(f) + " do not commute");
        }
        if (position_[ef] < 0) {
          throw ValidationError("semilattice is not closed: product of " + std::to_string(e)
                                + " and " + std::to_string(f) + " is outside it");
        }
      }
    }
  }

}  // namespace diagmon
