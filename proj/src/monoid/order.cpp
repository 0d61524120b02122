#include "diagmon/order.hpp"

#include <functional>
#include <queue>

#include "diagmon/errors.hpp"

namespace diagmon {

  bool PartialOrder::is_reflexive() const {
    for (std::size_t x = 0; x < size(); ++x) {
      if (!leq(x, x)) {
        return false;
      }
    }
    return true;
  }

  bool PartialOrder::is_antisymmetric() const {
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (leq(x, y) && leq(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  bool PartialOrder::is_transitive() const {
    // x <= y implies below(x) is contained in below(y).
    for (std::size_t y = 0; y < size(); ++y) {
      for (std::size_t x = 0; x < size(); ++x) {
        if (leq(x, y) && !below_[x].is_subset_of(below_[y])) {
          return false;
        }
      }
    }
    return true;
  }

  bool PartialOrder::is_chain() const {
    for (std::size_t x = 0; x < size(); ++x) {
      for (std::size_t y = x + 1; y < size(); ++y) {
        if (!leq(x, y) && !leq(y, x)) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<std::size_t> PartialOrder::linear_extension() const {
    std::size_t const        n = size();
    std::vector<std::size_t> pending(n, 0);
    for (std::size_t y = 0; y < n; ++y) {
      pending[y] = below_[y].count() - (leq(y, y) ? 1 : 0);
    }
    std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> ready;
    for (std::size_t y = 0; y < n; ++y) {
      if (pending[y] == 0) {
        ready.push(y);
      }
    }
    std::vector<std::size_t> out;
    out.reserve(n);
    while (!ready.empty()) {
      std::size_t const x = ready.top();
      ready.pop();
      out.push_back(x);
      for (std::size_t y = 0; y < n; ++y) {
        if (y != x && leq(x, y) && --pending[y] == 0) {
          ready.push(y);
        }
      }
    }
    if (out.size() != n) {
      throw StateError("linear_extension: relation has a cycle");
    }
    return out;
  }

  std::vector<std::pair<std::size_t, std::size_t>> PartialOrder::covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    std::size_t const                                n = size();
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t x = 0; x < n; ++x) {
        if (x == y || !leq(x, y)) {
          continue;
        }
        bool between = false;
        for (std::size_t z = 0; z < n && !between; ++z) {
          between = z != x && z != y && leq(x, z) && leq(z, y);
        }
        if (!between) {
          out.emplace_back(x, y);
        }
      }
    }
    return out;
  }

}  // namespace diagmon
