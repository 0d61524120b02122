#ifndef DIAGMON_GREEN_HPP_
#define DIAGMON_GREEN_HPP_

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "diagmon/bitset.hpp"
#include "diagmon/finite_monoid.hpp"
#include "diagmon/order.hpp"

namespace diagmon {

  // Class ids for one of Green's relations, numbered by least member index,
  // plus the induced preorder on classes: reach[c] holds every class c'
  // with c' <= c.
  struct GreenRelation {
    std::vector<std::uint32_t> class_of;
    std::vector<Bitset>        reach;

    std::size_t num_classes() const noexcept { return reach.size(); }
    bool        related(Index x, Index y) const { return class_of[x] == class_of[y]; }
    bool        leq(Index x, Index y) const { return reach[class_of[y]].test(class_of[x]); }
    std::vector<std::vector<Index>> classes() const;
  };

  struct GreenStructure {
    GreenRelation R, L, J;
    // H and D carry class ids only; no separate preorder.
    std::vector<std::uint32_t> H, D;
    std::size_t                num_h = 0;
    std::size_t                num_d = 0;
    bool                       d_equals_j = false;
  };

  // Green's relations from the one-sided and two-sided Cayley graphs over
  // the generating set: R-classes are strongly connected components of
  // x -> xg, L of x -> gx, J of both; D is the join of R and L.
  GreenStructure green(FiniteMonoid const& s);

  // The minimum J-class, i.e. the minimal ideal.
  std::vector<Index> minimal_ideal(FiniteMonoid const& s, GreenStructure const& g);

  // True iff the principal ideals are totally ordered by inclusion.
  bool ideals_form_chain(GreenStructure const& g);

  struct EggBox {
    struct DClass {
      std::uint32_t                           id = 0;  // D-class id
      std::vector<std::uint32_t>              rows;    // R-class ids
      std::vector<std::uint32_t>              cols;    // L-class ids
      std::vector<std::vector<std::vector<Index>>> cells;  // cells[r][c] = H-class members
      std::vector<std::vector<bool>>          group;   // H-class holds an idempotent
    };
    std::vector<DClass> classes;  // a linear extension of the J-order, bottom first
    // Covering pairs (lower, upper) as positions in `classes`.
    std::vector<std::pair<std::size_t, std::size_t>> hasse;
  };

  EggBox eggbox(FiniteMonoid const& s, GreenStructure const& g);

}  // namespace diagmon

#endif  // DIAGMON_GREEN_HPP_
