#ifndef DIAGMON_EHRESMANN_HPP_
#define DIAGMON_EHRESMANN_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "diagmon/finite_monoid.hpp"
#include "diagmon/green.hpp"
#include "diagmon/json_io.hpp"
#include "diagmon/order.hpp"
#include "diagmon/semilattice.hpp"

namespace diagmon {

  // E_L(x) = {e in E : ex = x} and E_R(x) = {e in E : xe = x}, sorted.
  std::vector<Index> e_left(Semilattice const& E, Index x);
  std::vector<Index> e_right(Semilattice const& E, Index x);

  enum class Tilde { R, L, H };

  // x R~ y iff E_L(x) = E_L(y); x L~ y iff E_R(x) = E_R(y); H~ is their
  // intersection. Class ids are numbered by least member.
  struct TildeClasses {
    std::vector<std::uint32_t> class_of;
    std::size_t                count = 0;

    std::vector<Index> members(std::uint32_t c) const;
  };

  TildeClasses tilde_classes(Semilattice const& E, Tilde kind);

  // L1/R1: every R~ (L~) class holds exactly one element of E.
  // L2/R2: R~ is a left congruence, L~ a right congruence.
  // L3/R3: xE is contained in Ex (resp. Ex in xE) for every x.
  enum class Axiom { L1, R1, L2, R2, L3, R3 };
  inline constexpr std::array<Axiom, 6> kAllAxioms{Axiom::L1, Axiom::R1, Axiom::L2,
                                                   Axiom::R2, Axiom::L3, Axiom::R3};
  std::string_view axiom_name(Axiom a);

  // Which multipliers theta the congruence sweeps for L2/R2 range over.
  // Automatic means every element when |S| <= kExhaustiveSweepLimit and the
  // generating set otherwise; compatibility with generators implies
  // compatibility with all products of them.
  enum class SweepPolicy { automatic, exhaustive, generators };
  enum class Sweep { exhaustive, generators };
  inline constexpr std::size_t kExhaustiveSweepLimit = 1000;

  // A failing axiom carries the lexicographically least witness:
  //   L1/R1: the least member of the least bad class, then the E-members of
  //          that class (none, or at least two);
  //   L2:    (theta, a, b) with a R~ b, a < b, and theta a, theta b not R~;
  //   R2:    (theta, a, b) with a L~ b and a theta, b theta not L~;
  //   L3:    (x, e) with xe outside Ex;  R3: (x, e) with ex outside xE.
  struct AxiomResult {
    bool               holds = true;
    std::vector<Index> witness;
  };

  struct EhresmannReport {
    std::array<AxiomResult, 6> axioms;
    Sweep                      sweep = Sweep::exhaustive;
    std::size_t                r_classes = 0;
    std::size_t                l_classes = 0;
    std::size_t                h_classes = 0;
    // x -> x+ and x -> x*, present iff L1 (resp. R1) holds.
    std::optional<std::vector<Index>> plus;
    std::optional<std::vector<Index>> star;

    AxiomResult const& operator[](Axiom a) const { return axioms[static_cast<std::size_t>(a)]; }
    AxiomResult&       operator[](Axiom a) { return axioms[static_cast<std::size_t>(a)]; }
    bool               holds(Axiom a) const { return (*this)[a].holds; }
    bool               is_ehresmann() const {
      return holds(Axiom::L1) && holds(Axiom::R1) && holds(Axiom::L2) && holds(Axiom::R2);
    }
  };

  EhresmannReport check_axioms(Semilattice const& E, SweepPolicy policy = SweepPolicy::automatic);

  // {"axioms": {name: bool}, "plus", "star" (index arrays or null),
  //  "sweep", "tilde_class_counts": {"H", "L", "R"},
  //  "witness_elements": {name: [element]}, "witnesses": {name: [index]}},
  // witnesses listed for failing axioms only.
  Json to_json(EhresmannReport const& r, Semilattice const& E);

  // Re-checks a stored witness: true iff it demonstrates that the axiom
  // fails.
  bool witness_refutes(Semilattice const& E, Axiom a, std::vector<Index> const& witness);

  // x+ and x*; throws StateError unless L1 and R1 hold.
  struct PlusStar {
    std::vector<Index> plus;
    std::vector<Index> star;
  };
  PlusStar plus_star(Semilattice const& E);

  // Rest_L = {x : xE in Ex}, Rest_R = {x : Ex in xE}, and their intersection.
  struct RestSets {
    std::vector<Index> left, right, both;
    bool               left_closed = false, right_closed = false, both_closed = false;
    bool               contain_E = false;
  };
  RestSets rest_subsemigroups(Semilattice const& E);

  // E-regular elements: x R e and x L f for some e, f in E (Green's R, L).
  std::vector<Index> reg_E(Semilattice const& E, GreenStructure const& g);

  struct TildeHClass {
    std::vector<Index>                   members;
    bool                                 closed = true;
    std::optional<std::pair<Index, Index>> witness;  // least (a, b) with ab outside
  };
  // Throws ValidationError if e is not in E.
  TildeHClass tilde_H_class(Semilattice const& E, Index e);

  // x <=_r y iff x in Ey; x <=_l y iff x in yE.
  PartialOrder leq_r(Semilattice const& E);
  PartialOrder leq_l(Semilattice const& E);

}  // namespace diagmon

#endif  // DIAGMON_EHRESMANN_HPP_
