#ifndef DIAGMON_ZOO_HPP_
#define DIAGMON_ZOO_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "diagmon/finite_monoid.hpp"
#include "diagmon/semilattice.hpp"

namespace diagmon {

  // Named diagram monoids and semigroups.
  //
  // Partition families (subsets of P_n):
  //   P     all partitions            B     Brauer          PB   partial Brauer
  //   J     dom = codom = X           IP    ker = coker = Delta
  //   TP    dom = X, coker = Delta    Pfd   dom = X         Pfcd codom = X
  //   RR    dom = X or ker universal  LL    codom = X or coker universal
  //   D0    dom empty, ker universal  D1    dom = X, rank 1  Pfk  D0 u D1
  // Rook families, stored inside P_{n+1} with n+1 playing infinity:
  //   RP    n+1 and (n+1)' share a block      RJ   RP n J_{n+1}
  // Relation families (subsets of B_n):
  //   BX    all relations   PT  partial functions   T  total functions
  //   I     partial bijections
  enum class Family { P, B, PB, J, IP, TP, Pfd, Pfcd, RR, LL, D0, D1, Pfk, RP, RJ, BX, PT, T, I };

  std::string_view family_tag(Family f);
  bool             is_relation_family(Family f);
  bool             is_rook_family(Family f);
  // Largest supported n.
  std::size_t family_cap(Family f);

  struct FamilySpec {
    Family      family = Family::P;
    std::size_t n      = 0;

    // Grammar <tag><n>, e.g. "P3", "RR4", "D02" (D0 with n = 2). The
    // longest matching tag wins. Throws ValidationError on unknown names and
    // ResourceError when n exceeds the family cap.
    static FamilySpec parse(std::string_view text);
    std::string       name() const;  // the canonical spelling
    bool              operator==(FamilySpec const&) const = default;
  };

  std::vector<FamilySpec> all_family_specs(std::size_t nmax);

  // Membership test on concrete elements of the ambient degree (n for
  // partition and relation families, n+1 for rook families).
  bool in_family(FamilySpec const& spec, Element const& x);

  // Filters the ambient universe by in_family, then builds the table.
  FiniteMonoid build(FamilySpec const& spec);

  // Built monoids are cached for the life of the process (thread-safe).
  FiniteMonoid const& cached_build(FamilySpec const& spec);

  enum class SemilatticeKind { E_of_I, F_of_J, G_rook };
  // "E", "F", "G" (or the long names); throws ValidationError otherwise.
  SemilatticeKind parse_semilattice_kind(std::string_view text);
  std::string_view semilattice_name(SemilatticeKind k);

  // Elements of the semilattice in the ambient degree of the family:
  //   E_of_I: id_A for A inside {1..n};  F_of_J: id_eps for eps on {1..n};
  //   G_rook: id_eps for eps on {1..n+1} (rook families only).
  // For rook families E_of_I and F_of_J carry the extra block {n+1, (n+1)'}.
  std::vector<Element> semilattice_elements(FamilySpec const& spec, SemilatticeKind kind);

  // The semilattice inside `parent`, which must be build(spec). Throws
  // ValidationError if a member is missing from the parent.
  Semilattice make_semilattice(FiniteMonoid const& parent, FamilySpec const& spec,
                               SemilatticeKind kind);

  // A rook diagram of degree n given by its ordinary blocks (signed
  // vertices in {1..n} u {1'..n'}) and its rook dots, placed into P_{n+1}
  // with the dots joining the block of n+1 and (n+1)'.
  Partition rook_embed(std::size_t n, std::vector<std::vector<int>> const& blocks,
                       std::vector<int> const& rook_dots);

  // Index maps for P_n -> RP_n (adjoin the block {inf, inf'}) and
  // RP_n -> P_{n+1} (inclusion), into the cached builds.
  struct Tower {
    std::vector<Index> p_to_rp;
    std::vector<Index> rp_to_p;
  };
  Tower tower_maps(std::size_t n);

  // Fixed elements used by the verification suites.
  struct WitnessSets {
    Partition alpha6, beta6;                 // the worked example in P_6
    Partition not_e_alpha, not_e_beta, not_e_theta;  // P_2: R~_E is not a left congruence
    Partition rook_alpha, rook_beta, rook_theta;     // RP_2 inside P_3: R~_F fails likewise
    Partition h_alpha, h_beta;               // P_3: H~_E class of id not closed
  };
  WitnessSets const& witness_sets();

  // id_nabla: the single-class projection.
  Partition id_nabla(std::size_t n);

}  // namespace diagmon

#endif  // DIAGMON_ZOO_HPP_
