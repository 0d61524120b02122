#ifndef DIAGMON_CAT_ALGEBRA_HPP_
#define DIAGMON_CAT_ALGEBRA_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "diagmon/ehresmann.hpp"
#include "diagmon/order.hpp"
#include "diagmon/rational_matrix.hpp"

namespace diagmon {

  // The Ehresmann category C(S, E): objects are the members of E, hom(e, f)
  // holds the x with x+ = e and x* = f, and x.y is defined iff x* = y+.
  class EhresmannCategory {
   public:
    // Throws StateError unless (S, E) satisfies L1, R1, L2 and R2.
    explicit EhresmannCategory(Semilattice const& E);

    Semilattice const&        semilattice() const noexcept { return *E_; }
    std::vector<Index> const& objects() const noexcept { return E_->members(); }
    Index                     source(Index x) const { return plus_[x]; }  // x+
    Index                     target(Index x) const { return star_[x]; }  // x*
    std::vector<Index> const& plus() const noexcept { return plus_; }
    std::vector<Index> const& star() const noexcept { return star_; }

    std::vector<Index> const& hom(Index e, Index f) const;
    // Nonempty hom-sets keyed by (e, f).
    std::map<std::pair<Index, Index>, std::vector<Index>> const& homs() const noexcept {
      return hom_;
    }
    std::optional<Index> compose(Index x, Index y) const;

   private:
    Semilattice const*                                    E_;
    std::vector<Index>                                    plus_, star_;
    std::map<std::pair<Index, Index>, std::vector<Index>> hom_;
  };

  // Every endomorphism monoid hom(e, e) a group; otherwise the least
  // non-invertible endomorphism.
  struct EIResult {
    bool                 holds = true;
    std::optional<Index> witness;
  };
  EIResult is_EI(EhresmannCategory const& c);

  // Finite-dimensional algebra over Q with basis 0..d-1 and sparse
  // structure constants b_i b_j = sum_k c_ijk b_k.
  class RationalAlgebra {
   public:
    using Vector = std::vector<std::pair<Index, Rational>>;  // sorted, no zeros

    explicit RationalAlgebra(std::size_t d) : d_(d), table_(d * d) {}

    // K[S]: b_x b_y = b_xy.
    static RationalAlgebra semigroup_algebra(FiniteMonoid const& s);
    // K[C]: b_x b_y = b_xy if x* = y+, and 0 otherwise.
    static RationalAlgebra category_algebra(EhresmannCategory const& c);

    std::size_t   dimension() const noexcept { return d_; }
    Vector const& product(Index i, Index j) const { return table_[i * d_ + j]; }
    void          set_product(Index i, Index j, Vector v);
    Vector        multiply(Vector const& a, Vector const& b) const;

    // (b_i b_j) b_k = b_i (b_j b_k) on all basis triples.
    bool is_associative() const;

   private:
    std::size_t         d_;
    std::vector<Vector> table_;
  };

  // Largest dimension for which structure constants are materialised.
  inline constexpr std::size_t kAlgebraLimit = 250;

  // dim of {x : tr(L_{xy}) = 0 for all y}, which in characteristic 0 is the
  // Jacobson radical.
  std::size_t radical_dim(RationalAlgebra const& a);

  enum class Side { left, right };

  // The zeta matrix of <=_r (left) or <=_l (right): column x is
  // phi(x) = sum of the a <= x. Throws StateError unless (S, E) is
  // Ehresmann with L3 (left) or R3 (right).
  RationalMatrix stein_transform(Semilattice const& E, Side side);

  // phi(x) phi(y) = phi(xy) in K[C] for all basis pairs (all pairs when
  // |S| <= kAlgebraLimit, otherwise `samples` random ones), together with
  // unitriangularity of the transform.
  struct SteinCheck {
    bool                                   multiplicative = true;
    bool                                   unitriangular  = true;
    std::size_t                            pairs_checked  = 0;
    std::optional<std::pair<Index, Index>> failure;
    bool ok() const { return multiplicative && unitriangular; }
  };
  SteinCheck verify_stein(Semilattice const& E, Side side, std::size_t samples = 100000);

  // The zeta matrix of a finite order, Z(a, x) = 1 iff a <= x.
  RationalMatrix zeta_matrix(PartialOrder const& order);
  // Its inverse, computed by the Moebius recursion along a linear extension.
  RationalMatrix mobius_inverse(PartialOrder const& order);

  // dim K[S] - radical_dim K[S] against |Reg_E(S)|, plus radical_dim of
  // K[Reg_E(S)]. Throws StateError unless (S, E) is restriction on at least
  // one side and C(S, E) is EI.
  struct QuotientCheck {
    std::size_t dimension        = 0;
    std::size_t radical          = 0;
    std::size_t reg_size         = 0;
    std::size_t reg_radical      = 0;
    bool ok() const { return dimension - radical == reg_size && reg_radical == 0; }
  };
  QuotientCheck check_semisimple_quotient(Semilattice const& E);

}  // namespace diagmon

#endif  // DIAGMON_CAT_ALGEBRA_HPP_
