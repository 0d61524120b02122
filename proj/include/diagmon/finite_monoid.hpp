#ifndef DIAGMON_FINITE_MONOID_HPP_
#define DIAGMON_FINITE_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "diagmon/element.hpp"

namespace diagmon {

  using Index = std::uint32_t;

  // A finite semigroup given by an explicit list of concrete elements. The
  // elements are indexed 0..m-1 in the order supplied; products are read from
  // an m x m Cayley table when m <= kTableLimit, and otherwise computed on
  // demand and looked up through the element index. Despite the name, an
  // identity is optional: some families (D0, D1, Pfk) are only semigroups.
  //
  // Immutable after construction, so it can be shared between threads.
  class FiniteMonoid {
   public:
    static constexpr std::size_t kTableLimit = 5000;

    FiniteMonoid() = default;

    // Throws ValidationError if the list has duplicates, mixes element kinds
    // or degrees, or is not closed under multiplication. Closure is checked
    // exhaustively when the table is materialised, and on a fixed random
    // sample of pairs otherwise.
    explicit FiniteMonoid(std::vector<Element> elements, std::string name = "");

    std::size_t        size() const noexcept { return elements_.size(); }
    std::string const& name() const noexcept { return name_; }

    std::optional<Index> identity() const noexcept { return identity_; }

    Index mul(Index x, Index y) const {
      if (!table_.empty()) {
        return table_[static_cast<std::size_t>(x) * elements_.size() + y];
      }
      return mul_on_demand(x, y);
    }

    bool has_table() const noexcept { return !table_.empty(); }

    Element const&              element(Index i) const { return elements_[i]; }
    std::vector<Element> const& elements() const noexcept { return elements_; }
    std::optional<Index>        index_of(Element const& e) const;

    // A generating set, chosen greedily from the top of the J-order down.
    std::vector<Index> const& generators() const noexcept { return generators_; }

    // The subsemigroup on the given indices, with elements in the order
    // given. Throws ValidationError if the subset is not closed.
    FiniteMonoid restrict_to(std::span<Index const> subset, std::string name = "") const;

   private:
    Index mul_on_demand(Index x, Index y) const;
    void  build_table();
    void  check_closure_sampled() const;
    void  choose_generators();

    std::string                                     name_;
    std::vector<Element>                            elements_;
    std::unordered_map<Element, Index, ElementHash> index_;
    std::vector<Index>                              table_;
    std::optional<Index>                            identity_;
    std::vector<Index>                              generators_;
  };

  // Breadth-first closure of the generators under multiplication, always
  // including the identity of the common degree. Throws ResourceError when
  // more than cap elements are produced.
  FiniteMonoid closure(std::vector<Element> const& generators,
                       std::size_t                 cap  = 100000,
                       std::string                 name = "");

  // Associativity on all triples (m^3 <= limit) or on `samples` random
  // triples with a fixed seed otherwise.
  bool is_associative(FiniteMonoid const& s, std::size_t samples = 200000);

  // Index-set helpers.
  std::vector<Index> idempotents(FiniteMonoid const& s);
  std::vector<Index> right_zeros(FiniteMonoid const& s);
  std::vector<Index> left_zeros(FiniteMonoid const& s);
  std::optional<Index> zero(FiniteMonoid const& s);
  bool               is_regular(FiniteMonoid const& s);
  // Every element has exactly one inverse a (x = xax and a = axa).
  bool is_inverse(FiniteMonoid const& s);
  bool idempotents_commute(FiniteMonoid const& s);
  bool is_closed(FiniteMonoid const& s, std::span<Index const> subset);
  // {xy : x in a, y in b}, sorted.
  std::vector<Index> set_product(FiniteMonoid const&    s,
                                 std::span<Index const> a,
                                 std::span<Index const> b);

  // True iff f is injective, maps the identity of s to the identity of t (when
  // s has one) and f(xy) = f(x)f(y).
  bool check_embedding(std::span<Index const> f, FiniteMonoid const& s, FiniteMonoid const& t);

  // Worker count from DIAGMON_THREADS; 1 when unset or invalid.
  std::size_t worker_count();

}  // namespace diagmon

#endif  // DIAGMON_FINITE_MONOID_HPP_
