#ifndef DIAGMON_PARTITION_HPP_
#define DIAGMON_PARTITION_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "diagmon/subset.hpp"

namespace diagmon {

  // A set partition of the 2n points {1..n} (upper row) and {1'..n'} (lower
  // row). Internally vertex i in [0, n) is the upper point i+1 and vertex
  // n+i is the lower point (i+1)'. Block ids are assigned in first-occurrence
  // order scanning 1..n then 1'..n', so the encoding is canonical and blocks
  // are numbered by their least vertex.
  class Partition {
   public:
    // The empty diagram of degree 0.
    Partition() = default;

    static Partition identity(std::size_t n);

    // One label per vertex (2n of them); relabelled canonically.
    static Partition from_labels(std::size_t n, std::span<std::uint8_t const> labels);

    // Blocks given with signed 1-based vertices: +i for i, -i for i'. The
    // blocks must be disjoint and cover all 2n vertices; otherwise a
    // ValidationError names the offending vertex.
    static Partition from_blocks(std::size_t n, std::vector<std::vector<int>> const& blocks);

    std::size_t  degree() const noexcept { return degree_; }
    std::size_t  num_blocks() const noexcept { return num_blocks_; }
    std::uint8_t block_of(std::size_t vertex) const noexcept { return labels_[vertex]; }
    std::uint8_t upper(std::size_t i) const noexcept { return labels_[i]; }
    std::uint8_t lower(std::size_t i) const noexcept { return labels_[degree_ + i]; }
    std::span<std::uint8_t const> labels() const noexcept {
      return std::span(labels_.data(), 2 * std::size_t{degree_});
    }

    // Blocks in signed notation, each sorted (upper points first), blocks
    // ordered by least vertex.
    std::vector<std::vector<int>> blocks() const;

    // Compact printable key, e.g. "01|0a" (one base-36 digit per vertex).
    std::string key() const;

    std::size_t hash() const noexcept;

    auto operator<=>(Partition const&) const = default;

   private:
    std::uint8_t                              degree_     = 0;
    std::uint8_t                              num_blocks_ = 0;
    std::array<std::uint8_t, 2 * kMaxDegree> labels_{};
  };

  // Stacking product: blocks of ab are the connected components of the
  // three-row graph of a over b, restricted to the outer rows.
  Partition multiply(Partition const& a, Partition const& b);
  inline Partition operator*(Partition const& a, Partition const& b) {
    return multiply(a, b);
  }

  // Swap the upper and lower rows.
  Partition involute(Partition const& a);

  struct PartitionParams {
    Subset       dom;
    Subset       codom;
    SetPartition ker;
    SetPartition coker;
    std::size_t  rank = 0;
    Subset       supp;
    Subset       cosupp;
  };

  PartitionParams params(Partition const& a);

  // id_A: transversals {a, a'} for a in A, singletons elsewhere.
  Partition id_subset(Subset const& a);
  // id_eps: transversals A u A' for each class A of eps.
  Partition id_equiv(SetPartition const& e);
  // zeta = {X, X'}; for n = 0 the empty diagram.
  Partition zeta(std::size_t n);

  // Every block of a lies inside a block of b.
  bool refines(Partition const& a, Partition const& b);

  bool is_brauer(Partition const& a);
  bool is_partial_brauer(Partition const& a);

  // Kind of each block.
  struct BlockShape {
    bool        upper = false;  // meets the upper row
    bool        lower = false;  // meets the lower row
    std::size_t size  = 0;
  };
  std::vector<BlockShape> block_shapes(Partition const& a);

  // Every partition of degree n, in restricted-growth-string order of the
  // vertex labels.
  std::vector<Partition> all_partitions(std::size_t n);

  // The partition of degree n+1 obtained by adding the block {n+1, (n+1)'}.
  Partition adjoin_fixed_point(Partition const& a);

  struct PartitionHash {
    std::size_t operator()(Partition const& a) const noexcept { return a.hash(); }
  };

}  // namespace diagmon

#endif  // DIAGMON_PARTITION_HPP_
