#ifndef DIAGMON_SUBSET_HPP_
#define DIAGMON_SUBSET_HPP_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace diagmon {

  // Largest supported n for the point set {1, ..., n}.
  inline constexpr std::size_t kMaxDegree = 16;

  // A subset of {1, ..., n}, stored 0-based as a bit mask.
  class Subset {
   public:
    Subset() = default;
    Subset(std::size_t n, std::uint32_t mask);

    static Subset empty(std::size_t n) { return Subset(n, 0); }
    static Subset full(std::size_t n);
    // Points are 1-based, as in every external format.
    static Subset from_points(std::size_t n, std::span<int const> points);

    std::size_t   degree() const noexcept { return degree_; }
    std::uint32_t mask() const noexcept { return mask_; }
    std::size_t   size() const noexcept;
    bool          contains(std::size_t i) const noexcept {
      return (mask_ >> i) & 1U;
    }
    bool is_subset_of(Subset const& other) const noexcept {
      return (mask_ & ~other.mask_) == 0;
    }
    bool is_full() const noexcept { return *this == full(degree_); }

    // 1-based points in increasing order.
    std::vector<int> points() const;

    auto operator<=>(Subset const&) const = default;

   private:
    std::uint8_t  degree_ = 0;
    std::uint32_t mask_   = 0;
  };

  // An equivalence relation on {1, ..., n}; class ids in first-occurrence
  // order, so equal equivalences have equal encodings.
  class SetPartition {
   public:
    SetPartition() = default;

    // Arbitrary labels, one per point; relabelled canonically.
    static SetPartition from_labels(std::span<std::uint8_t const> labels);
    // Classes as lists of 1-based points; must be disjoint and cover.
    static SetPartition from_classes(std::size_t                          n,
                                     std::vector<std::vector<int>> const& cls);
    static SetPartition discrete(std::size_t n);   // Delta
    static SetPartition universal(std::size_t n);  // nabla

    std::size_t  degree() const noexcept { return degree_; }
    std::size_t  num_classes() const noexcept { return num_classes_; }
    std::uint8_t class_of(std::size_t i) const noexcept { return labels_[i]; }
    bool         related(std::size_t i, std::size_t j) const noexcept {
      return labels_[i] == labels_[j];
    }

    // Classes as sorted lists of 1-based points, ordered by least element.
    std::vector<std::vector<int>> classes() const;

    // Containment as relations: every class of *this lies in a class of
    // other.
    bool is_finer_than(SetPartition const& other) const noexcept;
    bool is_discrete() const noexcept { return num_classes_ == degree_; }
    bool is_universal() const noexcept { return num_classes_ <= 1; }

    auto operator<=>(SetPartition const&) const = default;

   private:
    std::uint8_t                          degree_      = 0;
    std::uint8_t                          num_classes_ = 0;
    std::array<std::uint8_t, kMaxDegree> labels_{};
  };

  // Least equivalence containing both.
  SetPartition join(SetPartition const& a, SetPartition const& b);

  // All subsets of {1..n} in mask order.
  std::vector<Subset> all_subsets(std::size_t n);

  // All equivalences on {1..n}, in restricted-growth-string order.
  std::vector<SetPartition> all_set_partitions(std::size_t n);

  // Calls f(labels) for every restricted growth string of length m, in
  // lexicographic order. The span is only valid during the call.
  void for_each_restricted_growth_string(
      std::size_t                                            m,
      std::function<void(std::span<std::uint8_t const>)> const& f);

}  // namespace diagmon

#endif  // DIAGMON_SUBSET_HPP_
