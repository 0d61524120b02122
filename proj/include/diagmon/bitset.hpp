#ifndef DIAGMON_BITSET_HPP_
#define DIAGMON_BITSET_HPP_

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace diagmon {

  // Fixed-length dynamic bitset; just enough for reachability closures and
  // order relations over a few thousand elements.
  class Bitset {
   public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    void set(std::size_t i) noexcept { words_[i >> 6] |= word(1) << (i & 63); }
    void reset(std::size_t i) noexcept {
      words_[i >> 6] &= ~(word(1) << (i & 63));
    }
    bool test(std::size_t i) const noexcept {
      return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    Bitset& operator|=(Bitset const& other) noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        words_[k] |= other.words_[k];
      }
      return *this;
    }

    std::size_t count() const noexcept {
      std::size_t c = 0;
      for (auto w : words_) {
        c += static_cast<std::size_t>(std::popcount(w));
      }
      return c;
    }

    // True iff every bit of *this is also set in other.
    bool is_subset_of(Bitset const& other) const noexcept {
      for (std::size_t k = 0; k < words_.size(); ++k) {
        if ((words_[k] & ~other.words_[k]) != 0) {
          return false;
        }
      }
      return true;
    }

    bool operator==(Bitset const&) const = default;

   private:
    using word = std::uint64_t;
    std::size_t       size_ = 0;
    std::vector<word> words_;
  };

}  // namespace diagmon

#endif  // DIAGMON_BITSET_HPP_
