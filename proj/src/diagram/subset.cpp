#include "diagmon/subset.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {
    void check_degree(std::size_t n) {
      if (n > kMaxDegree) {
        throw DimensionError("degree " + std::to_string(n)
                             + " exceeds the supported maximum "
                             + std::to_string(kMaxDegree));
      }
    }
  }  // namespace

  Subset::Subset(std::size_t n, std::uint32_t mask)
      : degree_(static_cast<std::uint8_t>(n)), mask_(mask) {
    check_degree(n);
    if (n < 32 && (mask >> n) != 0) {
      throw ValidationError("subset mask has points outside {1.."
                            + std::to_string(n) + "}");
    }
  }

  Subset Subset::full(std::size_t n) {
    check_degree(n);
    return Subset(n, n == 0 ? 0 : static_cast<std::uint32_t>((1ULL << n) - 1));
  }

  Subset Subset::from_points(std::size_t n, std::span<int const> points) {
    check_degree(n);
    std::uint32_t mask = 0;
    for (int p : points) {
      if (p < 1 || static_cast<std::size_t>(p) > n) {
        throw ValidationError("point " + std::to_string(p)
                              + " outside {1.." + std::to_string(n) + "}");
      }
      mask |= 1U << (p - 1);
    }
    return Subset(n, mask);
  }

  std::size_t Subset::size() const noexcept {
    return static_cast<std::size_t>(std::popcount(mask_));
  }

  std::vector<int> Subset::points() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < degree_; ++i) {
      if (contains(i)) {
        out.push_back(static_cast<int>(i) + 1);
      }
    }
    return out;
  }

  SetPartition SetPartition::from_labels(std::span<std::uint8_t const> labels) {
    check_degree(labels.size());
    SetPartition                 result;
    std::array<int, 256>         relabel;
    relabel.fill(-1);
    std::uint8_t next = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (relabel[labels[i]] < 0) {
        relabel[labels[i]] = next++;
      }
      result.labels_[i] = static_cast<std::uint8_t>(relabel[labels[i]]);
    }
    result.degree_      = static_cast<std::uint8_t>(labels.size());
    result.num_classes_ = next;
    return result;
  }

  SetPartition SetPartition::from_classes(
      std::size_t                          n,
      std::vector<std::vector<int>> const& cls) {
    check_degree(n);
    std::array<std::uint8_t, kMaxDegree> labels;
    labels.fill(0xFF);
    for (std::size_t c = 0; c < cls.size(); ++c) {
      for (int p : cls[c]) {
        if (p < 1 || static_cast<std::size_t>(p) > n) {
          throw ValidationError("point " + std::to_string(p) + " outside {1.."
                                + std::to_string(n) + "}");
        }
        if (labels[p - 1] != 0xFF) {
          throw ValidationError("point " + std::to_string(p)
                                + " lies in two classes");
        }
        labels[p - 1] = static_cast<std::uint8_t>(c);
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (labels[i] == 0xFF) {
        throw ValidationError("point " + std::to_string(i + 1)
                              + " is not covered");
      }
    }
    return from_labels(std::span(labels.data(), n));
  }

  SetPartition SetPartition::discrete(std::size_t n) {
    check_degree(n);
    std::array<std::uint8_t, kMaxDegree> labels{};
    std::iota(labels.begin(), labels.begin() + n, 0);
    return from_labels(std::span(labels.data(), n));
  }

  SetPartition SetPartition::universal(std::size_t n) {
    check_degree(n);
    std::array<std::uint8_t, kMaxDegree> labels{};
    return from_labels(std::span(labels.data(), n));
  }

  std::vector<std::vector<int>> SetPartition::classes() const {
    std::vector<std::vector<int>> out(num_classes_);
    for (std::size_t i = 0; i < degree_; ++i) {
      out[labels_[i]].push_back(static_cast<int>(i) + 1);
    }
    return out;
  }

  bool SetPartition::is_finer_than(SetPartition const& other) const noexcept {
    std::array<int, kMaxDegree> image;
    image.fill(-1);
    for (std::size_t i = 0; i < degree_; ++i) {
      int& slot = image[labels_[i]];
      if (slot < 0) {
        slot = other.labels_[i];
      } else if (slot != other.labels_[i]) {
        return false;
      }
    }
    return true;
  }

  SetPartition join(SetPartition const& a, SetPartition const& b) {
    if (a.degree() != b.degree()) {
      throw DimensionError("join of equivalences of different degree");
    }
    std::size_t const                    n = a.degree();
    std::array<std::uint8_t, kMaxDegree> parent{};
    std::iota(parent.begin(), parent.begin() + n, 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) {
        x = parent[x] = parent[parent[x]];
      }
      return x;
    };
    std::array<int, kMaxDegree> first_a, first_b;
    first_a.fill(-1);
    first_b.fill(-1);
    for (std::size_t i = 0; i < n; ++i) {
      for (auto [lab, first] : {std::pair{a.class_of(i), &first_a},
                                std::pair{b.class_of(i), &first_b}}) {
        int& f = (*first)[lab];
        if (f < 0) {
          f = static_cast<int>(i);
        } else {
          parent[find(i)] = static_cast<std::uint8_t>(find(f));
        }
      }
    }
    std::array<std::uint8_t, kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = static_cast<std::uint8_t>(find(i));
    }
    return SetPartition::from_labels(std::span(labels.data(), n));
  }

  std::vector<Subset> all_subsets(std::size_t n) {
    check_degree(n);
    std::vector<Subset> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
      out.emplace_back(n, m);
    }
    return out;
  }

  std::vector<SetPartition> all_set_partitions(std::size_t n) {
    std::vector<SetPartition> out;
    for_each_restricted_growth_string(
        n, [&out](std::span<std::uint8_t const> labels) {
          out.push_back(SetPartition::from_labels(labels));
        });
    return out;
  }

  void for_each_restricted_growth_string(
      std::size_t                                               m,
      std::function<void(std::span<std::uint8_t const>)> const& f) {
    std::vector<std::uint8_t> a(m, 0);
    // b[i] = 1 + max(a[0..i-1]) bounds a[i].
    std::vector<std::uint8_t> b(m + 1, 1);
    if (m == 0) {
      f(std::span<std::uint8_t const>());
      return;
    }
    while (true) {
      f(std::span<std::uint8_t const>(a));
      // Advance to the next string in lexicographic order.
      std::size_t i = m - 1;
      while (i > 0 && a[i] == b[i]) {
        --i;
      }
      if (i == 0) {
        return;
      }
      ++a[i];
      for (std::size_t j = i + 1; j < m; ++j) {
        a[j] = 0;
        b[j] = std::max<std::uint8_t>(b[j - 1], a[j - 1] + 1);
      }
    }
  }

}  // namespace diagmon
