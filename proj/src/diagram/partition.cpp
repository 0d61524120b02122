#include "diagmon/partition.hpp"

#include <algorithm>
#include <numeric>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {
    void check_degree(std::size_t n) {
      if (n > kMaxDegree) {
        throw DimensionError("partition degree " + std::to_string(n)
                             + " exceeds the supported maximum "
                             + std::to_string(kMaxDegree));
      }
    }

    void check_same_degree(Partition const& a, Partition const& b, char const* op) {
      if (a.degree() != b.degree()) {
        throw DimensionError(std::string(op) + ": degree mismatch ("
                             + std::to_string(a.degree()) + " vs "
                             + std::to_string(b.degree()) + ")");
      }
    }

    std::string vertex_name(int v) {
      return v > 0 ? std::to_string(v) : std::to_string(-v) + "'";
    }

    // Union-find over at most 3 * kMaxDegree nodes.
    struct SmallUnionFind {
      std::array<std::uint8_t, 3 * kMaxDegree> parent;

      explicit SmallUnionFind(std::size_t n) {
        std::iota(parent.begin(), parent.begin() + n, 0);
      }
      std::uint8_t find(std::uint8_t x) {
        while (parent[x] != x) {
          x = parent[x] = parent[parent[x]];
        }
        return x;
      }
      void unite(std::uint8_t x, std::uint8_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };
  }  // namespace

  Partition Partition::identity(std::size_t n) {
    check_degree(n);
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = labels[n + i] = static_cast<std::uint8_t>(i);
    }
    return from_labels(n, std::span(labels.data(), 2 * n));
  }

  Partition Partition::from_labels(std::size_t n, std::span<std::uint8_t const> labels) {
    check_degree(n);
    if (labels.size() != 2 * n) {
      throw DimensionError("expected " + std::to_string(2 * n) + " labels, got "
                           + std::to_string(labels.size()));
    }
    Partition            result;
    std::array<int, 256> relabel;
    relabel.fill(-1);
    std::uint8_t next = 0;
    for (std::size_t v = 0; v < labels.size(); ++v) {
      if (relabel[labels[v]] < 0) {
        relabel[labels[v]] = next++;
      }
      result.labels_[v] = static_cast<std::uint8_t>(relabel[labels[v]]);
    }
    result.degree_     = static_cast<std::uint8_t>(n);
    result.num_blocks_ = next;
    return result;
  }

  Partition Partition::from_blocks(std::size_t n, std::vector<std::vector<int>> const& blocks) {
    check_degree(n);
    std::array<std::uint8_t, 2 * kMaxDegree> labels;
    labels.fill(0xFF);
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (blocks[b].empty()) {
        throw ValidationError("empty block at position " + std::to_string(b));
      }
      for (int v : blocks[b]) {
        if (v == 0 || static_cast<std::size_t>(std::abs(v)) > n) {
          throw ValidationError("vertex " + std::to_string(v)
                                + " is not a vertex of degree " + std::to_string(n));
        }
        std::size_t const idx = v > 0 ? v - 1 : n + (-v) - 1;
        if (labels[idx] != 0xFF) {
          throw ValidationError("vertex " + vertex_name(v) + " appears in two blocks");
        }
        labels[idx] = static_cast<std::uint8_t>(b);
      }
    }
    for (std::size_t idx = 0; idx < 2 * n; ++idx) {
      if (labels[idx] == 0xFF) {
        int const v = idx < n ? static_cast<int>(idx) + 1 : -static_cast<int>(idx - n) - 1;
        throw ValidationError("vertex " + vertex_name(v) + " is not covered by any block");
      }
    }
    return from_labels(n, std::span(labels.data(), 2 * n));
  }

  std::vector<std::vector<int>> Partition::blocks() const {
    std::vector<std::vector<int>> out(num_blocks_);
    std::size_t const             n = degree_;
    for (std::size_t v = 0; v < 2 * n; ++v) {
      int const signed_v = v < n ? static_cast<int>(v) + 1 : -static_cast<int>(v - n) - 1;
      out[labels_[v]].push_back(signed_v);
    }
    return out;
  }

  std::string Partition::key() const {
    static constexpr char digits[] = "0123456789abcdefghijklmnopqrstuvwxyz";
    std::string           out;
    for (std::size_t v = 0; v < 2 * std::size_t{degree_}; ++v) {
      if (v == degree_) {
        out.push_back('|');
      }
      std::uint8_t const l = labels_[v];
      out.push_back(l < 36 ? digits[l] : '#');
    }
    return out;
  }

  std::size_t Partition::hash() const noexcept {
    // FNV-1a over the used labels.
    std::size_t h = 1469598103934665603ULL ^ degree_;
    for (std::size_t v = 0; v < 2 * std::size_t{degree_}; ++v) {
      h ^= labels_[v];
      h *= 1099511628211ULL;
    }
    return h;
  }

  Partition multiply(Partition const& a, Partition const& b) {
    check_same_degree(a, b, "multiply");
    std::size_t const n = a.degree();
    // Nodes: top row [0, n), middle row [n, 2n), bottom row [2n, 3n). A
    // vertex v of a is node v; a vertex v of b is node v + n.
    SmallUnionFind                           uf(3 * n);
    std::array<int, 2 * kMaxDegree>          first;
    first.fill(-1);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      int& f = first[a.block_of(v)];
      if (f < 0) {
        f = static_cast<int>(v);
      } else {
        uf.unite(static_cast<std::uint8_t>(f), static_cast<std::uint8_t>(v));
      }
    }
    first.fill(-1);
    for (std::size_t v = 0; v < 2 * n; ++v) {
      int& f = first[b.block_of(v)];
      if (f < 0) {
        f = static_cast<int>(v + n);
      } else {
        uf.unite(static_cast<std::uint8_t>(f), static_cast<std::uint8_t>(v + n));
      }
    }
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]     = uf.find(static_cast<std::uint8_t>(i));
      labels[n + i] = uf.find(static_cast<std::uint8_t>(2 * n + i));
    }
    return Partition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  Partition involute(Partition const& a) {
    std::size_t const                        n = a.degree();
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]     = a.lower(i);
      labels[n + i] = a.upper(i);
    }
    return Partition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  std::vector<BlockShape> block_shapes(Partition const& a) {
    std::vector<BlockShape> shapes(a.num_blocks());
    std::size_t const       n = a.degree();
    for (std::size_t i = 0; i < n; ++i) {
      shapes[a.upper(i)].upper = true;
      ++shapes[a.upper(i)].size;
      shapes[a.lower(i)].lower = true;
      ++shapes[a.lower(i)].size;
    }
    return shapes;
  }

  PartitionParams params(Partition const& a) {
    std::size_t const n      = a.degree();
    auto const        shapes = block_shapes(a);
    std::uint32_t     dom = 0, codom = 0, supp = 0, cosupp = 0;
    for (std::size_t i = 0; i < n; ++i) {
      auto const& up = shapes[a.upper(i)];
      auto const& lo = shapes[a.lower(i)];
      if (up.lower) {
        dom |= 1U << i;
      }
      if (lo.upper) {
        codom |= 1U << i;
      }
      if (up.size > 1) {
        supp |= 1U << i;
      }
      if (lo.size > 1) {
        cosupp |= 1U << i;
      }
    }
    PartitionParams p;
    p.dom    = Subset(n, dom);
    p.codom  = Subset(n, codom);
    p.supp   = Subset(n, supp);
    p.cosupp = Subset(n, cosupp);
    p.ker    = SetPartition::from_labels(a.labels().first(n));
    p.coker  = SetPartition::from_labels(a.labels().subspan(n, n));
    p.rank   = static_cast<std::size_t>(
        std::count_if(shapes.begin(), shapes.end(),
                      [](BlockShape const& s) { return s.upper && s.lower; }));
    return p;
  }

  Partition id_subset(Subset const& sub) {
    std::size_t const                        n = sub.degree();
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]     = static_cast<std::uint8_t>(i);
      labels[n + i] = static_cast<std::uint8_t>(sub.contains(i) ? i : n + i);
    }
    return Partition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  Partition id_equiv(SetPartition const& e) {
    std::size_t const                        n = e.degree();
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[i] = labels[n + i] = e.class_of(i);
    }
    return Partition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  Partition zeta(std::size_t n) {
    check_degree(n);
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    for (std::size_t i = 0; i < n; ++i) {
      labels[n + i] = 1;
    }
    return Partition::from_labels(n, std::span(labels.data(), 2 * n));
  }

  bool refines(Partition const& a, Partition const& b) {
    check_same_degree(a, b, "refines");
    std::array<int, 2 * kMaxDegree> image;
    image.fill(-1);
    for (std::size_t v = 0; v < 2 * a.degree(); ++v) {
      int& slot = image[a.block_of(v)];
      if (slot < 0) {
        slot = b.block_of(v);
      } else if (slot != b.block_of(v)) {
        return false;
      }
    }
    return true;
  }

  bool is_brauer(Partition const& a) {
    auto const shapes = block_shapes(a);
    return std::all_of(shapes.begin(), shapes.end(),
                       [](BlockShape const& s) { return s.size == 2; });
  }

  bool is_partial_brauer(Partition const& a) {
    auto const shapes = block_shapes(a);
    return std::all_of(shapes.begin(), shapes.end(),
                       [](BlockShape const& s) { return s.size <= 2; });
  }

  std::vector<Partition> all_partitions(std::size_t n) {
    check_degree(n);
    std::vector<Partition> out;
    for_each_restricted_growth_string(2 * n, [&](std::span<std::uint8_t const> labels) {
      out.push_back(Partition::from_labels(n, labels));
    });
    return out;
  }

  Partition adjoin_fixed_point(Partition const& a) {
    std::size_t const n = a.degree();
    check_degree(n + 1);
    std::array<std::uint8_t, 2 * kMaxDegree> labels{};
    auto const                               fresh = static_cast<std::uint8_t>(a.num_blocks());
    for (std::size_t i = 0; i < n; ++i) {
      labels[i]         = a.upper(i);
      labels[n + 1 + i] = a.lower(i);
    }
    labels[n]         = fresh;
    labels[2 * n + 1] = fresh;
    return Partition::from_labels(n + 1, std::span(labels.data(), 2 * n + 2));
  }

}  // namespace diagmon
