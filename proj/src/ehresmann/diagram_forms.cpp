#include "diagmon/diagram_forms.hpp"

#include <algorithm>

namespace diagmon {

  namespace {

    std::vector<Partition> projections_above(Subset const& lower) {
      std::vector<Partition> out;
      for (auto const& s : all_subsets(lower.degree())) {
        if (lower.is_subset_of(s)) {
          out.push_back(id_subset(s));
        }
      }
      return out;
    }

    std::vector<Partition> projections_below(SetPartition const& upper) {
      std::vector<Partition> out;
      for (auto const& e : all_set_partitions(upper.degree())) {
        if (e.is_finer_than(upper)) {
          out.push_back(id_equiv(e));
        }
      }
      return out;
    }

    bool is_upper(int v) { return v > 0; }

    // Every block of b lying in one row (upper if `upper`) is a block of a.
    bool one_row_blocks_kept(Partition const& a, Partition const& b, bool upper) {
      auto const ablocks = a.blocks();
      for (auto const& blk : b.blocks()) {
        bool const in_row = std::all_of(blk.begin(), blk.end(),
                                        [&](int v) { return is_upper(v) == upper; });
        if (in_row && std::find(ablocks.begin(), ablocks.end(), blk) == ablocks.end()) {
          return false;
        }
      }
      return true;
    }

  }  // namespace

  std::vector<Partition> e_left_closed(Partition const& a) {
    return projections_above(params(a).supp);
  }
  std::vector<Partition> e_right_closed(Partition const& a) {
    return projections_above(params(a).cosupp);
  }
  std::vector<Partition> f_left_closed(Partition const& a) {
    return projections_below(params(a).ker);
  }
  std::vector<Partition> f_right_closed(Partition const& a) {
    return projections_below(params(a).coker);
  }

  bool leq_r_f_closed(Partition const& a, Partition const& b) {
    return refines(b, a) && one_row_blocks_kept(a, b, false);
  }

  bool leq_l_f_closed(Partition const& a, Partition const& b) {
    return refines(b, a) && one_row_blocks_kept(a, b, true);
  }

  bool leq_r_e_closed(Partition const& a, Partition const& b) {
    if (a.degree() != b.degree()) {
      return false;
    }
    std::size_t const n      = a.degree();
    auto const        ashape = block_shapes(a);
    auto const        bshape = block_shapes(b);
    for (std::uint8_t k = 0; k < b.num_blocks(); ++k) {
      // Blocks of a meeting block k of b, and whether they stay inside it.
      std::vector<std::uint8_t> touching;
      for (std::size_t v = 0; v < 2 * n; ++v) {
        if (b.block_of(v) == k
            && std::find(touching.begin(), touching.end(), a.block_of(v)) == touching.end()) {
          touching.push_back(a.block_of(v));
        }
      }
      for (std::size_t v = 0; v < 2 * n; ++v) {
        if (b.block_of(v) != k
            && std::find(touching.begin(), touching.end(), a.block_of(v)) != touching.end()) {
          return false;
        }
      }
      auto const& shape = bshape[k];
      if (!shape.upper) {
        // Lower non-transversal: a block of a as it stands.
        if (touching.size() != 1) {
          return false;
        }
      } else if (!shape.lower) {
        // Upper non-transversal: H_j plus singletons.
        auto const big = std::count_if(touching.begin(), touching.end(),
                                       [&](std::uint8_t t) { return ashape[t].size > 1; });
        if (big > 1) {
          return false;
        }
      } else {
        // Transversal: one a-block holds all lower points; the others are
        // upper singletons.
        std::uint8_t carrier = 0xFF;
        for (std::size_t i = 0; i < n; ++i) {
          if (b.lower(i) != k) {
            continue;
          }
          if (carrier == 0xFF) {
            carrier = a.lower(i);
          } else if (a.lower(i) != carrier) {
            return false;
          }
        }
        for (auto t : touching) {
          if (t != carrier && (ashape[t].size != 1 || ashape[t].lower)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool right_restriction_f_closed(Partition const& a) {
    auto const p = params(a);
    return p.dom.is_full() || p.ker.is_universal();
  }

  bool left_restriction_f_closed(Partition const& a) {
    auto const p = params(a);
    return p.codom.is_full() || p.coker.is_universal();
  }

  bool relation_is_restriction(BinaryRelation const& a, BinaryRelation const& b) {
    if (a.degree() != b.degree()) {
      return false;
    }
    auto const dom = rel_params(a).dom;
    for (std::size_t x = 0; x < a.degree(); ++x) {
      if (a.row(x) != (dom.contains(x) ? b.row(x) : 0)) {
        return false;
      }
    }
    return true;
  }

}  // namespace diagmon
