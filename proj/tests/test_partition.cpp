#include <algorithm>
#include <random>

#include "doctest.h"

#include "diagmon/errors.hpp"
#include "diagmon/partition.hpp"
#include "oracle.hpp"

using namespace diagmon;

namespace {
  Partition alpha6() {
    return Partition::from_blocks(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}});
  }
  Partition beta6() {
    return Partition::from_blocks(6, {{1, 2}, {3, 4, -1}, {5, -4, -5, -6}, {6}, {-2}, {-3}});
  }
  Subset points(std::size_t n, std::vector<int> const& p) { return Subset::from_points(n, p); }
}  // namespace

TEST_CASE("worked example in P_6") {
  auto const ab = alpha6() * beta6();
  CHECK(ab == Partition::from_blocks(6, {{1, 4}, {2, 3, -1, -4, -5, -6}, {5, 6}, {-2}, {-3}}));

  auto const pa = params(alpha6());
  CHECK(pa.rank == 1);
  CHECK(pa.dom == points(6, {2, 3}));
  auto const pb = params(beta6());
  CHECK(pb.supp == points(6, {1, 2, 3, 4, 5}));
  CHECK(pb.cosupp == points(6, {1, 4, 5, 6}));
}

TEST_CASE("identity, zeta and the empty diagram") {
  for (std::size_t n = 0; n <= 4; ++n) {
    auto const id = Partition::identity(n);
    CHECK(id == id_subset(Subset::full(n)));
    CHECK(id == id_equiv(SetPartition::discrete(n)));
    CHECK(zeta(n) * zeta(n) == zeta(n));
    CHECK(involute(id) == id);
    auto const p = params(id);
    CHECK(p.rank == n);
    CHECK(p.ker.is_discrete());
    CHECK(p.supp.is_full());
  }
  CHECK(Partition::identity(6) * alpha6() == alpha6());
  CHECK(alpha6() * Partition::identity(6) == alpha6());
  CHECK(all_partitions(0).size() == 1);
  CHECK(all_partitions(0).front() == Partition{});
}

TEST_CASE("involution flips the tabular form") {
  auto const flipped =
      Partition::from_blocks(6, {{-1, -4}, {-2, -3, 4, 5}, {-5, -6}, {1, 2, 6}, {3}});
  CHECK(involute(alpha6()) == flipped);
}

TEST_CASE("projections id_A and id_eps") {
  auto const a = id_subset(points(6, {1, 2, 4, 5}));
  CHECK(a == Partition::from_blocks(6, {{1, -1}, {2, -2}, {3}, {-3}, {4, -4}, {5, -5}, {6}, {-6}}));
  auto const eps = SetPartition::from_classes(6, {{1, 2}, {3, 5, 6}, {4}});
  CHECK(id_equiv(eps)
        == Partition::from_blocks(6, {{1, 2, -1, -2}, {3, 5, 6, -3, -5, -6}, {4, -4}}));

  auto const subs = all_subsets(3);
  for (auto const& x : subs) {
    for (auto const& y : subs) {
      CHECK(id_subset(x) * id_subset(y) == id_subset(Subset(3, x.mask() & y.mask())));
    }
  }
  auto const eqs = all_set_partitions(3);
  for (auto const& x : eqs) {
    for (auto const& y : eqs) {
      CHECK(id_equiv(x) * id_equiv(y) == id_equiv(join(x, y)));
    }
    CHECK(id_equiv(SetPartition::universal(3)) * id_equiv(x)
          == id_equiv(SetPartition::universal(3)));
  }
}

TEST_CASE("canonical form ignores block and vertex order") {
  std::vector<std::vector<int>> blocks{{5, -4, -5, -6}, {6}, {-3}, {1, 2}, {-1, 4, 3}, {-2}};
  auto const                    ref = beta6();
  std::mt19937                  rng(7);
  for (int k = 0; k < 20; ++k) {
    std::shuffle(blocks.begin(), blocks.end(), rng);
    for (auto& b : blocks) {
      std::shuffle(b.begin(), b.end(), rng);
    }
    auto const p = Partition::from_blocks(6, blocks);
    CHECK(p == ref);
    CHECK(p.key() == ref.key());
    CHECK(p.hash() == ref.hash());
  }
}

TEST_CASE("from_blocks rejects bad input and names the vertex") {
  CHECK_THROWS_WITH_AS(Partition::from_blocks(2, {{1, -2}, {2, -2}, {-1}}),
                       "vertex 2' appears in two blocks", ValidationError);
  CHECK_THROWS_WITH_AS(Partition::from_blocks(2, {{1, -2}, {2}}),
                       "vertex 1' is not covered by any block", ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 3}, {2, -1, -2}}), ValidationError);
  CHECK_THROWS_AS(Partition::from_blocks(2, {{1, 2, -1, -2}, {}}), ValidationError);
  CHECK_THROWS_AS(multiply(Partition::identity(2), Partition::identity(3)), DimensionError);
  CHECK_THROWS_AS(refines(Partition::identity(2), Partition::identity(3)), DimensionError);
}

TEST_CASE("blocks are emitted by least vertex") {
  auto const b = beta6().blocks();
  REQUIRE(b.size() == 6);
  CHECK(b[0] == std::vector<int>{1, 2});
  CHECK(b[1] == std::vector<int>{3, 4, -1});
  CHECK(b[2] == std::vector<int>{5, -4, -5, -6});
  CHECK(b[3] == std::vector<int>{6});
  CHECK(b[4] == std::vector<int>{-2});
  CHECK(b[5] == std::vector<int>{-3});
}

TEST_CASE("|P_n| = Bell(2n)") {
  for (unsigned n = 0; n <= 4; ++n) {
    CHECK(all_partitions(n).size() == oracle::count_set_partitions(2 * n));
    CHECK(all_partitions(n).size() == oracle::bell(2 * n));
  }
}

TEST_CASE("associativity and involution laws on P_3") {
  auto const p3 = all_partitions(3);
  REQUIRE(p3.size() == 203);
  for (auto const& a : p3) {
    auto const ia = involute(a);
    CHECK(involute(ia) == a);
    CHECK(a * ia * a == a);
    auto const pa = params(a), pia = params(ia);
    CHECK(pia.dom == pa.codom);
    CHECK(pia.ker == pa.coker);
    CHECK(pia.supp == pa.cosupp);
    CHECK(pia.rank == pa.rank);
  }
  std::size_t failures = 0;
  for (auto const& a : p3) {
    for (auto const& b : p3) {
      auto const ab = a * b;
      if (involute(ab) != involute(b) * involute(a)) {
        ++failures;
      }
      if (params(ab).rank > std::min(params(a).rank, params(b).rank)) {
        ++failures;
      }
      for (auto const& c : p3) {
        if (ab * c != a * (b * c)) {
          ++failures;
        }
      }
    }
  }
  CHECK(failures == 0);
}

TEST_CASE("associativity sampled on P_4") {
  auto const   p4 = all_partitions(4);
  std::mt19937 rng(11);
  std::uniform_int_distribution<std::size_t> pick(0, p4.size() - 1);
  for (int k = 0; k < 20000; ++k) {
    auto const& a = p4[pick(rng)];
    auto const& b = p4[pick(rng)];
    auto const& c = p4[pick(rng)];
    REQUIRE((a * b) * c == a * (b * c));
  }
}

TEST_CASE("params of supp/cosupp exclude exactly the singletons") {
  for (auto const& a : all_partitions(2)) {
    auto const p = params(a);
    for (std::size_t i = 0; i < 2; ++i) {
      bool const upper_singleton =
          std::count(a.labels().begin(), a.labels().end(), a.upper(i)) == 1;
      CHECK(p.supp.contains(i) == !upper_singleton);
    }
  }
}

TEST_CASE("refinement") {
  auto const finest = Partition::from_blocks(2, {{1}, {2}, {-1}, {-2}});
  for (auto const& b : all_partitions(2)) {
    CHECK(refines(b, b));
    CHECK(refines(finest, b));
    CHECK(refines(b, zeta(2)) == (params(b).rank == 0));
  }
  CHECK(refines(Partition::identity(2), zeta(2)) == false);
}

TEST_CASE("Brauer predicates") {
  auto const left =
      Partition::from_blocks(6, {{1, -3}, {2, -1}, {4, -4}, {5, -6}, {3, 6}, {-2, -5}});
  auto const right = Partition::from_blocks(
      6, {{1, -3}, {4, -4}, {5, -6}, {3, 6}, {2}, {-1}, {-2}, {-5}});
  CHECK(is_brauer(left));
  CHECK(is_partial_brauer(left));
  CHECK(is_partial_brauer(right));
  CHECK_FALSE(is_brauer(right));
  CHECK(is_brauer(Partition::identity(6)));
  CHECK(is_partial_brauer(Partition::identity(6)));

  for (unsigned n = 1; n <= 3; ++n) {
    auto const all = all_partitions(n);
    auto const b   = std::count_if(all.begin(), all.end(), [](auto const& a) { return is_brauer(a); });
    auto const pb =
        std::count_if(all.begin(), all.end(), [](auto const& a) { return is_partial_brauer(a); });
    CHECK(static_cast<std::uint64_t>(b) == oracle::count_perfect_matchings(2 * n));
    CHECK(static_cast<std::uint64_t>(pb) == oracle::count_set_partitions(2 * n, 2));
  }
}

TEST_CASE("adjoin_fixed_point") {
  auto const a = Partition::from_blocks(1, {{1}, {-1}});
  CHECK(adjoin_fixed_point(a) == Partition::from_blocks(2, {{1}, {-1}, {2, -2}}));
  CHECK(adjoin_fixed_point(Partition{}) == Partition::identity(1));
}
