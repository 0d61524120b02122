#include "doctest.h"

#include "diagmon/errors.hpp"
#include "diagmon/relation.hpp"
#include "oracle.hpp"

using namespace diagmon;

TEST_CASE("composition") {
  auto const a = BinaryRelation::from_pairs(2, {{1, 2}});
  auto const b = BinaryRelation::from_pairs(2, {{2, 1}});
  CHECK(a * b == BinaryRelation::from_pairs(2, {{1, 1}}));
  CHECK(b * a == BinaryRelation::from_pairs(2, {{2, 2}}));
  for (auto const& x : all_relations(2)) {
    CHECK(BinaryRelation::identity(2) * x == x);
    CHECK(x * BinaryRelation::identity(2) == x);
    CHECK(BinaryRelation(2) * x == BinaryRelation(2));
  }
  CHECK_THROWS_AS(compose(BinaryRelation(2), BinaryRelation(3)), DimensionError);
}

TEST_CASE("composition agrees with the pairwise definition on B_2") {
  auto const all = all_relations(2);
  CHECK(all.size() == 16);
  for (auto const& a : all) {
    for (auto const& b : all) {
      BinaryRelation expected(2);
      for (std::size_t x = 0; x < 2; ++x) {
        for (std::size_t y = 0; y < 2; ++y) {
          for (std::size_t u = 0; u < 2; ++u) {
            if (a.contains(x, u) && b.contains(u, y)) {
              expected.insert(x, y);
            }
          }
        }
      }
      CHECK(a * b == expected);
      CHECK(converse(a * b) == converse(b) * converse(a));
    }
    CHECK(converse(converse(a)) == a);
  }
}

TEST_CASE("converse") {
  CHECK(converse(BinaryRelation::from_pairs(2, {{1, 2}})) == BinaryRelation::from_pairs(2, {{2, 1}}));
  for (auto const& s : all_subsets(3)) {
    CHECK(converse(relation_identity(s)) == relation_identity(s));
  }
}

TEST_CASE("parameters") {
  auto const a = BinaryRelation::from_pairs(2, {{1, 1}, {2, 1}});
  auto const p = rel_params(a);
  CHECK(p.dom == Subset::full(2));
  CHECK(p.codom == Subset::from_points(2, std::vector<int>{1}));
  CHECK(p.ker == BinaryRelation::full(2));
  CHECK(p.coker == BinaryRelation::from_pairs(2, {{1, 1}}));

  auto const idA = relation_identity(Subset::from_points(3, std::vector<int>{1, 3}));
  auto const q   = rel_params(idA);
  CHECK(q.dom == q.codom);
  CHECK(q.ker == idA);

  auto const full = rel_params(BinaryRelation::full(2));
  CHECK(full.ker == BinaryRelation::full(2));

  auto const pr = predicates(a);
  CHECK_FALSE(pr.injective);
  CHECK(pr.coinjective);
  CHECK(pr.cosurjective);
  CHECK_FALSE(pr.surjective);

  auto const id = predicates(BinaryRelation::identity(3));
  CHECK((id.injective && id.coinjective && id.surjective && id.cosurjective));
}

TEST_CASE("kernels are reflexive on dom and symmetric, but not always transitive") {
  bool saw_intransitive = false;
  for (auto const& a : all_relations(3)) {
    auto const p = rel_params(a);
    for (std::size_t x = 0; x < 3; ++x) {
      CHECK(p.ker.contains(x, x) == p.dom.contains(x));
      for (std::size_t y = 0; y < 3; ++y) {
        CHECK(p.ker.contains(x, y) == p.ker.contains(y, x));
      }
    }
    if (p.ker * p.ker != p.ker) {
      saw_intransitive = true;
    }
  }
  CHECK(saw_intransitive);
}

TEST_CASE("PT, T and I counts and closure for n <= 3") {
  for (unsigned n = 0; n <= 3; ++n) {
    std::vector<BinaryRelation> pt, t, in;
    for (auto const& a : all_relations(n)) {
      auto const p = predicates(a);
      if (p.coinjective) {
        pt.push_back(a);
        if (p.cosurjective) {
          t.push_back(a);
        }
        if (p.injective) {
          in.push_back(a);
        }
      }
    }
    CHECK(pt.size() == oracle::power(n + 1, n));
    CHECK(t.size() == oracle::power(n, n));
    CHECK(in.size() == oracle::rook_count(n));
    auto closed = [](std::vector<BinaryRelation> const& s, auto pred) {
      for (auto const& a : s) {
        for (auto const& b : s) {
          if (!pred(predicates(a * b))) {
            return false;
          }
        }
      }
      return true;
    };
    CHECK(closed(pt, [](auto p) { return p.coinjective; }));
    CHECK(closed(t, [](auto p) { return p.coinjective && p.cosurjective; }));
    CHECK(closed(in, [](auto p) { return p.coinjective && p.injective; }));
    for (auto const& a : in) {
      CHECK(a * converse(a) * a == a);
    }
  }
}

TEST_CASE("from_pairs validates points") {
  CHECK_THROWS_AS(BinaryRelation::from_pairs(2, {{0, 1}}), ValidationError);
  CHECK_THROWS_AS(BinaryRelation::from_pairs(2, {{1, 3}}), ValidationError);
  CHECK_THROWS_AS(all_relations(5), ResourceError);
}
