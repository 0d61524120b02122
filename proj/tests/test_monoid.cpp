#include <algorithm>
#include <set>

#include "doctest.h"

#include "diagmon/dot.hpp"
#include "diagmon/errors.hpp"
#include "diagmon/finite_monoid.hpp"
#include "diagmon/green.hpp"
#include "diagmon/json_io.hpp"
#include "oracle.hpp"

using namespace diagmon;

namespace {

  std::vector<Element> as_elements(std::vector<Partition> const& ps) {
    return {ps.begin(), ps.end()};
  }

  FiniteMonoid full_partition_monoid(std::size_t n) {
    return FiniteMonoid(as_elements(all_partitions(n)), "P" + std::to_string(n));
  }

  Partition const& part(FiniteMonoid const& s, Index i) {
    return std::get<Partition>(s.element(i));
  }

  // Upper non-transversals of b are blocks of a.
  bool upper_nontransversals_kept(Partition const& a, Partition const& b) {
    auto const shapes = block_shapes(b);
    auto const ablk   = a.blocks();
    for (auto const& blk : b.blocks()) {
      bool const upper_only = std::all_of(blk.begin(), blk.end(), [](int v) { return v > 0; });
      if (upper_only && std::find(ablk.begin(), ablk.end(), blk) == ablk.end()) {
        return false;
      }
    }
    return true;
  }

}  // namespace

TEST_CASE("closure from generators") {
  auto const p2 = closure(as_elements(all_partitions(2)));
  CHECK(p2.size() == oracle::bell(4));
  CHECK(closure({Element{Partition::identity(3)}}).size() == 1);

  std::vector<Element> brauer;
  for (auto const& a : all_partitions(3)) {
    if (is_brauer(a)) {
      brauer.push_back(a);
    }
  }
  auto const b3 = closure(brauer);
  CHECK(b3.size() == oracle::count_perfect_matchings(6));
  CHECK(b3.size() == oracle::double_factorial_odd(3));

  CHECK_THROWS_AS(closure(as_elements(all_partitions(3)), 100), ResourceError);
  CHECK_THROWS_AS(closure({}), ValidationError);
}

TEST_CASE("constructor validation") {
  std::vector<Element> dup{Partition::identity(1), Partition::identity(1)};
  CHECK_THROWS_AS(FiniteMonoid(dup, "dup"), ValidationError);
  std::vector<Element> mixed{Partition::identity(1), BinaryRelation::identity(1)};
  CHECK_THROWS_AS(FiniteMonoid(mixed, "mixed"), ValidationError);
  // {id, zeta} is closed; {id, a} for a non-idempotent a is not.
  auto const a = Partition::from_blocks(2, {{1, -2}, {2, -1}});
  CHECK_NOTHROW(FiniteMonoid({Partition::identity(2), zeta(2)}));
  CHECK_THROWS_AS(FiniteMonoid({Partition::identity(2), Partition::from_blocks(2, {{1, -2}, {2}, {-1}})}),
                  ValidationError);
  CHECK(FiniteMonoid({Partition::identity(2), a}).identity() == Index{0});
}

TEST_CASE("Cayley table is consistent with the decoder") {
  auto const s = full_partition_monoid(2);
  REQUIRE(s.has_table());
  for (Index x = 0; x < s.size(); ++x) {
    for (Index y = 0; y < s.size(); ++y) {
      CHECK(part(s, s.mul(x, y)) == part(s, x) * part(s, y));
    }
  }
  CHECK(is_associative(s));
  REQUIRE(s.identity());
  CHECK(part(s, *s.identity()) == Partition::identity(2));
}

TEST_CASE("generators generate") {
  for (std::size_t n = 0; n <= 3; ++n) {
    auto const           s = full_partition_monoid(n);
    std::vector<Element> gens;
    for (Index g : s.generators()) {
      gens.push_back(s.element(g));
    }
    if (gens.empty()) {
      CHECK(s.size() == 1);
      continue;
    }
    CHECK(closure(gens).size() == s.size());
  }
}

TEST_CASE("Green's relations on P_3 match the parameter descriptions") {
  auto const s = full_partition_monoid(3);
  auto const g = green(s);
  CHECK(g.d_equals_j);
  CHECK(g.num_d == 4);
  CHECK(ideals_form_chain(g));
  for (Index x = 0; x < s.size(); ++x) {
    auto const px = params(part(s, x));
    for (Index y = 0; y < s.size(); ++y) {
      auto const py = params(part(s, y));
      CHECK(g.R.related(x, y) == (px.dom == py.dom && px.ker == py.ker));
      CHECK(g.L.related(x, y) == (px.codom == py.codom && px.coker == py.coker));
      CHECK(g.J.related(x, y) == (px.rank == py.rank));
      CHECK(g.J.leq(x, y) == (px.rank <= py.rank));
      CHECK(g.R.leq(x, y)
            == (py.ker.is_finer_than(px.ker) && upper_nontransversals_kept(part(s, x), part(s, y))));
      CHECK((g.H[x] == g.H[y]) == (g.R.related(x, y) && g.L.related(x, y)));
    }
  }
  auto const bottom = minimal_ideal(s, g);
  for (Index x : bottom) {
    CHECK(params(part(s, x)).rank == 0);
  }
  CHECK(bottom.size() == oracle::bell(3) * oracle::bell(3));
}

TEST_CASE("egg-box structure") {
  SUBCASE("trivial monoid") {
    FiniteMonoid const s({Partition{}});
    auto const         box = eggbox(s, green(s));
    REQUIRE(box.classes.size() == 1);
    CHECK(box.classes[0].rows.size() == 1);
    CHECK(box.classes[0].cols.size() == 1);
    CHECK(box.classes[0].group[0][0]);
    CHECK(box.hasse.empty());
  }
  SUBCASE("a group is a single D-class") {
    std::vector<Element> perms;
    for (auto const& a : all_partitions(3)) {
      auto const p = params(a);
      if (p.rank == 3) {
        perms.push_back(a);
      }
    }
    FiniteMonoid const s(perms);
    auto const         g = green(s);
    CHECK(g.num_d == 1);
    CHECK(g.num_h == 1);
  }
  SUBCASE("P_3: D-classes by rank, bottom first, group cells hold idempotents") {
    auto const s   = full_partition_monoid(3);
    auto const g   = green(s);
    auto const box = eggbox(s, g);
    REQUIRE(box.classes.size() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
      auto const& dc = box.classes[k];
      for (std::size_t r = 0; r < dc.rows.size(); ++r) {
        for (std::size_t c = 0; c < dc.cols.size(); ++c) {
          REQUIRE(!dc.cells[r][c].empty());
          CHECK(params(part(s, dc.cells[r][c].front())).rank == k);
          bool const has_idem = std::any_of(dc.cells[r][c].begin(), dc.cells[r][c].end(),
                                            [&](Index x) { return s.mul(x, x) == x; });
          CHECK(dc.group[r][c] == has_idem);
          if (dc.group[r][c]) {
            CHECK(dc.cells[r][c].size() == oracle::factorial(static_cast<unsigned>(k)));
          }
        }
      }
    }
    CHECK(box.hasse == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}, {2, 3}});

    auto const dot = eggbox_dot(s, box);
    CHECK(dot == eggbox_dot(s, box));
    std::size_t clusters = 0;
    for (auto pos = dot.find("subgraph cluster_"); pos != std::string::npos;
         pos      = dot.find("subgraph cluster_", pos + 1)) {
      ++clusters;
    }
    CHECK(clusters == 4);
    CHECK(dot.find("shaded=true") != std::string::npos);
  }
}

TEST_CASE("regularity and inverse checks") {
  auto const p3 = full_partition_monoid(3);
  CHECK(is_regular(p3));
  CHECK_FALSE(is_inverse(p3));
  CHECK_FALSE(idempotents_commute(p3));

  std::vector<Element> rooks;
  for (auto const& a : all_partitions(3)) {
    auto const p = params(a);
    if (p.ker.is_discrete() && p.coker.is_discrete()) {
      rooks.push_back(a);
    }
  }
  FiniteMonoid const i3(rooks);
  CHECK(i3.size() == oracle::rook_count(3));
  CHECK(is_inverse(i3));
  CHECK(idempotents_commute(i3));
  CHECK(idempotents(i3).size() == 8);
  REQUIRE(zero(i3));
  CHECK(params(part(i3, *zero(i3))).rank == 0);
  CHECK(right_zeros(i3).size() == 1);
}

TEST_CASE("embeddings") {
  auto const         s = full_partition_monoid(2);
  std::vector<Index> id(s.size());
  for (Index i = 0; i < s.size(); ++i) {
    id[i] = i;
  }
  CHECK(check_embedding(id, s, s));
  std::vector<Index> constant(s.size(), *s.identity());
  CHECK_FALSE(check_embedding(constant, s, s));
}

TEST_CASE("JSON encodings") {
  auto const a = Partition::from_blocks(2, {{-2, 1}, {2}, {-1}});
  auto const j = to_json(a);
  CHECK(j.dump() == R"({"blocks":[[1,-2],[2],[-1]],"n":2})");
  CHECK(std::get<Partition>(element_from_json(j)) == a);

  auto const r = BinaryRelation::from_pairs(2, {{2, 1}, {1, 2}});
  CHECK(to_json(r).dump() == R"({"n":2,"pairs":[[1,2],[2,1]]})");
  CHECK(std::get<BinaryRelation>(element_from_json(to_json(r))) == r);

  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":2})")), ValidationError);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"n":1,"blocks":[[1],[1,-1]]})")),
                  ValidationError);

  FiniteMonoid const t({Partition{}});
  CHECK(monoid_to_json(t).dump()
        == R"({"elements":[{"blocks":[],"n":0}],"identity":0,"mul":[0],"size":1})");
}
