#include <set>
#include <stdexcept>

#include "doctest.h"

#include "diagmon/verify.hpp"
#include "oracle.hpp"

using namespace diagmon;

TEST_CASE("counting formulas agree with brute-force enumeration") {
  for (unsigned n = 0; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(counting::bell(n) == oracle::count_set_partitions(n));
    CHECK(counting::factorial(n) == oracle::factorial(n));
    CHECK(counting::partial_bijections(n) == oracle::rook_count(n));
    CHECK(counting::block_bijections(n) == oracle::block_bijection_count(n));
    CHECK(counting::double_factorial_odd(n) == oracle::count_perfect_matchings(2 * n));
    for (unsigned k = 0; k <= n + 1; ++k) {
      CHECK(counting::binomial(n, k) == oracle::binomial(n, k));
      CHECK(counting::stirling2(n, k) == oracle::stirling2(n, k));
    }
  }
  CHECK(counting::bell(8) == 4140);
  CHECK(counting::partial_bijections(3) == 34);
  CHECK(counting::block_bijections(3) == 25);
  CHECK(counting::power(5, 4) == 625);
  CHECK(counting::power(0, 0) == 1);
}

TEST_CASE("criteria table") {
  auto const cs = criteria();
  REQUIRE(cs.size() == kNumCriteria);
  std::set<std::string_view> const groups{"general", "relations", "partitions", "brauer-rook"};
  for (std::size_t k = 0; k < cs.size(); ++k) {
    CHECK(cs[k].id == static_cast<int>(k) + 1);
    CHECK(groups.contains(cs[k].group));
    CHECK_FALSE(cs[k].title.empty());
  }
  CHECK_THROWS_AS(run_criterion(0), std::out_of_range);
  CHECK_THROWS_AS(run_criterion(kNumCriteria + 1), std::out_of_range);
}

TEST_CASE("sections and aliases") {
  CHECK(section_criteria("relations") == std::vector<int>{4});
  CHECK(section_criteria("3") == std::vector<int>{4});
  CHECK(section_criteria("brauer-rook") == std::vector<int>{12});
  CHECK(section_criteria("5") == std::vector<int>{12});
  CHECK(section_criteria("general") == std::vector<int>{10, 11, 13});
  CHECK(section_criteria("2") == section_criteria("general"));
  CHECK(section_criteria("4") == std::vector<int>{1, 2, 3, 5, 6, 7, 8, 9});
  CHECK(section_criteria("all")->size() == kNumCriteria);
  CHECK_FALSE(section_criteria("6").has_value());
  CHECK_FALSE(section_criteria("").has_value());
}

TEST_CASE("nmax 0 runs only the trivial cases and passes") {
  for (int id = 1; id <= kNumCriteria; ++id) {
    CAPTURE(id);
    for (auto const& c : run_criterion(id, 0)) {
      CAPTURE(c.label);
      CHECK(c.pass);
    }
  }
  // Fixed-size examples are skipped below their degree.
  CHECK(run_criterion(3, 1).empty());
  CHECK(run_criterion(11, 1).empty());
  CHECK_FALSE(run_criterion(3, 2).empty());
  // The worked example does not depend on nmax.
  CHECK(run_criterion(1, 0).size() == run_criterion(1).size());
}

TEST_CASE("small sections pass with labelled checks") {
  auto const checks = run_criterion(4, 2);
  CHECK(checks.size() == 3 * 6);
  for (auto const& c : checks) {
    CAPTURE(c.label);
    CHECK(c.pass);
    CHECK(c.detail.empty());
  }
}
