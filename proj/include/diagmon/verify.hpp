#ifndef DIAGMON_VERIFY_HPP_
#define DIAGMON_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace diagmon {

  // Closed-form and recursive counts, kept apart from the enumeration code
  // they are compared with.
  namespace counting {
    std::uint64_t bell(unsigned n);              // Bell triangle
    std::uint64_t stirling2(unsigned n, unsigned k);
    std::uint64_t binomial(unsigned n, unsigned k);
    std::uint64_t factorial(unsigned n);
    std::uint64_t double_factorial_odd(unsigned k);  // (2k-1)!!, 1 for k = 0
    std::uint64_t power(std::uint64_t b, unsigned e);
    std::uint64_t partial_bijections(unsigned n);    // sum C(n,k)^2 k!
    std::uint64_t block_bijections(unsigned n);      // sum S(n,k)^2 k!
  }  // namespace counting

  struct Check {
    std::string label;
    bool        pass = false;
    std::string detail;  // filled on failure
  };

  struct Criterion {
    int              id;
    std::string_view title;
    std::string_view group;  // general, relations, partitions, brauer-rook
    std::size_t      cap;    // largest n it ever uses
  };

  inline constexpr int kNumCriteria = 13;
  std::span<Criterion const> criteria();

  // Runs one criterion with every n capped at min(nmax, cap); with no nmax
  // the criterion's own cap applies. Throws std::out_of_range for an
  // unknown id.
  std::vector<Check> run_criterion(int id, std::optional<std::size_t> nmax = std::nullopt);

  // Section names: "general", "relations", "partitions", "brauer-rook",
  // their aliases "2".."5", and "all". Returns nullopt for unknown names.
  std::optional<std::vector<int>> section_criteria(std::string_view section);

}  // namespace diagmon

#endif  // DIAGMON_VERIFY_HPP_
