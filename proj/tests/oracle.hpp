#ifndef DIAGMON_TESTS_ORACLE_HPP_
#define DIAGMON_TESTS_ORACLE_HPP_

// Independent counting formulas and brute-force enumerators used to derive
// expected values in tests. Nothing here touches the library's enumeration
// code.

#include <cstdint>
#include <vector>

namespace oracle {

  inline std::uint64_t factorial(unsigned n) {
    std::uint64_t r = 1;
    for (unsigned k = 2; k <= n; ++k) {
      r *= k;
    }
    return r;
  }

  inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
      return 0;
    }
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  // Stirling numbers of the second kind by the recurrence
  // S(n,k) = k S(n-1,k) + S(n-1,k-1).
  inline std::uint64_t stirling2(unsigned n, unsigned k) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = 1; j <= i; ++j) {
        s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
      }
    }
    return k <= n ? s[n][k] : 0;
  }

  // Bell numbers via the Bell triangle.
  inline std::uint64_t bell(unsigned n) {
    std::vector<std::uint64_t> row{1};
    for (unsigned i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next{row.back()};
      for (auto v : row) {
        next.push_back(next.back() + v);
      }
      row = std::move(next);
    }
    return row.front();
  }

  // (2k-1)!!, with (-1)!! = 1.
  inline std::uint64_t double_factorial_odd(unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i + 1 <= 2 * k; i += 2) {
      r *= i;
    }
    return r;
  }

  inline std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  // |I_n| = sum_k C(n,k)^2 k!.
  inline std::uint64_t rook_count(unsigned n) {
    std::uint64_t r = 0;
    for (unsigned k = 0; k <= n; ++k) {
      r += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return r;
  }

  // |J_n| = sum_k S(n,k)^2 k!.
  inline std::uint64_t block_bijection_count(unsigned n) {
    std::uint64_t r = 0;
    for (unsigned k = 0; k <= n; ++k) {
      r += stirling2(n, k) * stirling2(n, k) * factorial(k);
    }
    return r;
  }

  // Brute force: number of set partitions of an m-set with every block of
  // size at most `cap` (cap = 0 means unbounded), by assigning points one at
  // a time to an existing block or a new one.
  inline std::uint64_t count_set_partitions(unsigned m, unsigned cap = 0) {
    std::vector<unsigned> sizes;
    std::uint64_t         total = 0;
    auto rec = [&](auto&& self, unsigned point) -> void {
      if (point == m) {
        ++total;
        return;
      }
      // Index loop: the recursion grows `sizes`.
      for (std::size_t b = 0; b < sizes.size(); ++b) {
        if (cap == 0 || sizes[b] < cap) {
          ++sizes[b];
          self(self, point + 1);
          --sizes[b];
        }
      }
      sizes.push_back(1);
      self(self, point + 1);
      sizes.pop_back();
    };
    rec(rec, 0);
    return total;
  }

  // Brute force: perfect matchings of a 2k-set.
  inline std::uint64_t count_perfect_matchings(unsigned m) {
    if (m % 2 == 1) {
      return 0;
    }
    std::uint64_t total = 0;
    std::vector<bool> used(m, false);
    auto rec = [&](auto&& self) -> void {
      unsigned first = 0;
      while (first < m && used[first]) {
        ++first;
      }
      if (first == m) {
        ++total;
        return;
      }
      used[first] = true;
      for (unsigned j = first + 1; j < m; ++j) {
        if (!used[j]) {
          used[j] = true;
          self(self);
          used[j] = false;
        }
      }
      used[first] = false;
    };
    rec(rec);
    return total;
  }

}  // namespace oracle

#endif  // DIAGMON_TESTS_ORACLE_HPP_
