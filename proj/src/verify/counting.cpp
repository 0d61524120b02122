#include <vector>

#include "diagmon/verify.hpp"

namespace diagmon::counting {

  std::uint64_t bell(unsigned n) {
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

  std::uint64_t stirling2(unsigned n, unsigned k) {
    std::vector<std::vector<std::uint64_t>> s(n + 1, std::vector<std::uint64_t>(n + 1, 0));
    s[0][0] = 1;
    for (unsigned i = 1; i <= n; ++i) {
      for (unsigned j = 1; j <= i; ++j) {
        s[i][j] = j * s[i - 1][j] + s[i - 1][j - 1];
      }
    }
    return k <= n ? s[n][k] : 0;
  }

  std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) {
      return 0;
    }
    std::uint64_t r = 1;
    for (unsigned i = 1; i <= k; ++i) {
      r = r * (n - k + i) / i;
    }
    return r;
  }

  std::uint64_t factorial(unsigned n) {
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) {
      r *= i;
    }
    return r;
  }

  std::uint64_t double_factorial_odd(unsigned k) {
    std::uint64_t r = 1;
    for (unsigned i = 1; i < 2 * k; i += 2) {
      r *= i;
    }
    return r;
  }

  std::uint64_t power(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e-- > 0) {
      r *= b;
    }
    return r;
  }

  std::uint64_t partial_bijections(unsigned n) {
    std::uint64_t r = 0;
    for (unsigned k = 0; k <= n; ++k) {
      r += binomial(n, k) * binomial(n, k) * factorial(k);
    }
    return r;
  }

  std::uint64_t block_bijections(unsigned n) {
    std::uint64_t r = 0;
    for (unsigned k = 0; k <= n; ++k) {
      r += stirling2(n, k) * stirling2(n, k) * factorial(k);
    }
    return r;
  }

}  // namespace diagmon::counting
