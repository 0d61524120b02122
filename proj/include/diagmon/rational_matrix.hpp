#ifndef DIAGMON_RATIONAL_MATRIX_HPP_
#define DIAGMON_RATIONAL_MATRIX_HPP_

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <vector>

#include "diagmon/json_io.hpp"

namespace diagmon {

  using Rational = mpq_class;

  // Dense matrix over Q, row-major.
  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Rational&       operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    Rational const& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool operator==(RationalMatrix const&) const = default;

   private:
    std::size_t           rows_ = 0;
    std::size_t           cols_ = 0;
    std::vector<Rational> a_;
  };

  // Throws DimensionError on mismatched shapes.
  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b);

  std::size_t rank(RationalMatrix m);

  // Gauss-Jordan; nullopt when singular. Throws DimensionError if not square.
  std::optional<RationalMatrix> inverse(RationalMatrix m);

  // Upper unitriangular once rows and columns are both listed in `order`
  // (ones on the diagonal, zeros below it).
  bool is_unitriangular(RationalMatrix const& m, std::vector<std::size_t> const& order);

  // Row-major [[[num, den], ...], ...]. Entries outside the range of a
  // 64-bit integer are written as decimal strings.
  Json to_json(RationalMatrix const& m);

}  // namespace diagmon

#endif  // DIAGMON_RATIONAL_MATRIX_HPP_
