#include "diagmon/rational_matrix.hpp"

#include <utility>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {

    // Reduces m in place to reduced row echelon form; returns the rank.
    std::size_t eliminate(RationalMatrix& m) {
      std::size_t r = 0;
      for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) {
          ++p;
        }
        if (p == m.rows()) {
          continue;
        }
        if (p != r) {
          for (std::size_t j = 0; j < m.cols(); ++j) {
            std::swap(m(p, j), m(r, j));
          }
        }
        Rational const pivot = m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) {
          m(r, j) /= pivot;
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
          if (i == r || m(i, c) == 0) {
            continue;
          }
          Rational const f = m(i, c);
          for (std::size_t j = c; j < m.cols(); ++j) {
            if (m(r, j) != 0) {
              m(i, j) -= f * m(r, j);
            }
          }
        }
        ++r;
      }
      return r;
    }

    Json integer_json(mpz_class const& z) {
      if (z.fits_slong_p()) {
        return z.get_si();
      }
      return z.get_str();
    }

  }  // namespace

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = 1;
    }
    return m;
  }

  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a.cols() != b.rows()) {
      throw DimensionError("matrix product of " + std::to_string(a.rows()) + "x"
                           + std::to_string(a.cols()) + " and " + std::to_string(b.rows()) + "x"
                           + std::to_string(b.cols()));
    }
    RationalMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (a(i, k) == 0) {
          continue;
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
          if (b(k, j) != 0) {
            c(i, j) += a(i, k) * b(k, j);
          }
        }
      }
    }
    return c;
  }

  std::size_t rank(RationalMatrix m) { return eliminate(m); }

  std::optional<RationalMatrix> inverse(RationalMatrix m) {
    if (m.rows() != m.cols()) {
      throw DimensionError("only square matrices have inverses");
    }
    std::size_t const n = m.rows();
    RationalMatrix    aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        aug(i, j) = m(i, j);
      }
      aug(i, n + i) = 1;
    }
    eliminate(aug);
    for (std::size_t i = 0; i < n; ++i) {
      if (aug(i, i) != 1) {
        return std::nullopt;
      }
    }
    RationalMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) = aug(i, n + j);
      }
    }
    return out;
  }

  bool is_unitriangular(RationalMatrix const& m, std::vector<std::size_t> const& order) {
    if (m.rows() != m.cols() || order.size() != m.rows()) {
      return false;
    }
    for (std::size_t p = 0; p < order.size(); ++p) {
      if (m(order[p], order[p]) != 1) {
        return false;
      }
      for (std::size_t q = 0; q < p; ++q) {
        if (m(order[p], order[q]) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  Json to_json(RationalMatrix const& m) {
    Json out = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < m.cols(); ++j) {
        row.push_back(Json::array(
            {integer_json(m(i, j).get_num()), integer_json(m(i, j).get_den())}));
      }
      out.push_back(std::move(row));
    }
    return out;
  }

}  // namespace diagmon
