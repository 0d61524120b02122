#include "diagmon/cat_algebra.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "diagmon/errors.hpp"
#include "diagmon/green.hpp"

namespace diagmon {

  namespace {

    EhresmannReport require_restriction(Semilattice const& E, Side side) {
      auto rep = check_axioms(E);
      if (!rep.is_ehresmann()) {
        throw StateError("(" + E.parent().name() + ", " + E.name()
                         + ") is not Ehresmann, so the transform is undefined");
      }
      Axiom const needed = side == Side::left ? Axiom::L3 : Axiom::R3;
      if (!rep.holds(needed)) {
        throw StateError("(" + E.parent().name() + ", " + E.name() + ") fails "
                         + std::string(axiom_name(needed)) + ", so it is not "
                         + (side == Side::left ? "left" : "right") + " restriction");
      }
      return rep;
    }

    std::vector<Index> members_below(PartialOrder const& order, Index x) {
      std::vector<Index> out;
      for (Index a = 0; a < order.size(); ++a) {
        if (order.leq(a, x)) {
          out.push_back(a);
        }
      }
      return out;
    }

  }  // namespace

  EhresmannCategory::EhresmannCategory(Semilattice const& E) : E_(&E) {
    auto rep = check_axioms(E);
    if (!rep.is_ehresmann()) {
      throw StateError("(" + E.parent().name() + ", " + E.name()
                       + ") is not Ehresmann; the category needs L1, R1, L2 and R2");
    }
    plus_ = std::move(*rep.plus);
    star_ = std::move(*rep.star);
    for (Index x = 0; x < plus_.size(); ++x) {
      hom_[{plus_[x], star_[x]}].push_back(x);
    }
  }

  std::vector<Index> const& EhresmannCategory::hom(Index e, Index f) const {
    static std::vector<Index> const none;
    auto const                      it = hom_.find({e, f});
    return it == hom_.end() ? none : it->second;
  }

  std::optional<Index> EhresmannCategory::compose(Index x, Index y) const {
    if (star_[x] != plus_[y]) {
      return std::nullopt;
    }
    return E_->parent().mul(x, y);
  }

  EIResult is_EI(EhresmannCategory const& c) {
    auto const& s = c.semilattice().parent();
    EIResult    out;
    for (Index e : c.objects()) {
      auto const& end = c.hom(e, e);
      for (Index x : end) {
        bool const invertible = std::any_of(end.begin(), end.end(), [&](Index y) {
          return s.mul(x, y) == e && s.mul(y, x) == e;
        });
        if (!invertible && (!out.witness || x < *out.witness)) {
          out.holds   = false;
          out.witness = x;
        }
      }
    }
    return out;
  }

  RationalAlgebra RationalAlgebra::semigroup_algebra(FiniteMonoid const& s) {
    if (s.size() > kAlgebraLimit) {
      throw ResourceError("semigroup algebras are materialised up to dimension "
                          + std::to_string(kAlgebraLimit));
    }
    RationalAlgebra a(s.size());
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        a.table_[x * a.d_ + y] = {{s.mul(x, y), Rational(1)}};
      }
    }
    return a;
  }

  RationalAlgebra RationalAlgebra::category_algebra(EhresmannCategory const& c) {
    std::size_t const d = c.plus().size();
    if (d > kAlgebraLimit) {
      throw ResourceError("category algebras are materialised up to dimension "
                          + std::to_string(kAlgebraLimit));
    }
    RationalAlgebra a(d);
    for (Index x = 0; x < d; ++x) {
      for (Index y = 0; y < d; ++y) {
        if (auto const xy = c.compose(x, y)) {
          a.table_[x * d + y] = {{*xy, Rational(1)}};
        }
      }
    }
    return a;
  }

  void RationalAlgebra::set_product(Index i, Index j, Vector v) {
    std::sort(v.begin(), v.end(), [](auto const& p, auto const& q) { return p.first < q.first; });
    std::erase_if(v, [](auto const& p) { return p.second == 0; });
    table_[i * d_ + j] = std::move(v);
  }

  RationalAlgebra::Vector RationalAlgebra::multiply(Vector const& a, Vector const& b) const {
    std::map<Index, Rational> acc;
    for (auto const& [i, ci] : a) {
      for (auto const& [j, cj] : b) {
        for (auto const& [k, ck] : product(i, j)) {
          acc[k] += ci * cj * ck;
        }
      }
    }
    Vector out;
    for (auto& [k, c] : acc) {
      if (c != 0) {
        out.emplace_back(k, std::move(c));
      }
    }
    return out;
  }

  bool RationalAlgebra::is_associative() const {
    for (Index i = 0; i < d_; ++i) {
      Vector const bi{{i, Rational(1)}};
      for (Index j = 0; j < d_; ++j) {
        Vector const& ij = product(i, j);
        for (Index k = 0; k < d_; ++k) {
          Vector const bk{{k, Rational(1)}};
          if (multiply(ij, bk) != multiply(bi, product(j, k))) {
            return false;
          }
        }
      }
    }
    return true;
  }

  std::size_t radical_dim(RationalAlgebra const& a) {
    std::size_t const     d = a.dimension();
    std::vector<Rational> trace(d);  // tr(L_{b_k})
    for (Index k = 0; k < d; ++k) {
      for (Index m = 0; m < d; ++m) {
        for (auto const& [t, c] : a.product(k, m)) {
          if (t == m) {
            trace[k] += c;
          }
        }
      }
    }
    RationalMatrix form(d, d);
    for (Index i = 0; i < d; ++i) {
      for (Index j = 0; j < d; ++j) {
        for (auto const& [k, c] : a.product(i, j)) {
          form(i, j) += c * trace[k];
        }
      }
    }
    return d - rank(std::move(form));
  }

  RationalMatrix zeta_matrix(PartialOrder const& order) {
    RationalMatrix z(order.size(), order.size());
    for (std::size_t a = 0; a < order.size(); ++a) {
      for (std::size_t x = 0; x < order.size(); ++x) {
        if (order.leq(a, x)) {
          z(a, x) = 1;
        }
      }
    }
    return z;
  }

  RationalMatrix mobius_inverse(PartialOrder const& order) {
    std::size_t const n   = order.size();
    auto const        ext = order.linear_extension();
    RationalMatrix    mu(n, n);
    for (std::size_t p = 0; p < n; ++p) {
      std::size_t const a = ext[p];
      mu(a, a)            = 1;
      for (std::size_t q = p + 1; q < n; ++q) {
        std::size_t const x = ext[q];
        if (!order.leq(a, x)) {
          continue;
        }
        Rational sum;
        for (std::size_t r = p; r < q; ++r) {
          std::size_t const b = ext[r];
          if (order.leq(a, b) && order.leq(b, x)) {
            sum += mu(a, b);
          }
        }
        mu(a, x) = -sum;
      }
    }
    return mu;
  }

  RationalMatrix stein_transform(Semilattice const& E, Side side) {
    require_restriction(E, side);
    return zeta_matrix(side == Side::left ? leq_r(E) : leq_l(E));
  }

  SteinCheck verify_stein(Semilattice const& E, Side side, std::size_t samples) {
    require_restriction(E, side);
    auto const&             s     = E.parent();
    std::size_t const       m     = s.size();
    auto const              order = side == Side::left ? leq_r(E) : leq_l(E);
    EhresmannCategory const cat(E);
    SteinCheck              out;
    out.unitriangular = is_unitriangular(zeta_matrix(order), order.linear_extension());

    std::vector<std::vector<Index>> below(m);
    for (Index x = 0; x < m; ++x) {
      below[x] = members_below(order, x);
    }
    std::vector<long> coeff(m);
    auto check_pair = [&](Index x, Index y) {
      std::fill(coeff.begin(), coeff.end(), 0);
      for (Index a : below[x]) {
        for (Index b : below[y]) {
          if (auto const ab = cat.compose(a, b)) {
            ++coeff[*ab];
          }
        }
      }
      Index const xy = s.mul(x, y);
      for (Index z = 0; z < m; ++z) {
        if (coeff[z] != (order.leq(z, xy) ? 1 : 0)) {
          return false;
        }
      }
      return true;
    };
    auto record = [&](Index x, Index y) {
      ++out.pairs_checked;
      if (!check_pair(x, y) && out.multiplicative) {
        out.multiplicative = false;
        out.failure        = std::pair{x, y};
      }
    };
    if (m <= kAlgebraLimit) {
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          record(x, y);
        }
      }
    } else {
      std::mt19937_64                      rng(0x5eed);
      std::uniform_int_distribution<Index> pick(0, static_cast<Index>(m - 1));
      for (std::size_t k = 0; k < samples; ++k) {
        Index const x = pick(rng);
        record(x, pick(rng));
      }
    }
    return out;
  }

  QuotientCheck check_semisimple_quotient(Semilattice const& E) {
    auto const& s   = E.parent();
    auto const  rep = check_axioms(E);
    if (!rep.is_ehresmann() || !(rep.holds(Axiom::L3) || rep.holds(Axiom::R3))) {
      throw StateError("(" + s.name() + ", " + E.name()
                       + ") is not a left or right restriction semigroup");
    }
    EhresmannCategory const cat(E);
    if (auto const ei = is_EI(cat); !ei.holds) {
      throw StateError("C(" + s.name() + ", " + E.name()
                       + ") is not an EI-category (endomorphism " + std::to_string(*ei.witness)
                       + " is not invertible); the quotient theorem needs it");
    }
    QuotientCheck out;
    out.dimension   = s.size();
    out.radical     = radical_dim(RationalAlgebra::semigroup_algebra(s));
    auto const reg  = reg_E(E, green(s));
    out.reg_size    = reg.size();
    out.reg_radical = radical_dim(RationalAlgebra::semigroup_algebra(s.restrict_to(reg)));
    return out;
  }

}  // namespace diagmon
