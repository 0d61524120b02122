#include "diagmon/ehresmann.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {

    // One character per member of E: '1' iff that member fixes x on the
    // given side.
    std::string signature(Semilattice const& E, Index x, bool left) {
      auto const& s = E.parent();
      std::string sig(E.size(), '0');
      for (std::size_t k = 0; k < E.size(); ++k) {
        Index const e = E.members()[k];
        if ((left ? s.mul(e, x) : s.mul(x, e)) == x) {
          sig[k] = '1';
        }
      }
      return sig;
    }

    template <typename Key>
    TildeClasses number_by_key(std::vector<Key> const& keys) {
      TildeClasses              out;
      std::map<Key, std::uint32_t> ids;
      out.class_of.reserve(keys.size());
      for (auto const& k : keys) {
        out.class_of.push_back(
            ids.try_emplace(k, static_cast<std::uint32_t>(ids.size())).first->second);
      }
      out.count = ids.size();
      return out;
    }

    // Least (a, b), a < b, in a common class whose images under f fall in
    // different classes of `target`.
    std::optional<std::pair<Index, Index>> first_split(
        std::vector<std::vector<Index>> const& classes,
        std::vector<std::uint32_t> const&      target,
        auto                                   f) {
      std::optional<std::pair<Index, Index>> best;
      for (auto const& cls : classes) {
        if (best && cls.front() > best->first) {
          continue;
        }
        std::uint32_t const base = target[f(cls.front())];
        for (std::size_t k = 1; k < cls.size(); ++k) {
          if (target[f(cls[k])] != base) {
            std::pair<Index, Index> p{cls.front(), cls[k]};
            if (!best || p < *best) {
              best = p;
            }
            break;
          }
        }
      }
      return best;
    }

    std::vector<std::vector<Index>> class_lists(TildeClasses const& t) {
      std::vector<std::vector<Index>> out(t.count);
      for (Index x = 0; x < t.class_of.size(); ++x) {
        out[t.class_of[x]].push_back(x);
      }
      return out;
    }

    AxiomResult unique_representatives(Semilattice const& E, TildeClasses const& t) {
      auto const  lists = class_lists(t);
      AxiomResult r;
      for (auto const& cls : lists) {  // ordered by least member
        std::vector<Index> reps;
        for (Index x : cls) {
          if (E.contains(x)) {
            reps.push_back(x);
          }
        }
        if (reps.size() != 1) {
          r.holds = false;
          r.witness.push_back(cls.front());
          r.witness.insert(r.witness.end(), reps.begin(), reps.end());
          return r;
        }
      }
      return r;
    }

    AxiomResult congruence(Semilattice const&        E,
                           TildeClasses const&       t,
                           std::vector<Index> const& thetas,
                           bool                      left) {
      auto const& s     = E.parent();
      auto const  lists = class_lists(t);
      AxiomResult r;
      for (Index th : thetas) {
        auto const split = first_split(lists, t.class_of, [&](Index x) {
          return left ? s.mul(th, x) : s.mul(x, th);
        });
        if (split) {
          r.holds   = false;
          r.witness = {th, split->first, split->second};
          return r;
        }
      }
      return r;
    }

    // For every x the sorted set Ex (left) or xE (right).
    std::vector<std::vector<Index>> translates(Semilattice const& E, bool left) {
      auto const&                     s = E.parent();
      std::vector<std::vector<Index>> out(s.size());
      for (Index x = 0; x < s.size(); ++x) {
        for (Index e : E.members()) {
          out[x].push_back(left ? s.mul(e, x) : s.mul(x, e));
        }
        std::sort(out[x].begin(), out[x].end());
        out[x].erase(std::unique(out[x].begin(), out[x].end()), out[x].end());
      }
      return out;
    }

    bool member(std::vector<Index> const& sorted, Index x) {
      return std::binary_search(sorted.begin(), sorted.end(), x);
    }

    // L3: first (x, e) with xe outside Ex; R3: first (x, e) with ex outside xE.
    AxiomResult containment(Semilattice const& E, bool left_axiom) {
      auto const& s      = E.parent();
      auto const  target = translates(E, left_axiom);
      AxiomResult r;
      for (Index x = 0; x < s.size(); ++x) {
        for (Index e : E.members()) {
          Index const p = left_axiom ? s.mul(x, e) : s.mul(e, x);
          if (!member(target[x], p)) {
            r.holds   = false;
            r.witness = {x, e};
            return r;
          }
        }
      }
      return r;
    }

    std::vector<Index> representatives(Semilattice const& E, TildeClasses const& t) {
      std::vector<Index> rep_of_class(t.count, 0);
      for (Index e : E.members()) {
        rep_of_class[t.class_of[e]] = e;
      }
      std::vector<Index> out(t.class_of.size());
      for (Index x = 0; x < out.size(); ++x) {
        out[x] = rep_of_class[t.class_of[x]];
      }
      return out;
    }

    std::vector<Index> select(std::size_t m, auto pred) {
      std::vector<Index> out;
      for (Index x = 0; x < m; ++x) {
        if (pred(x)) {
          out.push_back(x);
        }
      }
      return out;
    }

  }  // namespace

  std::vector<Index> TildeClasses::members(std::uint32_t c) const {
    std::vector<Index> out;
    for (Index x = 0; x < class_of.size(); ++x) {
      if (class_of[x] == c) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Index> e_left(Semilattice const& E, Index x) {
    std::vector<Index> out;
    for (Index e : E.members()) {
      if (E.parent().mul(e, x) == x) {
        out.push_back(e);
      }
    }
    return out;
  }

  std::vector<Index> e_right(Semilattice const& E, Index x) {
    std::vector<Index> out;
    for (Index e : E.members()) {
      if (E.parent().mul(x, e) == x) {
        out.push_back(e);
      }
    }
    return out;
  }

  TildeClasses tilde_classes(Semilattice const& E, Tilde kind) {
    std::size_t const m = E.parent().size();
    if (kind == Tilde::H) {
      auto const                                 r = tilde_classes(E, Tilde::R);
      auto const                                 l = tilde_classes(E, Tilde::L);
      std::vector<std::pair<std::uint32_t, std::uint32_t>> keys(m);
      for (Index x = 0; x < m; ++x) {
        keys[x] = {r.class_of[x], l.class_of[x]};
      }
      return number_by_key(keys);
    }
    std::vector<std::string> keys(m);
    for (Index x = 0; x < m; ++x) {
      keys[x] = signature(E, x, kind == Tilde::R);
    }
    return number_by_key(keys);
  }

  std::string_view axiom_name(Axiom a) {
    switch (a) {
      case Axiom::L1: return "L1";
      case Axiom::R1: return "R1";
      case Axiom::L2: return "L2";
      case Axiom::R2: return "R2";
      case Axiom::L3: return "L3";
      case Axiom::R3: return "R3";
    }
    return "?";
  }

  EhresmannReport check_axioms(Semilattice const& E, SweepPolicy policy) {
    auto const&     s = E.parent();
    EhresmannReport rep;
    auto const      rt = tilde_classes(E, Tilde::R);
    auto const      lt = tilde_classes(E, Tilde::L);
    rep.r_classes      = rt.count;
    rep.l_classes      = lt.count;
    rep.h_classes      = tilde_classes(E, Tilde::H).count;

    bool const exhaustive =
        policy == SweepPolicy::exhaustive
        || (policy == SweepPolicy::automatic && s.size() <= kExhaustiveSweepLimit);
    rep.sweep = exhaustive ? Sweep::exhaustive : Sweep::generators;
    std::vector<Index> thetas;
    if (exhaustive) {
      thetas = select(s.size(), [](Index) { return true; });
    } else {
      thetas = s.generators();
    }

    rep[Axiom::L1] = unique_representatives(E, rt);
    rep[Axiom::R1] = unique_representatives(E, lt);
    rep[Axiom::L2] = congruence(E, rt, thetas, true);
    rep[Axiom::R2] = congruence(E, lt, thetas, false);
    rep[Axiom::L3] = containment(E, true);
    rep[Axiom::R3] = containment(E, false);
    if (rep.holds(Axiom::L1)) {
      rep.plus = representatives(E, rt);
    }
    if (rep.holds(Axiom::R1)) {
      rep.star = representatives(E, lt);
    }
    return rep;
  }

  bool witness_refutes(Semilattice const& E, Axiom a, std::vector<Index> const& w) {
    auto const& s = E.parent();
    for (Index x : w) {
      if (x >= s.size()) {
        return false;
      }
    }
    switch (a) {
      case Axiom::L1:
      case Axiom::R1: {
        if (w.empty()) {
          return false;
        }
        auto const t   = tilde_classes(E, a == Axiom::L1 ? Tilde::R : Tilde::L);
        auto const cls = t.members(t.class_of[w[0]]);
        auto const n   = std::count_if(cls.begin(), cls.end(), [&](Index x) { return E.contains(x); });
        return n != 1;
      }
      case Axiom::L2:
      case Axiom::R2: {
        if (w.size() != 3) {
          return false;
        }
        bool const left = a == Axiom::L2;
        auto const sig  = [&](Index x) { return left ? e_left(E, x) : e_right(E, x); };
        Index const ta  = left ? s.mul(w[0], w[1]) : s.mul(w[1], w[0]);
        Index const tb  = left ? s.mul(w[0], w[2]) : s.mul(w[2], w[0]);
        return sig(w[1]) == sig(w[2]) && sig(ta) != sig(tb);
      }
      case Axiom::L3:
      case Axiom::R3: {
        if (w.size() != 2 || !E.contains(w[1])) {
          return false;
        }
        bool const  left = a == Axiom::L3;
        Index const p    = left ? s.mul(w[0], w[1]) : s.mul(w[1], w[0]);
        for (Index f : E.members()) {
          if ((left ? s.mul(f, w[0]) : s.mul(w[0], f)) == p) {
            return false;
          }
        }
        return true;
      }
    }
    return false;
  }

  PlusStar plus_star(Semilattice const& E) {
    auto const rt = tilde_classes(E, Tilde::R);
    auto const lt = tilde_classes(E, Tilde::L);
    if (!unique_representatives(E, rt).holds) {
      throw StateError("x -> x+ needs every R~ class to hold exactly one element of E");
    }
    if (!unique_representatives(E, lt).holds) {
      throw StateError("x -> x* needs every L~ class to hold exactly one element of E");
    }
    return PlusStar{representatives(E, rt), representatives(E, lt)};
  }

  RestSets rest_subsemigroups(Semilattice const& E) {
    auto const& s    = E.parent();
    auto const  ex   = translates(E, true);   // Ex
    auto const  xe   = translates(E, false);  // xE
    auto const  incl = [](std::vector<Index> const& a, std::vector<Index> const& b) {
      return std::includes(b.begin(), b.end(), a.begin(), a.end());
    };
    RestSets r;
    r.left  = select(s.size(), [&](Index x) { return incl(xe[x], ex[x]); });
    r.right = select(s.size(), [&](Index x) { return incl(ex[x], xe[x]); });
    std::set_intersection(r.left.begin(), r.left.end(), r.right.begin(), r.right.end(),
                          std::back_inserter(r.both));
    r.left_closed  = is_closed(s, r.left);
    r.right_closed = is_closed(s, r.right);
    r.both_closed  = is_closed(s, r.both);
    r.contain_E    = incl(E.members(), r.both);
    return r;
  }

  std::vector<Index> reg_E(Semilattice const& E, GreenStructure const& g) {
    auto const&       s = E.parent();
    std::vector<bool> r_hit(g.R.num_classes(), false), l_hit(g.L.num_classes(), false);
    for (Index e : E.members()) {
      r_hit[g.R.class_of[e]] = true;
      l_hit[g.L.class_of[e]] = true;
    }
    return select(s.size(),
                  [&](Index x) { return r_hit[g.R.class_of[x]] && l_hit[g.L.class_of[x]]; });
  }

  TildeHClass tilde_H_class(Semilattice const& E, Index e) {
    if (!E.contains(e)) {
      throw ValidationError("element " + std::to_string(e) + " is not in the semilattice");
    }
    auto const& s = E.parent();
    auto const  h = tilde_classes(E, Tilde::H);
    TildeHClass out;
    out.members = h.members(h.class_of[e]);
    for (Index a : out.members) {
      for (Index b : out.members) {
        if (h.class_of[s.mul(a, b)] != h.class_of[e]) {
          out.closed  = false;
          out.witness = std::pair{a, b};
          return out;
        }
      }
    }
    return out;
  }

  PartialOrder leq_r(Semilattice const& E) {
    auto const&  s = E.parent();
    PartialOrder order(s.size());
    for (Index y = 0; y < s.size(); ++y) {
      for (Index e : E.members()) {
        order.set(s.mul(e, y), y);
      }
    }
    return order;
  }

  PartialOrder leq_l(Semilattice const& E) {
    auto const&  s = E.parent();
    PartialOrder order(s.size());
    for (Index y = 0; y < s.size(); ++y) {
      for (Index e : E.members()) {
        order.set(s.mul(y, e), y);
      }
    }
    return order;
  }

}  // namespace diagmon
