#include <algorithm>
#include <array>
#include <exception>
#include <functional>
#include <set>
#include <stdexcept>

#include "diagmon/cat_algebra.hpp"
#include "diagmon/diagram_forms.hpp"
#include "diagmon/dot.hpp"
#include "diagmon/ehresmann.hpp"
#include "diagmon/green.hpp"
#include "diagmon/verify.hpp"
#include "diagmon/zoo.hpp"

namespace diagmon {

  namespace {

    class Recorder {
     public:
      void operator()(std::string label, bool pass, std::string detail = "") {
        checks_.push_back({std::move(label), pass, pass ? "" : std::move(detail)});
      }
      std::vector<Check> take() { return std::move(checks_); }

     private:
      std::vector<Check> checks_;
    };

    std::string num(std::size_t x) { return std::to_string(x); }

    std::string expected(std::size_t got, std::size_t want) {
      return "got " + num(got) + ", expected " + num(want);
    }

    struct Analysis {
      FamilySpec          spec;
      FiniteMonoid const* s;
      Semilattice         E;

      Analysis(FamilySpec sp, SemilatticeKind kind)
          : spec(sp), s(&cached_build(sp)), E(make_semilattice(*s, sp, kind)) {}

      std::string name() const { return "(" + spec.name() + ", " + E.name() + ")"; }
      Partition const& part(Index i) const { return std::get<Partition>(s->element(i)); }
      BinaryRelation const& rel(Index i) const { return std::get<BinaryRelation>(s->element(i)); }
      Index index(Element const& e) const {
        auto const i = s->index_of(e);
        if (!i) {
          throw std::logic_error("element missing from " + spec.name());
        }
        return *i;
      }
    };

    std::set<Element> set_of(FiniteMonoid const& s, std::vector<Index> const& idx) {
      std::set<Element> out;
      for (Index i : idx) {
        out.insert(s.element(i));
      }
      return out;
    }

    std::set<Element> set_of(FamilySpec const& spec) {
      auto const& s = cached_build(spec);
      return {s.elements().begin(), s.elements().end()};
    }

    std::vector<Index> sorted_indices(Analysis const& a, std::vector<Partition> const& ps) {
      std::vector<Index> out;
      for (auto const& p : ps) {
        out.push_back(a.index(p));
      }
      std::sort(out.begin(), out.end());
      return out;
    }

    bool ehresmann_four(EhresmannReport const& r) { return r.is_ehresmann(); }

    std::string failing_axioms(EhresmannReport const& r) {
      std::string out;
      for (Axiom a : kAllAxioms) {
        if (!r.holds(a)) {
          out += (out.empty() ? "" : " ") + std::string(axiom_name(a));
        }
      }
      return out.empty() ? "none" : out;
    }

    // 1 -----------------------------------------------------------------
    void worked_example(Recorder& rec, std::size_t) {
      auto const& w = witness_sets();
      auto const  expect =
          Partition::from_blocks(6, {{1, 4}, {2, 3, -1, -4, -5, -6}, {5, 6}, {-2}, {-3}});
      rec("worked example: product of alpha and beta", w.alpha6 * w.beta6 == expect);
      auto const pa = params(w.alpha6);
      auto const pb = params(w.beta6);
      rec("worked example: rank(alpha) = 1", pa.rank == 1, "rank " + num(pa.rank));
      std::vector<int> const dom{2, 3};
      rec("worked example: dom(alpha) = {2,3}", pa.dom == Subset::from_points(6, dom));
      std::vector<int> const supp{1, 2, 3, 4, 5};
      std::vector<int> const cosupp{1, 4, 5, 6};
      rec("worked example: supp(beta) = {1,2,3,4,5}", pb.supp == Subset::from_points(6, supp));
      rec("worked example: cosupp(beta) = {1,4,5,6}",
          pb.cosupp == Subset::from_points(6, cosupp));
    }

    // 2 -----------------------------------------------------------------
    void f_ehresmann(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const a({Family::P, n}, SemilatticeKind::F_of_J);
        auto const     r = check_axioms(a.E);
        std::string    sweep = r.sweep == Sweep::exhaustive ? "exhaustive" : "generators";
        rec(a.name() + " satisfies L1 R1 L2 R2 (" + sweep + " sweep)", ehresmann_four(r),
            "failing: " + failing_axioms(r));
      }
    }

    // 3 -----------------------------------------------------------------
    void not_e_ehresmann(Recorder& rec, std::size_t nmax) {
      if (nmax < 2) {
        return;
      }
      Analysis const a({Family::P, 2}, SemilatticeKind::E_of_I);
      auto const     r = check_axioms(a.E);
      rec(a.name() + " fails L2", !r.holds(Axiom::L2));
      rec(a.name() + " fails R2", !r.holds(Axiom::R2));
      rec(a.name() + " reported L2 witness re-verifies",
          !r.holds(Axiom::L2) && witness_refutes(a.E, Axiom::L2, r[Axiom::L2].witness));
      rec(a.name() + " reported R2 witness re-verifies",
          !r.holds(Axiom::R2) && witness_refutes(a.E, Axiom::R2, r[Axiom::R2].witness));
      auto const& w = witness_sets();
      std::vector<Index> const triple{a.index(w.not_e_theta), a.index(w.not_e_alpha),
                                      a.index(w.not_e_beta)};
      rec(a.name() + " fixed triple refutes L2", witness_refutes(a.E, Axiom::L2, triple));
      rec(a.name() + " fixed triple refutes R2", witness_refutes(a.E, Axiom::R2, triple));
      rec("supp(alpha) = supp(beta)", params(w.not_e_alpha).supp == params(w.not_e_beta).supp);
      rec("supp(theta alpha) != supp(theta beta)",
          params(w.not_e_theta * w.not_e_alpha).supp != params(w.not_e_theta * w.not_e_beta).supp);
    }

    // 4 -----------------------------------------------------------------
    void relations(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const a({Family::BX, n}, SemilatticeKind::E_of_I);
        auto const&    s = *a.s;
        auto const     r = check_axioms(a.E);
        rec(a.name() + " is Ehresmann", ehresmann_four(r), "failing: " + failing_axioms(r));

        std::vector<RelationParams> ps;
        for (Index x = 0; x < s.size(); ++x) {
          ps.push_back(rel_params(a.rel(x)));
        }
        auto const rt = tilde_classes(a.E, Tilde::R);
        auto const lt = tilde_classes(a.E, Tilde::L);
        bool       tilde_ok = true;
        for (Index x = 0; x < s.size() && tilde_ok; ++x) {
          for (Index y = 0; y < s.size(); ++y) {
            if ((rt.class_of[x] == rt.class_of[y]) != (ps[x].dom == ps[y].dom)
                || (lt.class_of[x] == lt.class_of[y]) != (ps[x].codom == ps[y].codom)) {
              tilde_ok = false;
              break;
            }
          }
        }
        rec(a.name() + " R~ is equal domain, L~ equal codomain", tilde_ok);

        auto const rest = rest_subsemigroups(a.E);
        rec(a.name() + " Rest_L = PT" + num(n),
            set_of(s, rest.left) == set_of({Family::PT, n}),
            expected(rest.left.size(), cached_build({Family::PT, n}).size()));
        rec(a.name() + " Rest = I" + num(n), set_of(s, rest.both) == set_of({Family::I, n}),
            expected(rest.both.size(), cached_build({Family::I, n}).size()));
        auto const reg = reg_E(a.E, green(s));
        rec(a.name() + " Reg_E = I" + num(n), set_of(s, reg) == set_of({Family::I, n}),
            expected(reg.size(), cached_build({Family::I, n}).size()));

        Analysis const pt({Family::PT, n}, SemilatticeKind::E_of_I);
        auto const     ei = is_EI(EhresmannCategory(pt.E));
        rec("C" + pt.name() + " is EI", ei.holds,
            ei.witness ? "endomorphism " + num(*ei.witness) + " is not invertible" : "");
      }
    }

    // 5 -----------------------------------------------------------------
    void identity_sets(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const e({Family::P, n}, SemilatticeKind::E_of_I);
        Analysis const f({Family::P, n}, SemilatticeKind::F_of_J);
        std::size_t    bad_e = 0, bad_f = 0;
        for (Index x = 0; x < e.s->size(); ++x) {
          auto const& p = e.part(x);
          bad_e += e_left(e.E, x) != sorted_indices(e, e_left_closed(p));
          bad_e += e_right(e.E, x) != sorted_indices(e, e_right_closed(p));
          bad_f += e_left(f.E, x) != sorted_indices(f, f_left_closed(p));
          bad_f += e_right(f.E, x) != sorted_indices(f, f_right_closed(p));
        }
        rec(e.name() + " E_L and E_R match supp/cosupp over " + num(e.s->size()) + " elements",
            bad_e == 0, num(bad_e) + " mismatches");
        rec(f.name() + " F_L and F_R match ker/coker over " + num(f.s->size()) + " elements",
            bad_f == 0, num(bad_f) + " mismatches");

        auto const  rt = tilde_classes(f.E, Tilde::R);
        auto const  lt = tilde_classes(f.E, Tilde::L);
        auto const  re = tilde_classes(e.E, Tilde::R);
        std::size_t bad = 0;
        for (Index x = 0; x < f.s->size(); ++x) {
          auto const px = params(f.part(x));
          for (Index y = 0; y < f.s->size(); ++y) {
            auto const py = params(f.part(y));
            bad += (rt.class_of[x] == rt.class_of[y]) != (px.ker == py.ker);
            bad += (lt.class_of[x] == lt.class_of[y]) != (px.coker == py.coker);
            bad += (re.class_of[x] == re.class_of[y]) != (px.supp == py.supp);
          }
        }
        rec("P" + num(n) + " R~_F, L~_F, R~_E match ker, coker, supp", bad == 0,
            num(bad) + " mismatched pairs");
      }
    }

    // 6 -----------------------------------------------------------------
    void natural_orders(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const f({Family::P, n}, SemilatticeKind::F_of_J);
        Analysis const e({Family::P, n}, SemilatticeKind::E_of_I);
        auto const     r  = leq_r(f.E);
        auto const     l  = leq_l(f.E);
        auto const     re = leq_r(e.E);
        std::size_t    bad_r = 0, bad_l = 0, bad_e = 0, bad_refine = 0;
        for (Index x = 0; x < f.s->size(); ++x) {
          for (Index y = 0; y < f.s->size(); ++y) {
            auto const& a = f.part(x);
            auto const& b = f.part(y);
            bad_r += r.leq(x, y) != leq_r_f_closed(a, b);
            bad_l += l.leq(x, y) != leq_l_f_closed(a, b);
            bad_e += re.leq(x, y) != leq_r_e_closed(a, b);
            bad_refine += re.leq(x, y) && !refines(a, b);
          }
        }
        std::string const pn = "P" + num(n);
        rec(pn + " a in Fb iff b refines a and lower non-transversals of b survive", bad_r == 0,
            num(bad_r) + " mismatched pairs");
        rec(pn + " a in bF iff b refines a and upper non-transversals of b survive", bad_l == 0,
            num(bad_l) + " mismatched pairs");
        rec(pn + " a in Eb iff a detaches upper vertices of b", bad_e == 0,
            num(bad_e) + " mismatched pairs");
        rec(pn + " a in Eb implies a refines b", bad_refine == 0);
        rec(pn + " both orders are partial orders", r.is_partial_order() && re.is_partial_order());
      }
    }

    // 7 -----------------------------------------------------------------
    void regular_parts(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const f({Family::P, n}, SemilatticeKind::F_of_J);
        Analysis const e({Family::P, n}, SemilatticeKind::E_of_I);
        auto const&    s  = *f.s;
        auto const     g  = green(s);
        auto const     rf = reg_E(f.E, g);
        auto const     re = reg_E(e.E, g);
        rec(f.name() + " Reg_F = J" + num(n), set_of(s, rf) == set_of({Family::J, n}),
            expected(rf.size(), cached_build({Family::J, n}).size()));
        rec(e.name() + " Reg_E = I" + num(n) + " (as partitions)",
            set_of(s, re) == set_of({Family::IP, n}),
            expected(re.size(), cached_build({Family::IP, n}).size()));
        rec("Reg_F(P" + num(n) + ") and Reg_E(P" + num(n) + ") are inverse",
            is_inverse(s.restrict_to(rf)) && is_inverse(s.restrict_to(re)));
        std::size_t bad = 0;
        for (Index eps : f.E.members()) {
          auto const     h = tilde_H_class(f.E, eps);
          unsigned const m = static_cast<unsigned>(params(f.part(eps)).ker.num_classes());
          bad += !h.closed || h.members.size() != counting::partial_bijections(m);
        }
        rec(f.name() + " each H~ class of id_eps is a monoid of size sum C(m,k)^2 k!", bad == 0,
            num(bad) + " classes differ");
      }
      if (nmax >= 3) {
        Analysis const e({Family::P, 3}, SemilatticeKind::E_of_I);
        auto const&    w  = witness_sets();
        auto const     h  = tilde_H_class(e.E, *e.s->identity());
        auto const     in = [&](Partition const& p) {
          return std::find(h.members.begin(), h.members.end(), e.index(p)) != h.members.end();
        };
        rec(e.name() + " H~ class of the identity is not closed", !h.closed);
        rec(e.name() + " fixed pair lies in the class, its product does not",
            in(w.h_alpha) && in(w.h_beta) && !in(w.h_alpha * w.h_beta));
      }
    }

    // 8 -----------------------------------------------------------------
    void restriction_parts(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const f({Family::P, n}, SemilatticeKind::F_of_J);
        auto const&    s    = *f.s;
        auto const     rest = rest_subsemigroups(f.E);
        std::vector<Index> closed_form;
        for (Index x = 0; x < s.size(); ++x) {
          if (right_restriction_f_closed(f.part(x))) {
            closed_form.push_back(x);
          }
        }
        rec(f.name() + " {x : Fx in xF} = {dom = X or ker universal}", rest.right == closed_form,
            expected(rest.right.size(), closed_form.size()));
        auto want = set_of({Family::J, n});
        want.insert(zeta(n));
        rec(f.name() + " Rest = J" + num(n) + " plus zeta", set_of(s, rest.both) == want,
            expected(rest.both.size(), want.size()));
        if (n >= 1) {
          std::size_t const size = counting::block_bijections(static_cast<unsigned>(n)) + 1;
          rec(f.name() + " |Rest| = " + num(size), rest.both.size() == size,
              expected(rest.both.size(), size));
        }
        Index const z       = f.index(zeta(n));
        bool        is_zero = true;
        for (Index x : rest.both) {
          is_zero = is_zero && s.mul(z, x) == z && s.mul(x, z) == z;
        }
        rec(f.name() + " zeta is a zero of Rest", is_zero);
        rec(f.name() + " Rest_L, Rest_R, Rest are closed and contain F",
            rest.left_closed && rest.right_closed && rest.both_closed && rest.contain_E);
      }
    }

    // 9 -----------------------------------------------------------------
    void pfd_rr(Recorder& rec, std::size_t nmax) {
      for (std::size_t n = 1; n <= nmax; ++n) {
        for (Family fam : {Family::Pfd, Family::RR}) {
          FamilySpec const    spec{fam, n};
          auto const&         s    = cached_build(spec);
          std::string const   name = spec.name();
          auto const          g    = green(s);
          rec(name + " is regular", is_regular(s));

          std::vector<PartitionParams> ps;
          for (auto const& x : s.elements()) {
            ps.push_back(params(std::get<Partition>(x)));
          }
          std::size_t bad = 0;
          for (Index x = 0; x < s.size(); ++x) {
            for (Index y = 0; y < s.size(); ++y) {
              bad += g.R.related(x, y) != (ps[x].dom == ps[y].dom && ps[x].ker == ps[y].ker);
              bad += g.L.related(x, y) != (ps[x].codom == ps[y].codom && ps[x].coker == ps[y].coker);
              bad += (g.D[x] == g.D[y]) != (ps[x].rank == ps[y].rank);
            }
          }
          rec(name + " R, L, D are dom+ker, codom+coker, rank", bad == 0,
              num(bad) + " mismatched pairs");
          std::size_t const want_d = fam == Family::RR ? n + 1 : n;
          rec(name + " has " + num(want_d) + " D-classes", g.num_d == want_d,
              expected(g.num_d, want_d));
          rec(name + " D = J", g.d_equals_j);
          rec(name + " ideals form a chain", ideals_form_chain(g));

          auto const box   = eggbox(s, g);
          bool       chain = box.hasse.size() + 1 == box.classes.size();
          for (std::size_t k = 0; k < box.hasse.size(); ++k) {
            chain = chain && box.hasse[k] == std::pair{k, k + 1};
          }
          rec(name + " D-classes form a chain", chain);
          bool groups_ok = true;
          for (auto const& d : box.classes) {
            for (std::size_t r = 0; r < d.rows.size(); ++r) {
              for (std::size_t c = 0; c < d.cols.size(); ++c) {
                if (d.group[r][c]) {
                  Index const any = d.cells[r][c].front();
                  groups_ok = groups_ok
                              && d.cells[r][c].size()
                                     == counting::factorial(static_cast<unsigned>(ps[any].rank));
                }
              }
            }
          }
          rec(name + " group H-classes in rank mu have order mu!", groups_ok);

          Family const     bottom = fam == Family::RR ? Family::D0 : Family::D1;
          auto const       rz     = right_zeros(s);
          rec(name + " its bottom D-class consists of right zeros",
              set_of(s, rz) == set_of({bottom, n}),
              expected(rz.size(), cached_build({bottom, n}).size()));

          if (fam == Family::RR) {
            auto const dot      = eggbox_dot(s, box);
            std::size_t clusters = 0;
            for (std::size_t p = dot.find("subgraph cluster_"); p != std::string::npos;
                 p        = dot.find("subgraph cluster_", p + 1)) {
              ++clusters;
            }
            rec(name + " egg-box DOT has " + num(n + 1) + " clusters", clusters == n + 1,
                expected(clusters, n + 1));
          }
        }
      }
    }

    // 10 ----------------------------------------------------------------
    struct SteinCase {
      FamilySpec      spec;
      SemilatticeKind kind;
      Side            side;
    };
    constexpr std::array<SteinCase, 4> kSteinCases{{
        {{Family::PT, 2}, SemilatticeKind::E_of_I, Side::left},
        {{Family::PT, 3}, SemilatticeKind::E_of_I, Side::left},
        {{Family::Pfd, 2}, SemilatticeKind::F_of_J, Side::right},
        {{Family::Pfd, 3}, SemilatticeKind::F_of_J, Side::right},
    }};

    void stein(Recorder& rec, std::size_t nmax) {
      for (auto const& c : kSteinCases) {
        if (c.spec.n > nmax) {
          continue;
        }
        Analysis const    a(c.spec, c.kind);
        std::string const side = c.side == Side::left ? "left" : "right";
        auto const        r    = verify_stein(a.E, c.side);
        rec(a.name() + " " + side + " Stein map is multiplicative on " + num(r.pairs_checked)
                + " pairs",
            r.multiplicative,
            r.failure ? "fails at (" + num(r.failure->first) + ", " + num(r.failure->second) + ")"
                      : "");
        rec(a.name() + " " + side + " transform is unitriangular", r.unitriangular);
        auto const z     = stein_transform(a.E, c.side);
        auto const order = c.side == Side::left ? leq_r(a.E) : leq_l(a.E);
        auto const inv   = inverse(z);
        rec(a.name() + " " + side + " inverse transform is the Moebius matrix",
            inv && *inv == mobius_inverse(order));
      }
    }

    // 11 ----------------------------------------------------------------
    void quotients(Recorder& rec, std::size_t nmax) {
      struct Case {
        FamilySpec      spec;
        SemilatticeKind kind;
        Family          reg_family;
      };
      constexpr std::array<Case, 3> cases{{
          {{Family::PT, 2}, SemilatticeKind::E_of_I, Family::I},
          {{Family::PT, 3}, SemilatticeKind::E_of_I, Family::I},
          {{Family::Pfd, 2}, SemilatticeKind::F_of_J, Family::J},
      }};
      for (auto const& c : cases) {
        if (c.spec.n > nmax) {
          continue;
        }
        Analysis const    a(c.spec, c.kind);
        auto const        q    = check_semisimple_quotient(a.E);
        auto const        n    = static_cast<unsigned>(c.spec.n);
        std::size_t const want = c.reg_family == Family::I ? counting::partial_bijections(n)
                                                           : counting::block_bijections(n);
        rec(a.name() + " dim K[S] - dim Rad = " + num(want), q.dimension - q.radical == want,
            expected(q.dimension - q.radical, want));
        rec(a.name() + " |Reg| = " + num(want), q.reg_size == want, expected(q.reg_size, want));
        rec(a.name() + " K[Reg] is semisimple", q.reg_radical == 0,
            "radical dimension " + num(q.reg_radical));
      }
    }

    // 12 ----------------------------------------------------------------
    void brauer_rook(Recorder& rec, std::size_t nmax) {
      auto const& w = witness_sets();
      if (nmax >= 2) {
        Analysis const a({Family::PB, 2}, SemilatticeKind::E_of_I);
        auto const     r = check_axioms(a.E);
        rec(a.name() + " fails L2", !r.holds(Axiom::L2));
        rec(a.name() + " fixed triple refutes L2",
            witness_refutes(a.E, Axiom::L2,
                            {a.index(w.not_e_theta), a.index(w.not_e_alpha), a.index(w.not_e_beta)}));
      }
      for (std::size_t n = 0; n <= nmax; ++n) {
        Analysis const a({Family::PB, n}, SemilatticeKind::E_of_I);
        auto const     reg = reg_E(a.E, green(*a.s));
        rec(a.name() + " Reg_E = I" + num(n) + " (as partitions)",
            set_of(*a.s, reg) == set_of({Family::IP, n}));
        std::size_t bad = 0;
        for (Index ida : a.E.members()) {
          auto const     h = tilde_H_class(a.E, ida);
          unsigned const k = static_cast<unsigned>(params(a.part(ida)).dom.size());
          bad += !h.closed || h.members.size() != counting::double_factorial_odd(k);
        }
        rec(a.name() + " H~ class of id_A has (2|A|-1)!! elements", bad == 0,
            num(bad) + " classes differ");

        auto const t = tower_maps(n);
        rec("P" + num(n) + " -> RP" + num(n) + " -> P" + num(n + 1) + " are embeddings",
            check_embedding(t.p_to_rp, cached_build({Family::P, n}), cached_build({Family::RP, n}))
                && check_embedding(t.rp_to_p, cached_build({Family::RP, n}),
                                   cached_build({Family::P, n + 1})));

        Analysis const g({Family::RP, n}, SemilatticeKind::G_rook);
        if (n <= 2) {
          auto const r = check_axioms(g.E, SweepPolicy::exhaustive);
          rec(g.name() + " satisfies L1 R1 L2 R2 (exhaustive sweep)", r.is_ehresmann(),
              "failing: " + failing_axioms(r));
        }
        auto const rg = reg_E(g.E, green(*g.s));
        rec(g.name() + " Reg_G = RJ" + num(n), set_of(*g.s, rg) == set_of({Family::RJ, n}),
            expected(rg.size(), cached_build({Family::RJ, n}).size()));
      }
      if (nmax >= 2) {
        Analysis const f({Family::RP, 2}, SemilatticeKind::F_of_J);
        rec(f.name() + " fixed triple shows R~_F is not a left congruence",
            witness_refutes(f.E, Axiom::L2,
                            {f.index(w.rook_theta), f.index(w.rook_alpha), f.index(w.rook_beta)}));
      }
    }

    // 13 ----------------------------------------------------------------
    void counts(Recorder& rec, std::size_t nmax) {
      for (unsigned n = 0; n <= nmax; ++n) {
        auto size = [&](Family f) { return cached_build({f, n}).size(); };
        std::string const s = num(n);
        rec("|P" + s + "| = Bell(" + num(2 * n) + ")", size(Family::P) == counting::bell(2 * n),
            expected(size(Family::P), counting::bell(2 * n)));
        rec("|I" + s + "| = sum C(n,k)^2 k!", size(Family::I) == counting::partial_bijections(n),
            expected(size(Family::I), counting::partial_bijections(n)));
        rec("|J" + s + "| = sum S(n,k)^2 k!", size(Family::J) == counting::block_bijections(n),
            expected(size(Family::J), counting::block_bijections(n)));
        rec("|B" + s + "| = (2n-1)!!", size(Family::B) == counting::double_factorial_odd(n),
            expected(size(Family::B), counting::double_factorial_odd(n)));
        rec("|T" + s + "| = n^n", size(Family::T) == counting::power(n, n),
            expected(size(Family::T), counting::power(n, n)));
        rec("|PT" + s + "| = (n+1)^n", size(Family::PT) == counting::power(n + 1, n),
            expected(size(Family::PT), counting::power(n + 1, n)));
      }
    }

    using Runner = void (*)(Recorder&, std::size_t);

    struct Entry {
      Criterion meta;
      Runner    run;
    };

    constexpr std::array<Entry, kNumCriteria> kEntries{{
        {{1, "worked example in P_6", "partitions", 6}, worked_example},
        {{2, "P_n is F-Ehresmann", "partitions", 4}, f_ehresmann},
        {{3, "P_2 is not E-Ehresmann", "partitions", 2}, not_e_ehresmann},
        {{4, "binary relations under E", "relations", 3}, relations},
        {{5, "identity sets in closed form", "partitions", 3}, identity_sets},
        {{6, "natural orders in closed form", "partitions", 3}, natural_orders},
        {{7, "regular parts and tilde-H monoids", "partitions", 3}, regular_parts},
        {{8, "restriction subsemigroups of P_n", "partitions", 3}, restriction_parts},
        {{9, "structure of Pfd_n and RR_n", "partitions", 4}, pfd_rr},
        {{10, "Stein transform", "general", 3}, stein},
        {{11, "semisimple quotient dimensions", "general", 3}, quotients},
        {{12, "Brauer and rook partition monoids", "brauer-rook", 3}, brauer_rook},
        {{13, "counting", "general", 4}, counts},
    }};

    std::array<Criterion, kNumCriteria> const kCriteria = [] {
      std::array<Criterion, kNumCriteria> out{};
      for (std::size_t k = 0; k < kNumCriteria; ++k) {
        out[k] = kEntries[k].meta;
      }
      return out;
    }();

  }  // namespace

  std::span<Criterion const> criteria() { return kCriteria; }

  std::vector<Check> run_criterion(int id, std::optional<std::size_t> nmax) {
    if (id < 1 || id > kNumCriteria) {
      throw std::out_of_range("no criterion " + std::to_string(id));
    }
    auto const& e = kEntries[static_cast<std::size_t>(id - 1)];
    Recorder    rec;
    try {
      e.run(rec, std::min(nmax.value_or(e.meta.cap), e.meta.cap));
    } catch (std::exception const& ex) {
      rec(std::string(e.meta.title) + " raised an error", false, ex.what());
    }
    return rec.take();
  }

  std::optional<std::vector<int>> section_criteria(std::string_view section) {
    static constexpr std::array<std::pair<std::string_view, std::string_view>, 4> kAliases{{
        {"2", "general"}, {"3", "relations"}, {"4", "partitions"}, {"5", "brauer-rook"}}};
    for (auto const& [alias, name] : kAliases) {
      if (section == alias) {
        section = name;
      }
    }
    std::vector<int> out;
    for (auto const& c : kCriteria) {
      if (section == "all" || section == c.group) {
        out.push_back(c.id);
      }
    }
    if (out.empty()) {
      return std::nullopt;
    }
    return out;
  }

}  // namespace diagmon
