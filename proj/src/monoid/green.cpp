#include "diagmon/green.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

namespace diagmon {

  namespace {

    constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

    // Strongly connected components (iterative Tarjan) and their
    // reachability closure, relabelled by least member.
    GreenRelation condense(std::vector<std::vector<Index>> const& adj) {
      std::size_t const          m = adj.size();
      std::vector<std::uint32_t> index(m, kUnset), low(m, 0), comp(m, kUnset);
      std::vector<Index>         stack;
      std::vector<bool>          on_stack(m, false);
      std::uint32_t              counter = 0, num_comps = 0;
      std::vector<Bitset>        reach;  // in completion order

      struct Frame {
        Index       v;
        std::size_t next;
      };
      std::vector<Frame> call;

      for (Index root = 0; root < m; ++root) {
        if (index[root] != kUnset) {
          continue;
        }
        call.push_back({root, 0});
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
          auto& f = call.back();
          if (f.next < adj[f.v].size()) {
            Index const w = adj[f.v][f.next++];
            if (index[w] == kUnset) {
              index[w] = low[w] = counter++;
              stack.push_back(w);
              on_stack[w] = true;
              call.push_back({w, 0});
            } else if (on_stack[w]) {
              low[f.v] = std::min(low[f.v], index[w]);
            }
            continue;
          }
          Index const v = f.v;
          call.pop_back();
          if (!call.empty()) {
            low[call.back().v] = std::min(low[call.back().v], low[v]);
          }
          if (low[v] != index[v]) {
            continue;
          }
          std::uint32_t const c = num_comps++;
          std::vector<Index>  members;
          Index               w = 0;
          do {
            w = stack.back();
            stack.pop_back();
            on_stack[w] = false;
            comp[w]     = c;
            members.push_back(w);
          } while (w != v);
          // Successor components finished earlier, so their closures exist.
          Bitset r(m);
          r.set(c);
          for (Index u : members) {
            for (Index t : adj[u]) {
              if (comp[t] != c) {
                r |= reach[comp[t]];
              }
            }
          }
          reach.push_back(std::move(r));
        }
      }

      std::vector<std::uint32_t> relabel(num_comps, kUnset);
      std::uint32_t              next = 0;
      for (Index x = 0; x < m; ++x) {
        if (relabel[comp[x]] == kUnset) {
          relabel[comp[x]] = next++;
        }
      }
      GreenRelation out;
      out.class_of.resize(m);
      for (Index x = 0; x < m; ++x) {
        out.class_of[x] = relabel[comp[x]];
      }
      out.reach.assign(num_comps, Bitset(num_comps));
      for (std::uint32_t c = 0; c < num_comps; ++c) {
        for (std::uint32_t d = 0; d < num_comps; ++d) {
          if (reach[c].test(d)) {
            out.reach[relabel[c]].set(relabel[d]);
          }
        }
      }
      return out;
    }

    std::uint32_t find(std::vector<std::uint32_t>& parent, std::uint32_t x) {
      while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x         = parent[x];
      }
      return x;
    }

    // Ids by least member for an arbitrary labelling.
    std::size_t renumber(std::vector<std::uint32_t>& labels) {
      std::vector<std::uint32_t> map(labels.size(), kUnset);
      std::uint32_t              next = 0;
      for (auto& l : labels) {
        if (map[l] == kUnset) {
          map[l] = next++;
        }
        l = map[l];
      }
      return next;
    }

  }  // namespace

  std::vector<std::vector<Index>> GreenRelation::classes() const {
    std::vector<std::vector<Index>> out(num_classes());
    for (Index x = 0; x < class_of.size(); ++x) {
      out[class_of[x]].push_back(x);
    }
    return out;
  }

  GreenStructure green(FiniteMonoid const& s) {
    std::size_t const                m    = s.size();
    auto const&                      gens = s.generators();
    std::vector<std::vector<Index>>  right(m), left(m), both(m);
    for (Index x = 0; x < m; ++x) {
      for (Index g : gens) {
        right[x].push_back(s.mul(x, g));
        left[x].push_back(s.mul(g, x));
      }
      both[x] = right[x];
      both[x].insert(both[x].end(), left[x].begin(), left[x].end());
    }
    GreenStructure out;
    out.R = condense(right);
    out.L = condense(left);
    out.J = condense(both);

    // H: pairs (R-class, L-class), numbered by least member.
    std::size_t const                          nl = out.L.num_classes();
    std::map<std::uint64_t, std::uint32_t>     h_ids;
    out.H.resize(m);
    for (Index x = 0; x < m; ++x) {
      std::uint64_t const key = std::uint64_t{out.R.class_of[x]} * nl + out.L.class_of[x];
      out.H[x] = h_ids.try_emplace(key, static_cast<std::uint32_t>(h_ids.size())).first->second;
    }
    out.num_h = h_ids.size();

    // D: join of R and L.
    std::vector<std::uint32_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    std::vector<Index> r_rep(out.R.num_classes(), kUnset), l_rep(nl, kUnset);
    for (Index x = 0; x < m; ++x) {
      for (Index* rep : {&r_rep[out.R.class_of[x]], &l_rep[out.L.class_of[x]]}) {
        if (*rep == kUnset) {
          *rep = x;
        } else {
          parent[find(parent, x)] = find(parent, *rep);
        }
      }
    }
    out.D.resize(m);
    for (Index x = 0; x < m; ++x) {
      out.D[x] = find(parent, x);
    }
    out.num_d = renumber(out.D);
    out.d_equals_j = out.D == out.J.class_of;
    return out;
  }

  std::vector<Index> minimal_ideal(FiniteMonoid const& s, GreenStructure const& g) {
    std::vector<Index> out;
    if (s.size() == 0) {
      return out;
    }
    // In a finite semigroup the minimal ideal is the J-class below all others.
    for (std::uint32_t c = 0; c < g.J.num_classes(); ++c) {
      bool bottom = true;
      for (std::uint32_t d = 0; d < g.J.num_classes() && bottom; ++d) {
        bottom = g.J.reach[d].test(c);
      }
      if (bottom) {
        for (Index x = 0; x < s.size(); ++x) {
          if (g.J.class_of[x] == c) {
            out.push_back(x);
          }
        }
        return out;
      }
    }
    return out;
  }

  bool ideals_form_chain(GreenStructure const& g) {
    std::size_t const n = g.J.num_classes();
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (!g.J.reach[a].test(b) && !g.J.reach[b].test(a)) {
          return false;
        }
      }
    }
    return true;
  }

  EggBox eggbox(FiniteMonoid const& s, GreenStructure const& g) {
    std::size_t const m = s.size();
    // Order D-classes through J (equal to D on finite semigroups).
    PartialOrder dorder(g.num_d);
    std::vector<std::uint32_t> d_to_j(g.num_d, 0);
    for (Index x = 0; x < m; ++x) {
      d_to_j[g.D[x]] = g.J.class_of[x];
    }
    for (std::size_t a = 0; a < g.num_d; ++a) {
      for (std::size_t b = 0; b < g.num_d; ++b) {
        if (g.J.reach[d_to_j[b]].test(d_to_j[a])) {
          dorder.set(a, b);
        }
      }
    }
    auto const order = dorder.linear_extension();

    EggBox                   box;
    std::vector<std::size_t> position(g.num_d);
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = i;
      EggBox::DClass dc;
      dc.id = static_cast<std::uint32_t>(order[i]);
      box.classes.push_back(std::move(dc));
    }
    for (Index x = 0; x < m; ++x) {
      auto& dc = box.classes[position[g.D[x]]];
      if (std::find(dc.rows.begin(), dc.rows.end(), g.R.class_of[x]) == dc.rows.end()) {
        dc.rows.push_back(g.R.class_of[x]);
      }
      if (std::find(dc.cols.begin(), dc.cols.end(), g.L.class_of[x]) == dc.cols.end()) {
        dc.cols.push_back(g.L.class_of[x]);
      }
    }
    for (auto& dc : box.classes) {
      std::sort(dc.rows.begin(), dc.rows.end());
      std::sort(dc.cols.begin(), dc.cols.end());
      dc.cells.assign(dc.rows.size(), std::vector<std::vector<Index>>(dc.cols.size()));
      dc.group.assign(dc.rows.size(), std::vector<bool>(dc.cols.size(), false));
    }
    for (Index x = 0; x < m; ++x) {
      auto&      dc = box.classes[position[g.D[x]]];
      auto const r  = static_cast<std::size_t>(
          std::lower_bound(dc.rows.begin(), dc.rows.end(), g.R.class_of[x]) - dc.rows.begin());
      auto const c = static_cast<std::size_t>(
          std::lower_bound(dc.cols.begin(), dc.cols.end(), g.L.class_of[x]) - dc.cols.begin());
      dc.cells[r][c].push_back(x);
      if (s.mul(x, x) == x) {
        dc.group[r][c] = true;
      }
    }
    for (auto [a, b] : dorder.covers()) {
      box.hasse.emplace_back(position[a], position[b]);
    }
    std::sort(box.hasse.begin(), box.hasse.end());
    return box;
  }

}  // namespace diagmon
