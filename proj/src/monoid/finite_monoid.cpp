#include "diagmon/finite_monoid.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <random>
#include <thread>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {
    constexpr std::uint64_t kSampleSeed = 0x5eed'd1a9'0000'0001ULL;
  }  // namespace

  std::size_t worker_count() {
    char const* env = std::getenv("DIAGMON_THREADS");
    if (env == nullptr) {
      return 1;
    }
    char*      end = nullptr;
    long const n   = std::strtol(env, &end, 10);
    if (end == env || n < 1) {
      return 1;
    }
    return static_cast<std::size_t>(std::min<long>(n, 256));
  }

  FiniteMonoid::FiniteMonoid(std::vector<Element> elements, std::string name)
      : name_(std::move(name)), elements_(std::move(elements)) {
    index_.reserve(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (i > 0
          && (elements_[i].index() != elements_[0].index()
              || degree_of(elements_[i]) != degree_of(elements_[0]))) {
        throw ValidationError("elements of a monoid must share kind and degree");
      }
      if (!index_.emplace(elements_[i], static_cast<Index>(i)).second) {
        throw ValidationError("duplicate element at position " + std::to_string(i));
      }
    }
    if (elements_.empty()) {
      return;
    }
    identity_ = index_of(identity_like(elements_[0]));
    if (elements_.size() <= kTableLimit) {
      build_table();
    } else {
      check_closure_sampled();
    }
    choose_generators();
  }

  std::optional<Index> FiniteMonoid::index_of(Element const& e) const {
    auto it = index_.find(e);
    if (it == index_.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  Index FiniteMonoid::mul_on_demand(Index x, Index y) const {
    auto it = index_.find(multiply(elements_[x], elements_[y]));
    if (it == index_.end()) {
      throw ValidationError("product of elements " + std::to_string(x) + " and "
                            + std::to_string(y) + " is not in " + name_);
    }
    return it->second;
  }

  void FiniteMonoid::build_table() {
    std::size_t const m = elements_.size();
    table_.assign(m * m, 0);
    std::atomic<bool>     failed{false};
    std::atomic<std::size_t> bad_pair{0};
    auto                  work = [&](std::size_t first, std::size_t stride) {
      for (std::size_t x = first; x < m && !failed; x += stride) {
        for (std::size_t y = 0; y < m; ++y) {
          auto it = index_.find(multiply(elements_[x], elements_[y]));
          if (it == index_.end()) {
            if (!failed.exchange(true)) {
              bad_pair = x * m + y;
            }
            return;
          }
          table_[x * m + y] = it->second;
        }
      }
    };
    std::size_t const workers = std::min(worker_count(), m);
    if (workers <= 1) {
      work(0, 1);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t t = 0; t < workers; ++t) {
        pool.emplace_back(work, t, workers);
      }
      for (auto& th : pool) {
        th.join();
      }
    }
    if (failed) {
      table_.clear();
      throw ValidationError("not closed under multiplication: product of elements "
                            + std::to_string(bad_pair / m) + " and "
                            + std::to_string(bad_pair % m) + " falls outside "
                            + (name_.empty() ? std::string("the set") : name_));
    }
  }

  void FiniteMonoid::check_closure_sampled() const {
    std::mt19937_64                            rng(kSampleSeed);
    std::uniform_int_distribution<std::size_t> pick(0, elements_.size() - 1);
    for (int k = 0; k < 100000; ++k) {
      mul_on_demand(static_cast<Index>(pick(rng)), static_cast<Index>(pick(rng)));
    }
  }

  void FiniteMonoid::choose_generators() {
    std::size_t const  m = elements_.size();
    std::vector<Index> order(m);
    std::iota(order.begin(), order.end(), 0);
    if (has_table()) {
      // Elements with large principal one-sided ideals come first, so the
      // group of units and the top J-classes are visited before anything
      // they generate.
      std::vector<std::size_t> weight(m, 0);
      std::vector<std::size_t> stamp(m, m);
      for (std::size_t x = 0; x < m; ++x) {
        std::size_t distinct = 0;
        for (std::size_t y = 0; y < m; ++y) {
          Index const p = table_[x * m + y];
          if (stamp[p] != x) {
            stamp[p] = x;
            ++distinct;
          }
        }
        weight[x] += distinct;
      }
      std::fill(stamp.begin(), stamp.end(), m);
      for (std::size_t x = 0; x < m; ++x) {
        std::size_t distinct = 0;
        for (std::size_t y = 0; y < m; ++y) {
          Index const p = table_[y * m + x];
          if (stamp[p] != x) {
            stamp[p] = x;
            ++distinct;
          }
        }
        weight[x] += distinct;
      }
      std::stable_sort(order.begin(), order.end(),
                       [&](Index a, Index b) { return weight[a] > weight[b]; });
    }
    std::vector<bool> generated(m, false);
    if (identity_) {
      generated[*identity_] = true;
    }
    std::deque<Index> queue;
    for (Index x : order) {
      if (generated[x]) {
        continue;
      }
      generators_.push_back(x);
      generated[x] = true;
      queue.push_back(x);
      // Every word containing the new generator is reachable from it by
      // multiplying by generators on either side.
      while (!queue.empty()) {
        Index const y = queue.front();
        queue.pop_front();
        for (Index g : generators_) {
          for (Index z : {mul(y, g), mul(g, y)}) {
            if (!generated[z]) {
              generated[z] = true;
              queue.push_back(z);
            }
          }
        }
      }
    }
    std::sort(generators_.begin(), generators_.end());
  }

  FiniteMonoid FiniteMonoid::restrict_to(std::span<Index const> subset, std::string name) const {
    std::vector<Element> elems;
    elems.reserve(subset.size());
    for (Index i : subset) {
      elems.push_back(elements_.at(i));
    }
    return FiniteMonoid(std::move(elems), std::move(name));
  }

  FiniteMonoid closure(std::vector<Element> const& generators, std::size_t cap, std::string name) {
    if (generators.empty()) {
      throw ValidationError("closure needs at least one generator to fix the degree");
    }
    std::vector<Element>                            elems;
    std::unordered_map<Element, Index, ElementHash> seen;
    auto                                            add = [&](Element e) {
      if (seen.contains(e)) {
        return;
      }
      if (elems.size() >= cap) {
        throw ResourceError("closure exceeded the element cap of " + std::to_string(cap));
      }
      seen.emplace(e, static_cast<Index>(elems.size()));
      elems.push_back(std::move(e));
    };
    add(identity_like(generators.front()));
    for (auto const& g : generators) {
      if (g.index() != generators.front().index()
          || degree_of(g) != degree_of(generators.front())) {
        throw DimensionError("closure generators must share kind and degree");
      }
      add(g);
    }
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (auto const& g : generators) {
        add(multiply(elems[head], g));
      }
    }
    return FiniteMonoid(std::move(elems), std::move(name));
  }

  bool is_associative(FiniteMonoid const& s, std::size_t samples) {
    std::size_t const m = s.size();
    if (m <= 250) {
      for (Index x = 0; x < m; ++x) {
        for (Index y = 0; y < m; ++y) {
          Index const xy = s.mul(x, y);
          for (Index z = 0; z < m; ++z) {
            if (s.mul(xy, z) != s.mul(x, s.mul(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }
    std::mt19937_64                      rng(kSampleSeed);
    std::uniform_int_distribution<Index> pick(0, static_cast<Index>(m - 1));
    for (std::size_t k = 0; k < samples; ++k) {
      Index const x = pick(rng), y = pick(rng), z = pick(rng);
      if (s.mul(s.mul(x, y), z) != s.mul(x, s.mul(y, z))) {
        return false;
      }
    }
    return true;
  }

  std::vector<Index> idempotents(FiniteMonoid const& s) {
    std::vector<Index> out;
    for (Index x = 0; x < s.size(); ++x) {
      if (s.mul(x, x) == x) {
        out.push_back(x);
      }
    }
    return out;
  }

  std::vector<Index> right_zeros(FiniteMonoid const& s) {
    std::vector<Index> out;
    for (Index z = 0; z < s.size(); ++z) {
      bool ok = true;
      for (Index a = 0; a < s.size() && ok; ++a) {
        ok = s.mul(a, z) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::vector<Index> left_zeros(FiniteMonoid const& s) {
    std::vector<Index> out;
    for (Index z = 0; z < s.size(); ++z) {
      bool ok = true;
      for (Index a = 0; a < s.size() && ok; ++a) {
        ok = s.mul(z, a) == z;
      }
      if (ok) {
        out.push_back(z);
      }
    }
    return out;
  }

  std::optional<Index> zero(FiniteMonoid const& s) {
    auto const l = left_zeros(s);
    auto const r = right_zeros(s);
    for (Index z : l) {
      if (std::binary_search(r.begin(), r.end(), z)) {
        return z;
      }
    }
    return std::nullopt;
  }

  bool is_regular(FiniteMonoid const& s) {
    for (Index x = 0; x < s.size(); ++x) {
      bool found = false;
      for (Index a = 0; a < s.size() && !found; ++a) {
        found = s.mul(s.mul(x, a), x) == x;
      }
      if (!found) {
        return false;
      }
    }
    return true;
  }

  bool is_inverse(FiniteMonoid const& s) {
    for (Index x = 0; x < s.size(); ++x) {
      std::size_t inverses = 0;
      for (Index a = 0; a < s.size() && inverses < 2; ++a) {
        if (s.mul(s.mul(x, a), x) == x && s.mul(s.mul(a, x), a) == a) {
          ++inverses;
        }
      }
      if (inverses != 1) {
        return false;
      }
    }
    return true;
  }

  bool idempotents_commute(FiniteMonoid const& s) {
    auto const e = idempotents(s);
    for (Index a : e) {
      for (Index b : e) {
        if (s.mul(a, b) != s.mul(b, a)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_closed(FiniteMonoid const& s, std::span<Index const> subset) {
    std::vector<bool> member(s.size(), false);
    for (Index i : subset) {
      member[i] = true;
    }
    for (Index x : subset) {
      for (Index y : subset) {
        if (!member[s.mul(x, y)]) {
          return false;
        }
      }
    }
    return true;
  }

  std::vector<Index> set_product(FiniteMonoid const&    s,
                                 std::span<Index const> a,
                                 std::span<Index const> b) {
    std::vector<bool> member(s.size(), false);
    for (Index x : a) {
      for (Index y : b) {
        member[s.mul(x, y)] = true;
      }
    }
    std::vector<Index> out;
    for (Index i = 0; i < s.size(); ++i) {
      if (member[i]) {
        out.push_back(i);
      }
    }
    return out;
  }

  bool check_embedding(std::span<Index const> f, FiniteMonoid const& s, FiniteMonoid const& t) {
    if (f.size() != s.size()) {
      return false;
    }
    std::vector<bool> hit(t.size(), false);
    for (Index x = 0; x < s.size(); ++x) {
      if (f[x] >= t.size() || hit[f[x]]) {
        return false;
      }
      hit[f[x]] = true;
    }
    if (s.identity() && (!t.identity() || f[*s.identity()] != *t.identity())) {
      return false;
    }
    for (Index x = 0; x < s.size(); ++x) {
      for (Index y = 0; y < s.size(); ++y) {
        if (f[s.mul(x, y)] != t.mul(f[x], f[y])) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace diagmon
