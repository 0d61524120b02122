#include "diagmon/zoo.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>

#include "diagmon/errors.hpp"

namespace diagmon {

  namespace {

    struct FamilyInfo {
      Family           family;
      std::string_view tag;
      std::size_t      cap;
    };

    constexpr std::array<FamilyInfo, 19> kFamilies{{
        {Family::P, "P", 4},      {Family::B, "B", 4},     {Family::PB, "PB", 3},
        {Family::J, "J", 4},      {Family::IP, "IP", 4},   {Family::TP, "TP", 4},
        {Family::Pfd, "Pfd", 4},  {Family::Pfcd, "Pfcd", 4}, {Family::RR, "RR", 4},
        {Family::LL, "LL", 4},    {Family::D0, "D0", 4},   {Family::D1, "D1", 4},
        {Family::Pfk, "Pfk", 4},  {Family::RP, "RP", 3},   {Family::RJ, "RJ", 3},
        {Family::BX, "BX", 3},    {Family::PT, "PT", 4},   {Family::T, "T", 4},
        {Family::I, "I", 4},
    }};

    FamilyInfo const& info(Family f) {
      for (auto const& i : kFamilies) {
        if (i.family == f) {
          return i;
        }
      }
      throw ValidationError("unknown family");
    }

    void check_cap(FamilySpec const& spec) {
      if (spec.n > family_cap(spec.family)) {
        throw ResourceError("family " + std::string(family_tag(spec.family))
                            + " is capped at n <= " + std::to_string(family_cap(spec.family))
                            + " (requested " + std::to_string(spec.n) + ")");
      }
    }

    bool partition_member(Family f, Partition const& a) {
      std::size_t const n = a.degree();
      auto const        p = params(a);
      switch (f) {
        case Family::P: return true;
        case Family::B: return is_brauer(a);
        case Family::PB: return is_partial_brauer(a);
        case Family::J: return p.dom.is_full() && p.codom.is_full();
        case Family::IP: return p.ker.is_discrete() && p.coker.is_discrete();
        case Family::TP: return p.dom.is_full() && p.coker.is_discrete();
        case Family::Pfd: return p.dom.is_full();
        case Family::Pfcd: return p.codom.is_full();
        case Family::RR: return p.dom.is_full() || p.ker.is_universal();
        case Family::LL: return p.codom.is_full() || p.coker.is_universal();
        case Family::D0: return p.dom.size() == 0 && p.ker.is_universal();
        case Family::D1: return p.dom.is_full() && p.rank == 1;
        case Family::Pfk:
          return (p.dom.size() == 0 && p.ker.is_universal()) || (p.dom.is_full() && p.rank == 1);
        case Family::RP:
        case Family::RJ: {
          if (n == 0 || a.upper(n - 1) != a.lower(n - 1)) {
            return false;
          }
          return f == Family::RP || (p.dom.is_full() && p.codom.is_full());
        }
        default: return false;
      }
    }

    bool relation_member(Family f, BinaryRelation const& a) {
      auto const p = predicates(a);
      switch (f) {
        case Family::BX: return true;
        case Family::PT: return p.coinjective;
        case Family::T: return p.coinjective && p.cosurjective;
        case Family::I: return p.coinjective && p.injective;
        default: return false;
      }
    }

    std::size_t ambient_degree(FamilySpec const& spec) {
      return is_rook_family(spec.family) ? spec.n + 1 : spec.n;
    }

  }  // namespace

  std::string_view family_tag(Family f) { return info(f).tag; }

  bool is_relation_family(Family f) {
    return f == Family::BX || f == Family::PT || f == Family::T || f == Family::I;
  }

  bool is_rook_family(Family f) { return f == Family::RP || f == Family::RJ; }

  std::size_t family_cap(Family f) { return info(f).cap; }

  FamilySpec FamilySpec::parse(std::string_view text) {
    FamilyInfo const* best = nullptr;
    for (auto const& i : kFamilies) {
      if (text.starts_with(i.tag) && (best == nullptr || i.tag.size() > best->tag.size())) {
        best = &i;
      }
    }
    if (best == nullptr) {
      throw ValidationError("unknown family in '" + std::string(text) + "'");
    }
    auto const  digits = text.substr(best->tag.size());
    std::size_t n      = 0;
    auto const [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw ValidationError("expected <family><n>, got '" + std::string(text) + "'");
    }
    FamilySpec spec{best->family, n};
    check_cap(spec);
    return spec;
  }

  std::string FamilySpec::name() const { return std::string(family_tag(family)) + std::to_string(n); }

  std::vector<FamilySpec> all_family_specs(std::size_t nmax) {
    std::vector<FamilySpec> out;
    for (auto const& i : kFamilies) {
      for (std::size_t n = 0; n <= std::min(nmax, i.cap); ++n) {
        out.push_back({i.family, n});
      }
    }
    return out;
  }

  bool in_family(FamilySpec const& spec, Element const& x) {
    if (degree_of(x) != ambient_degree(spec)) {
      return false;
    }
    if (auto const* p = std::get_if<Partition>(&x)) {
      return !is_relation_family(spec.family) && partition_member(spec.family, *p);
    }
    return is_relation_family(spec.family)
           && relation_member(spec.family, std::get<BinaryRelation>(x));
  }

  FiniteMonoid build(FamilySpec const& spec) {
    check_cap(spec);
    std::vector<Element> elems;
    if (is_relation_family(spec.family)) {
      for (auto const& r : all_relations(spec.n)) {
        if (relation_member(spec.family, r)) {
          elems.emplace_back(r);
        }
      }
    } else {
      for (auto const& a : all_partitions(ambient_degree(spec))) {
        if (partition_member(spec.family, a)) {
          elems.emplace_back(a);
        }
      }
    }
    return FiniteMonoid(std::move(elems), spec.name());
  }

  FiniteMonoid const& cached_build(FamilySpec const& spec) {
    static std::mutex                                                       mutex;
    static std::map<std::pair<int, std::size_t>, std::unique_ptr<FiniteMonoid>> cache;
    std::lock_guard lock(mutex);
    auto&           slot = cache[{static_cast<int>(spec.family), spec.n}];
    if (!slot) {
      slot = std::make_unique<FiniteMonoid>(build(spec));
    }
    return *slot;
  }

  SemilatticeKind parse_semilattice_kind(std::string_view text) {
    if (text == "E" || text == "E_of_I") {
      return SemilatticeKind::E_of_I;
    }
    if (text == "F" || text == "F_of_J") {
      return SemilatticeKind::F_of_J;
    }
    if (text == "G" || text == "G_rook") {
      return SemilatticeKind::G_rook;
    }
    throw ValidationError("unknown semilattice '" + std::string(text) + "' (expected E, F or G)");
  }

  std::string_view semilattice_name(SemilatticeKind k) {
    switch (k) {
      case SemilatticeKind::E_of_I: return "E";
      case SemilatticeKind::F_of_J: return "F";
      case SemilatticeKind::G_rook: return "G";
    }
    return "?";
  }

  std::vector<Element> semilattice_elements(FamilySpec const& spec, SemilatticeKind kind) {
    std::size_t const    n    = spec.n;
    bool const           rook = is_rook_family(spec.family);
    std::vector<Element> out;
    if (is_relation_family(spec.family)) {
      if (kind != SemilatticeKind::E_of_I) {
        throw ValidationError("relation monoids only carry the semilattice E");
      }
      for (auto const& a : all_subsets(n)) {
        out.emplace_back(relation_identity(a));
      }
      return out;
    }
    auto lift = [&](Partition const& p) { return rook ? adjoin_fixed_point(p) : p; };
    switch (kind) {
      case SemilatticeKind::E_of_I:
        for (auto const& a : all_subsets(n)) {
          out.emplace_back(lift(id_subset(a)));
        }
        break;
      case SemilatticeKind::F_of_J:
        for (auto const& e : all_set_partitions(n)) {
          out.emplace_back(lift(id_equiv(e)));
        }
        break;
      case SemilatticeKind::G_rook:
        if (!rook) {
          throw ValidationError("the semilattice G is only defined for rook families");
        }
        for (auto const& e : all_set_partitions(n + 1)) {
          out.emplace_back(id_equiv(e));
        }
        break;
    }
    return out;
  }

  Semilattice make_semilattice(FiniteMonoid const& parent, FamilySpec const& spec,
                               SemilatticeKind kind) {
    std::vector<Index> members;
    for (auto const& e : semilattice_elements(spec, kind)) {
      auto const idx = parent.index_of(e);
      if (!idx) {
        throw ValidationError("semilattice " + std::string(semilattice_name(kind))
                              + " is not contained in " + spec.name());
      }
      members.push_back(*idx);
    }
    return Semilattice(parent, std::move(members), std::string(semilattice_name(kind)));
  }

  Partition rook_embed(std::size_t n, std::vector<std::vector<int>> const& blocks,
                       std::vector<int> const& rook_dots) {
    int const                     inf = static_cast<int>(n) + 1;
    std::vector<std::vector<int>> all;
    for (auto const& b : blocks) {
      for (int v : b) {
        if (v == 0 || std::abs(v) > static_cast<int>(n)) {
          throw ValidationError("rook diagram vertex " + std::to_string(v) + " out of range");
        }
      }
      all.push_back(b);
    }
    std::vector<int> inf_block{inf, -inf};
    for (int v : rook_dots) {
      if (v == 0 || std::abs(v) > static_cast<int>(n)) {
        throw ValidationError("rook dot " + std::to_string(v) + " out of range");
      }
      inf_block.push_back(v);
    }
    all.push_back(std::move(inf_block));
    return Partition::from_blocks(n + 1, all);
  }

  Tower tower_maps(std::size_t n) {
    auto const& p   = cached_build({Family::P, n});
    auto const& rp  = cached_build({Family::RP, n});
    auto const& p1  = cached_build({Family::P, n + 1});
    Tower       out;
    for (auto const& e : p.elements()) {
      auto const idx = rp.index_of(adjoin_fixed_point(std::get<Partition>(e)));
      if (!idx) {
        throw StateError("P_n element missing from RP_n");
      }
      out.p_to_rp.push_back(*idx);
    }
    for (auto const& e : rp.elements()) {
      auto const idx = p1.index_of(e);
      if (!idx) {
        throw StateError("RP_n element missing from P_{n+1}");
      }
      out.rp_to_p.push_back(*idx);
    }
    return out;
  }

  Partition id_nabla(std::size_t n) { return id_equiv(SetPartition::universal(n)); }

  WitnessSets const& witness_sets() {
    static WitnessSets const w{
        .alpha6 = Partition::from_blocks(6, {{1, 4}, {2, 3, -4, -5}, {5, 6}, {-1, -2, -6}, {-3}}),
        .beta6 =
            Partition::from_blocks(6, {{1, 2}, {3, 4, -1}, {5, -4, -5, -6}, {6}, {-2}, {-3}}),
        .not_e_alpha = Partition::from_blocks(2, {{1, 2}, {-1, -2}}),
        .not_e_beta  = Partition::identity(2),
        .not_e_theta = Partition::from_blocks(2, {{1, -1}, {2}, {-2}}),
        .rook_alpha  = rook_embed(2, {{1, -1}}, {2, -2}),
        .rook_beta   = rook_embed(2, {{1, -1}, {2, -2}}, {}),
        .rook_theta  = rook_embed(2, {{2, -2}}, {1, -1}),
        .h_alpha     = Partition::from_blocks(3, {{1, -1, -2}, {2, 3, -3}}),
        .h_beta      = Partition::from_blocks(3, {{1, 2}, {3, -3}, {-1, -2}}),
    };
    return w;
  }

}  // namespace diagmon
