// Command-line front end: builds named families, analyses them against a
// semilattice, draws egg-box diagrams and runs the verification suites.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or input
// error, 3 a size cap was exceeded.
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "diagmon/cat_algebra.hpp"
#include "diagmon/dot.hpp"
#include "diagmon/ehresmann.hpp"
#include "diagmon/errors.hpp"
#include "diagmon/green.hpp"
#include "diagmon/json_io.hpp"
#include "diagmon/verify.hpp"
#include "diagmon/zoo.hpp"

namespace fs = std::filesystem;
using namespace diagmon;

namespace {

  enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kCap = 3 };

  struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
  };

  // Writes to `out` through a temporary file in the same directory, or to
  // stdout when no path is given.
  void emit(std::string const& text, std::string const& out) {
    if (out.empty() || out == "-") {
      std::cout << text << std::flush;
      return;
    }
    fs::path const target(out);
    fs::path       tmp = target;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
      f << text;
      f.close();
      if (!f) {
        std::error_code ec;
        fs::remove(tmp, ec);
        throw IoError("cannot write " + out);
      }
    }
    std::error_code ec;
    fs::rename(tmp, target, ec);
    if (ec) {
      fs::remove(tmp, ec);
      throw IoError("cannot write " + out + ": " + ec.message());
    }
  }

  std::string json_text(Json const& j) { return j.dump(2) + "\n"; }

  Json read_json_file(std::string const& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
      throw IoError("cannot read " + path);
    }
    try {
      return Json::parse(f);
    } catch (Json::parse_error const& e) {
      throw ValidationError(path + ": " + e.what());
    }
  }

  std::size_t ambient_degree(FamilySpec const& spec) {
    return spec.n + (is_rook_family(spec.family) ? 1 : 0);
  }

  // Names of zoo families, on the same ambient degree, whose element set is
  // exactly `members`; "X+zeta" when that holds after removing zeta.
  Json identify(FamilySpec const& spec, FiniteMonoid const& s, std::vector<Index> const& members) {
    std::set<Element> set;
    for (Index i : members) {
      set.insert(s.element(i));
    }
    bool const        relations = is_relation_family(spec.family);
    std::size_t const amb       = ambient_degree(spec);
    std::optional<Element> z;
    if (!relations && set.contains(Element{zeta(amb)})) {
      z = Element{zeta(amb)};
    }

    std::vector<Element> universe;
    if (relations) {
      for (auto& r : all_relations(amb)) {
        universe.emplace_back(std::move(r));
      }
    } else {
      for (auto& p : all_partitions(amb)) {
        universe.emplace_back(std::move(p));
      }
    }

    Json out = Json::array();
    for (auto const& cand : all_family_specs(amb)) {
      if (is_relation_family(cand.family) != relations || ambient_degree(cand) != amb) {
        continue;
      }
      std::size_t count = 0;
      for (auto const& x : universe) {
        count += in_family(cand, x);
      }
      auto const inside = [&](Element const& x) { return in_family(cand, x); };
      bool const all_in = std::all_of(set.begin(), set.end(), inside);
      if (all_in && count == set.size()) {
        out.push_back(cand.name());
      } else if (z && !in_family(cand, *z) && count + 1 == set.size()
                 && std::all_of(set.begin(), set.end(),
                                [&](Element const& x) { return x == *z || inside(x); })) {
        out.push_back(cand.name() + "+zeta");
      }
    }
    return out;
  }

  Json indices(std::vector<Index> const& v) { return Json(v); }

  struct Loaded {
    FamilySpec          spec;
    FiniteMonoid const* s = nullptr;
  };

  Loaded load(std::string const& family) {
    auto const spec = FamilySpec::parse(family);
    return {spec, &cached_build(spec)};
  }

  // ---------------------------------------------------------------------

  int cmd_build(std::string const& family, std::string const& out) {
    auto const l = load(family);
    emit(json_text(monoid_to_json(*l.s)), out);
    return kOk;
  }

  int cmd_analyze(std::string const& family, std::string const& kind_name, std::string const& out) {
    auto const kind = parse_semilattice_kind(kind_name);
    auto const l    = load(family);
    auto const E    = make_semilattice(*l.s, l.spec, kind);
    auto const rep  = check_axioms(E);

    Json j            = to_json(rep, E);
    j["family"]       = l.spec.name();
    j["semilattice"]  = std::string(semilattice_name(kind));
    j["size"]         = l.s->size();
    j["semilattice_members"] = indices(E.members());
    j["ehresmann"]    = rep.is_ehresmann();

    auto const rest = rest_subsemigroups(E);
    auto       part = [&](std::vector<Index> const& v, bool closed) {
      return Json{{"size", v.size()}, {"closed", closed}, {"identified_as", identify(l.spec, *l.s, v)}};
    };
    j["rest"] = {{"left", part(rest.left, rest.left_closed)},
                 {"right", part(rest.right, rest.right_closed)},
                 {"both", part(rest.both, rest.both_closed)},
                 {"contains_semilattice", rest.contain_E}};

    auto const reg = reg_E(E, green(*l.s));
    j["reg"]       = {{"size", reg.size()},
                      {"members", indices(reg)},
                      {"identified_as", identify(l.spec, *l.s, reg)}};
    emit(json_text(j), out);
    return kOk;
  }

  Json eggbox_json(FiniteMonoid const& s, EggBox const& box) {
    Json classes = Json::array();
    for (auto const& dc : box.classes) {
      Json cells = Json::array();
      for (auto const& row : dc.cells) {
        Json r = Json::array();
        for (auto const& cell : row) {
          r.push_back(cell);
        }
        cells.push_back(std::move(r));
      }
      classes.push_back({{"id", dc.id},
                         {"rows", dc.rows},
                         {"cols", dc.cols},
                         {"cells", std::move(cells)},
                         {"group", dc.group}});
    }
    Json hasse = Json::array();
    for (auto [lo, hi] : box.hasse) {
      hasse.push_back({lo, hi});
    }
    return {{"size", s.size()}, {"d_classes", std::move(classes)}, {"hasse", std::move(hasse)}};
  }

  // A marking file holds a JSON array of elements, or an object with an
  // "elements" array (so a build dump can be used directly).
  std::vector<bool> read_marks(std::string const& path, FiniteMonoid const& s) {
    std::vector<bool> mark(s.size(), false);
    if (path.empty()) {
      return mark;
    }
    Json const j     = read_json_file(path);
    Json const items = j.is_object() && j.contains("elements") ? j.at("elements") : j;
    if (!items.is_array()) {
      throw ValidationError(path + ": expected an array of elements");
    }
    for (auto const& item : items) {
      if (auto const i = s.index_of(element_from_json(item))) {
        mark[*i] = true;
      }
    }
    return mark;
  }

  int cmd_eggbox(std::string const& family, std::string const& format, std::string const& shade,
                 std::string const& highlight, std::string const& out) {
    auto const l   = load(family);
    auto const box = eggbox(*l.s, green(*l.s));
    if (format == "json") {
      emit(json_text(eggbox_json(*l.s, box)), out);
      return kOk;
    }
    EggBoxStyle style;
    style.name      = l.spec.name();
    style.shade     = read_marks(shade, *l.s);
    style.highlight = read_marks(highlight, *l.s);
    emit(eggbox_dot(*l.s, box, style), out);
    return kOk;
  }

  int cmd_category(std::string const& family, std::string const& kind_name,
                   std::string const& out) {
    auto const              kind = parse_semilattice_kind(kind_name);
    auto const              l    = load(family);
    auto const              E    = make_semilattice(*l.s, l.spec, kind);
    EhresmannCategory const cat(E);
    Json                    homs = Json::array();
    for (auto const& [key, members] : cat.homs()) {
      homs.push_back({{"source", key.first}, {"target", key.second}, {"members", members}});
    }
    auto const ei = is_EI(cat);
    Json       j{{"family", l.spec.name()},
           {"semilattice", std::string(semilattice_name(kind))},
           {"objects", cat.objects()},
           {"morphisms", l.s->size()},
           {"homs", std::move(homs)},
           {"ei", {{"holds", ei.holds}, {"witness", ei.witness ? Json(*ei.witness) : Json()}}}};
    emit(json_text(j), out);
    return kOk;
  }

  int cmd_stein(std::string const& family, std::string const& kind_name, std::string const& side_name,
                std::string const& out) {
    auto const kind = parse_semilattice_kind(kind_name);
    auto const l    = load(family);
    auto const E    = make_semilattice(*l.s, l.spec, kind);
    Side       side = Side::left;
    if (side_name == "right") {
      side = Side::right;
    } else if (side_name == "auto") {
      auto const rep = check_axioms(E);
      side           = rep.holds(Axiom::L3) || !rep.holds(Axiom::R3) ? Side::left : Side::right;
    }
    auto const z     = stein_transform(E, side);
    auto const order = side == Side::left ? leq_r(E) : leq_l(E);
    auto const inv   = inverse(z);
    auto const mu    = mobius_inverse(order);
    auto const check = verify_stein(E, side);

    Json j{{"family", l.spec.name()},
           {"semilattice", std::string(semilattice_name(kind))},
           {"side", side == Side::left ? "left" : "right"},
           {"transform", to_json(z)},
           {"inverse", inv ? to_json(*inv) : Json()},
           {"inverse_is_moebius", inv && *inv == mu},
           {"multiplicative", check.multiplicative},
           {"unitriangular", check.unitriangular},
           {"pairs_checked", check.pairs_checked}};
    try {
      auto const q = check_semisimple_quotient(E);
      j["quotient"] = {{"dimension", q.dimension},
                       {"radical", q.radical},
                       {"reg_size", q.reg_size},
                       {"reg_radical", q.reg_radical}};
    } catch (StateError const& e) {
      j["quotient"] = {{"skipped", e.what()}};
    } catch (ResourceError const& e) {
      j["quotient"] = {{"skipped", e.what()}};
    }
    emit(json_text(j), out);
    return kOk;
  }

  int cmd_verify(std::string const& section, std::optional<std::size_t> nmax, std::string const& out) {
    auto const ids = section_criteria(section);
    if (!ids) {
      throw ValidationError("unknown section '" + section
                            + "' (general, relations, partitions, brauer-rook, 2-5, all)");
    }
    std::ostringstream text;
    int                failed_criteria = 0;
    std::size_t        total = 0, failed = 0;
    for (int id : *ids) {
      auto const& c      = criteria()[static_cast<std::size_t>(id - 1)];
      auto const  checks = run_criterion(id, nmax);
      std::size_t bad    = 0;
      for (auto const& k : checks) {
        bad += !k.pass;
      }
      text << (bad == 0 ? "PASS" : "FAIL") << "  [" << c.title << "]\n";
      for (auto const& k : checks) {
        text << "  " << (k.pass ? "ok  " : "FAIL") << "  " << k.label;
        if (!k.detail.empty()) {
          text << "  (" << k.detail << ")";
        }
        text << "\n";
      }
      total += checks.size();
      failed += bad;
      failed_criteria += bad != 0;
    }
    text << (failed == 0 ? "all " : "") << total - failed << " of " << total << " checks passed in "
         << ids->size() << (ids->size() == 1 ? " criterion\n" : " criteria\n");
    emit(text.str(), out);
    return failed_criteria == 0 ? kOk : kCheckFailed;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ehresmann structure of diagram monoids"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  std::string family, kind = "F", out, format = "dot", shade, highlight, side = "auto";
  std::string section;
  std::optional<std::size_t> nmax;
  std::function<int()>       run;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out,-o", out, "Output file (default stdout), written atomically");
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("family", family, "Family name such as P3, RR4, BX2, RP2")->required();
  };
  auto add_kind = [&](CLI::App* sub) {
    sub->add_option("semilattice", kind, "E (projections id_A), F (id_eps) or G (rook id_eps)")
        ->capture_default_str();
  };

  auto* build = app.add_subcommand("build", "Dump the Cayley table of a family as JSON");
  add_family(build);
  add_out(build);
  build->callback([&] { run = [&] { return cmd_build(family, out); }; });

  auto* analyze = app.add_subcommand("analyze", "Ehresmann axioms, Rest and Reg_E as JSON");
  add_family(analyze);
  add_kind(analyze);
  add_out(analyze);
  analyze->callback([&] { run = [&] { return cmd_analyze(family, kind, out); }; });

  auto* egg = app.add_subcommand("eggbox", "Egg-box diagram of Green's structure");
  add_family(egg);
  add_out(egg);
  egg->add_option("--format", format, "dot or json")
      ->check(CLI::IsMember({"dot", "json"}))
      ->capture_default_str();
  egg->add_option("--shade", shade, "JSON file of elements whose cells are shaded orange");
  egg->add_option("--highlight", highlight, "JSON file of elements whose cells are green");
  egg->callback([&] { run = [&] { return cmd_eggbox(family, format, shade, highlight, out); }; });

  auto* category = app.add_subcommand("category", "Hom-sets of the Ehresmann category");
  add_family(category);
  add_kind(category);
  add_out(category);
  category->callback([&] { run = [&] { return cmd_category(family, kind, out); }; });

  auto* stein = app.add_subcommand("stein", "Stein transform, its inverse and the quotient check");
  add_family(stein);
  add_kind(stein);
  add_out(stein);
  stein->add_option("--side", side, "left, right or auto (left when L3 holds)")
      ->check(CLI::IsMember({"left", "right", "auto"}))
      ->capture_default_str();
  stein->callback([&] { run = [&] { return cmd_stein(family, kind, side, out); }; });

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  verify->add_option("section", section,
                     "general, relations, partitions, brauer-rook (or 2-5), or all")
      ->required();
  verify->add_option("--nmax", nmax, "Largest degree to check (default: per-check limit)");
  add_out(verify);
  verify->callback([&] { run = [&] { return cmd_verify(section, nmax, out); }; });

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  try {
    return run();
  } catch (ResourceError const& e) {
    std::cerr << "diagmon: " << e.what() << "\n";
    return kCap;
  } catch (ValidationError const& e) {
    std::cerr << "diagmon: " << e.what() << "\n";
    return kUsage;
  } catch (StateError const& e) {
    std::cerr << "diagmon: " << e.what() << "\n";
    return kUsage;
  } catch (IoError const& e) {
    std::cerr << "diagmon: " << e.what() << "\n";
    return kUsage;
  } catch (std::exception const& e) {
    std::cerr << "diagmon: " << e.what() << "\n";
    return kCheckFailed;
  }
}
