#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"

#include "diagmon/json_io.hpp"
#include "diagmon/partition.hpp"
#include "oracle.hpp"

using namespace diagmon;
namespace fs = std::filesystem;

namespace {

  struct Run {
    int         code = -1;
    std::string out;
  };

  // Runs the CLI; stderr is folded into the captured text when asked.
  Run run(std::string const& args, bool with_stderr = false, std::string const& env = "") {
    std::string const cmd = env + std::string(DIAGMON_CLI) + " " + args
                            + (with_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* p = ::popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    Run  r;
    char buf[4096];
    for (std::size_t k; (k = std::fread(buf, 1, sizeof buf, p)) > 0;) {
      r.out.append(buf, k);
    }
    int const status = ::pclose(p);
    r.code           = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  Json run_json(std::string const& args) {
    auto const r = run(args);
    REQUIRE(r.code == 0);
    return Json::parse(r.out);
  }

  fs::path scratch() {
    fs::path const dir = fs::path(DIAGMON_SCRATCH) / "cli";
    fs::create_directories(dir);
    return dir;
  }

  std::string slurp(fs::path const& p) {
    std::ifstream     f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }

  std::size_t count(std::string const& text, std::string const& needle) {
    std::size_t n = 0;
    for (auto p = text.find(needle); p != std::string::npos; p = text.find(needle, p + 1)) {
      ++n;
    }
    return n;
  }

  Partition part(Json const& j) { return std::get<Partition>(element_from_json(j)); }

  // The node tables of each cluster and the edge lines of a DOT egg-box.
  struct DotParts {
    std::vector<std::string> tables;
    std::vector<std::string> edges;
  };

  DotParts split_dot(std::string const& dot) {
    DotParts           out;
    std::istringstream in(dot);
    std::string        line, table;
    bool               inside = false;
    while (std::getline(in, line)) {
      if (line.rfind("    \"D:", 0) == 0) {
        inside = true;
        table.clear();
      }
      if (inside) {
        table += line + "\n";
        if (line.find("</TABLE>>];") != std::string::npos) {
          out.tables.push_back(table);
          inside = false;
        }
      } else if (line.find(" -> ") != std::string::npos) {
        out.edges.push_back(line);
      }
    }
    return out;
  }

}  // namespace

TEST_CASE("build dumps the Cayley table") {
  auto const p2 = run_json("build P2");
  CHECK(p2["size"] == oracle::bell(4));
  REQUIRE(p2["elements"].size() == 15);
  REQUIRE(p2["mul"].size() == 15 * 15);
  REQUIRE(p2["identity"].is_number());
  CHECK(part(p2["elements"][p2["identity"].get<std::size_t>()]) == Partition::identity(2));
  for (std::size_t i = 0; i < 15; ++i) {
    for (std::size_t j = 0; j < 15; ++j) {
      auto const k = p2["mul"][i * 15 + j].get<std::size_t>();
      CHECK(part(p2["elements"][i]) * part(p2["elements"][j]) == part(p2["elements"][k]));
    }
  }
  CHECK(run_json("build P0")["size"] == 1);
  CHECK(run_json("build RR2")["size"] == 7);
  CHECK(run_json("build BX2")["size"] == 16);
  CHECK(run_json("build D02")["identity"].is_null());
}

TEST_CASE("exit codes") {
  auto const cap = run("build P5", true);
  CHECK(cap.code == 3);
  CHECK(cap.out.find("n <= 4") != std::string::npos);
  CHECK(run("build RP4").code == 3);
  CHECK(run("build Q2").code == 2);
  CHECK(run("build P").code == 2);
  CHECK(run("build").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("analyze P2 Z").code == 2);
  CHECK(run("analyze P2 G").code == 2);
  CHECK(run("analyze BX2 F").code == 2);
  CHECK(run("category P2 E").code == 2);
  CHECK(run("stein P2 F").code == 2);
  CHECK(run("eggbox P2 --format svg").code == 2);
  CHECK(run("eggbox P2 --shade /nonexistent/file.json").code == 2);
  CHECK(run("verify 7").code == 2);
  CHECK(run("--help").code == 0);
}

TEST_CASE("outputs are deterministic and written atomically") {
  for (char const* args : {"build P3", "analyze P2 E", "eggbox RR3", "stein PT2 E", "category Pfd2 F"}) {
    CAPTURE(args);
    auto const a = run(args);
    auto const b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
  // The worker count changes nothing in the output.
  auto const parallel = run("build P3", false, "DIAGMON_THREADS=3 ");
  CHECK(parallel.code == 0);
  CHECK(parallel.out == run("build P3").out);

  auto const dir    = scratch();
  auto const target = dir / "p2.json";
  fs::remove(target);
  REQUIRE(run("build P2 --out " + target.string()).code == 0);
  CHECK(slurp(target) == run("build P2").out);
  // Overwriting leaves no temporary behind.
  REQUIRE(run("build P2 -o " + target.string()).code == 0);
  for (auto const& entry : fs::directory_iterator(dir)) {
    CHECK(entry.path().filename().string().find(".tmp") == std::string::npos);
  }
  CHECK(run("build P2 --out " + (dir / "missing" / "x.json").string()).code == 2);
}

TEST_CASE("analyze P3 F") {
  auto const j = run_json("analyze P3 F");
  for (char const* a : {"L1", "L2", "R1", "R2"}) {
    CHECK(j["axioms"][a] == true);
  }
  CHECK(j["ehresmann"] == true);
  CHECK(j["sweep"] == "exhaustive");
  CHECK(j["size"] == 203);
  CHECK(j["rest"]["both"]["size"] == 26);
  CHECK(j["rest"]["both"]["identified_as"] == Json::array({"J3+zeta"}));
  CHECK(j["rest"]["right"]["identified_as"] == Json::array({"RR3"}));
  CHECK(j["rest"]["left"]["identified_as"] == Json::array({"LL3"}));
  CHECK(j["reg"]["identified_as"] == Json::array({"J3"}));
  CHECK(j["plus"].size() == 203);
  CHECK(j["witnesses"].empty() == false);  // L3 and R3 fail
  CHECK(j["axioms"]["L3"] == false);
}

TEST_CASE("analyze P2 E and PB2 E fail L2") {
  for (char const* fam : {"P2", "PB2"}) {
    CAPTURE(fam);
    auto const j = run_json(std::string("analyze ") + fam + " E");
    CHECK(j["axioms"]["L2"] == false);
    CHECK(j["axioms"]["R2"] == false);
    CHECK(j["ehresmann"] == false);
    CHECK(j["plus"].is_array());
    auto const& w = j["witness_elements"]["L2"];
    REQUIRE(w.size() == 3);
    auto const theta = part(w[0]), a = part(w[1]), b = part(w[2]);
    // Under E, R~ is equality of supports.
    CHECK(params(a).supp == params(b).supp);
    CHECK(params(theta * a).supp != params(theta * b).supp);
    CHECK(j["reg"]["identified_as"] == Json::array({"IP2"}));
  }
}

TEST_CASE("analyze BX2 E identifies Rest and Reg") {
  auto const j = run_json("analyze BX2 E");
  CHECK(j["ehresmann"] == true);
  CHECK(j["rest"]["left"]["identified_as"] == Json::array({"PT2"}));
  CHECK(j["rest"]["both"]["identified_as"] == Json::array({"I2"}));
  CHECK(j["reg"]["identified_as"] == Json::array({"I2"}));
}

TEST_CASE("eggbox") {
  auto const rr4 = run("eggbox RR4");
  REQUIRE(rr4.code == 0);
  CHECK(count(rr4.out, "subgraph cluster_") == 5);
  CHECK(count(rr4.out, " -> ") == 4);

  auto const p0 = run("eggbox P0");
  CHECK(count(p0.out, "subgraph cluster_") == 1);
  CHECK(count(p0.out, "<TD") == 1);

  // Pfd4 is RR4 without its bottom D-class.
  auto const pfd4 = run("eggbox Pfd4");
  auto const a    = split_dot(rr4.out);
  auto const b    = split_dot(pfd4.out);
  REQUIRE(a.tables.size() == 5);
  CHECK(b.tables == std::vector<std::string>(a.tables.begin() + 1, a.tables.end()));
  CHECK(b.edges == std::vector<std::string>(a.edges.begin() + 1, a.edges.end()));

  auto const j = run_json("eggbox RR2 --format json");
  CHECK(j["d_classes"].size() == 3);
  CHECK(j["hasse"] == Json::parse("[[0,1],[1,2]]"));
}

TEST_CASE("eggbox shading follows the figure convention") {
  auto const dir = scratch();
  auto const j4  = dir / "j4.json";
  auto const z   = dir / "zeta.json";
  REQUIRE(run("build J4 -o " + j4.string()).code == 0);
  std::ofstream(z) << Json::array({to_json(zeta(4))}).dump();
  auto const r = run("eggbox RR4 --shade " + j4.string() + " --highlight " + z.string());
  REQUIRE(r.code == 0);
  // Dark orange: the group H-classes of F, one per equivalence on 4 points.
  CHECK(count(r.out, "BGCOLOR=\"darkorange\"") == oracle::bell(4));
  CHECK(count(r.out, "BGCOLOR=\"green\"") == 1);
  CHECK(count(r.out, "BGCOLOR=\"orange\"") > 0);
  CHECK(count(r.out, "TITLE=\"shaded=true\"") == count(r.out, "BGCOLOR=\"gray\"") + oracle::bell(4) + 1);
}

TEST_CASE("category") {
  auto const pt2 = run_json("category PT2 E");
  CHECK(pt2["objects"].size() == 4);
  CHECK(pt2["ei"]["holds"] == true);
  std::size_t total = 0;
  for (auto const& h : pt2["homs"]) {
    total += h["members"].size();
  }
  CHECK(total == 9);
  auto const p3 = run_json("category P3 F");
  CHECK(p3["ei"]["holds"] == false);
  CHECK(p3["ei"]["witness"].is_number());
}

TEST_CASE("stein") {
  auto const pt2 = run_json("stein PT2 E");
  CHECK(pt2["side"] == "left");
  CHECK(pt2["inverse_is_moebius"] == true);
  CHECK(pt2["multiplicative"] == true);
  CHECK(pt2["unitriangular"] == true);
  CHECK(pt2["transform"].size() == 9);
  CHECK(pt2["quotient"]["dimension"] == 9);
  CHECK(pt2["quotient"]["radical"] == 2);
  CHECK(pt2["quotient"]["reg_size"] == 7);

  auto const pfd2 = run_json("stein Pfd2 F");
  CHECK(pfd2["side"] == "right");
  CHECK(pfd2["quotient"]["reg_size"] == 3);
  CHECK(pfd2["quotient"]["radical"] == 2);

  auto const rr2 = run_json("stein RR2 F --side right");
  CHECK(rr2["multiplicative"] == true);
  CHECK(rr2["quotient"].contains("skipped"));
}

TEST_CASE("verify") {
  auto const all = run("verify all --nmax 0");
  CHECK(all.code == 0);
  CHECK(count(all.out, "PASS  [") == 13);
  CHECK(count(all.out, "FAIL") == 0);
  auto const rel = run("verify relations --nmax 2");
  CHECK(rel.code == 0);
  CHECK(rel.out == run("verify 3 --nmax 2").out);
  CHECK(rel.out.find("all 18 of 18 checks passed in 1 criterion") != std::string::npos);
}
