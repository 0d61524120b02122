// One PASS/FAIL line per acceptance criterion; failing checks are listed
// underneath. Exits nonzero if any criterion fails.
#include <cstdio>

#include "diagmon/verify.hpp"

int main() {
  int failed = 0;
  for (auto const& c : diagmon::criteria()) {
    auto const checks = diagmon::run_criterion(c.id);
    std::size_t bad    = 0;
    for (auto const& k : checks) {
      bad += !k.pass;
    }
    bool const pass = bad == 0 && !checks.empty();
    failed += !pass;
    std::printf("%s  %2d  %.*s (%zu checks)\n", pass ? "PASS" : "FAIL", c.id,
                static_cast<int>(c.title.size()), c.title.data(), checks.size());
    for (auto const& k : checks) {
      if (!k.pass) {
        std::printf("        failed: %s%s%s\n", k.label.c_str(), k.detail.empty() ? "" : ": ",
                    k.detail.c_str());
      }
    }
  }
  std::fflush(stdout);
  return failed == 0 ? 0 : 1;
}
