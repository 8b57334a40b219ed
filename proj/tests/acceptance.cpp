#include <cstdio>

#include "qtwist/acceptance.hpp"

int main() {
  int failed = 0;
  for (const auto& r : qtwist::accept::run_all()) {
    std::printf("[%s] criterion %d: %s | %s | %.2fs (budget %.0fs)\n", r.passed ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str(), r.seconds, r.budget_seconds);
    if (!r.passed) ++failed;
  }
  std::printf("%d of 10 criteria failed\n", failed);
  return failed == 0 ? 0 : 1;
}
