// Acceptance gate: one line per headline criterion, all must pass.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>

#include "growthlab/selftest.hpp"

TEST_CASE("acceptance criteria") {
  auto results = growthlab::run_acceptance(0);
  REQUIRE(results.size() == 9);
  for (const auto& r : results) {
    std::printf("%s criterion %d: %s — %s\n", r.pass ? "PASS" : "FAIL", r.id,
                r.name.c_str(), r.detail.c_str());
    std::fflush(stdout);
    CAPTURE(r.id);
    CAPTURE(r.detail);
    CHECK(r.pass);
  }
}
