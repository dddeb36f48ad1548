#include <doctest.h>

#include "pbzl/verify.hpp"

using namespace pbzl;

TEST_CASE("the catalog-only suite passes every theorem") {
  const SuiteReport report = run_verification_suite({4, true});
  CHECK(report.all_passed());
  for (const auto& r : report.results) {
    CAPTURE(r.name);
    CHECK(r.failures == 0);
    if (r.failures > 0) MESSAGE(r.first_counterexample);
  }
  // Every property must actually fire somewhere on the catalog.
  for (const auto& r : report.results) {
    CAPTURE(r.name);
    CHECK(r.checked > 0);
  }
}

TEST_CASE("suite reports are deterministic") {
  const SuiteReport a = run_verification_suite({3, false});
  const SuiteReport b = run_verification_suite({3, false});
  REQUIRE(a.results.size() == b.results.size());
  CHECK(a.algebras == b.algebras);
  for (size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].name == b.results[i].name);
    CHECK(a.results[i].checked == b.results[i].checked);
    CHECK(a.results[i].failures == b.results[i].failures);
  }
}
