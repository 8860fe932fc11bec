#include "doctest.h"
#include "pbz/errors.hpp"
#include "pbz/verify.hpp"

using namespace pbz;

TEST_CASE("suite reports are deterministic across runs and pool widths") {
  for (const char* name : {"si-chains", "con-oracle", "charg"}) {
    SuiteOptions one;
    one.jobs = 1;
    SuiteOptions many;
    many.jobs = 8;
    SuiteReport a = run_suite(name, one);
    SuiteReport b = run_suite(name, many);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i) {
      CHECK(a.checks[i].name == b.checks[i].name);
      CHECK(a.checks[i].pass == b.checks[i].pass);
      CHECK(a.checks[i].detail == b.checks[i].detail);
    }
  }
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS((void)run_suite("bogus"), Error);
}
