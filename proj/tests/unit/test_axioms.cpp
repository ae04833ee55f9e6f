#include <doctest.h>

#include "../support/oracles.hpp"

using namespace kr;

TEST_CASE("crystal axioms on random elements") {
  testing::AxiomSuiteResult result = testing::run_axiom_suite(2000, 20240917);
  CHECK(result.samples == 2000);
  CHECK(result.failure_count == 0);
  if (!result.failures.empty()) MESSAGE(result.failures.front());
}
