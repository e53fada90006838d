#include <catch_amalgamated.hpp>

#include "suites.hpp"

namespace {

void require_clean(const suites::SuiteResult& r) {
  INFO(r.name << ": " << r.failed << " of " << r.checks << " checks failed");
  CHECK(r.instances > 0);
  for (const auto& f : r.failures) UNSCOPED_INFO(f);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("cones are generated by their bases", "[property]") { require_clean(suites::generated_cone_suite(11, 20)); }

TEST_CASE("psi_max of a Gerstewitz functional", "[property]") { require_clean(suites::psi_max_suite(12, 20)); }

TEST_CASE("inclusions between augmented dual sets", "[property]") { require_clean(suites::inclusion_suite(13, 20)); }

TEST_CASE("augmented dual cones are convex cones", "[property]") { require_clean(suites::structure_suite(14, 16)); }

TEST_CASE("witness and shrink constructions", "[property]") { require_clean(suites::witness_suite(15, 20)); }

TEST_CASE("origin exclusion chain", "[property]") { require_clean(suites::origin_chain_suite(16, 20, 8)); }

TEST_CASE("interior of the dual cone", "[property]") { require_clean(suites::dual_interior_suite(17, 6, 40)); }

TEST_CASE("psi_max of the orthant gauge is l_inf", "[property]") { require_clean(suites::orthant_gauge_suite(18, 90)); }

TEST_CASE("strict separation round trip", "[property]") { require_clean(suites::round_trip_suite(19, 30)); }
