#include <catch2/catch_amalgamated.hpp>

#include "support/properties.hpp"

constexpr int kCases = 600;

TEST_CASE("randomized invariants", "[properties]") {
  for (const auto& prop : props::all()) {
    const auto t = prop(kCases);
    INFO(t.name << ": " << t.failures << " failures, first: " << t.first);
    CHECK(t.cases >= 500);
    CHECK(t.passed());
  }
}
