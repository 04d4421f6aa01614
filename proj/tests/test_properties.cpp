#include <doctest.h>

#include "properties.hpp"

namespace {

void require_property(const sgtest::PropertyResult& r) {
  INFO(r.name << ": " << r.failures << " failures; first:\n" << r.first_failure);
  CHECK(r.cases >= sgtest::kPropertyCases);
  CHECK(r.ok());
}

}  // namespace

TEST_CASE("property: switching spectrum invariance") { require_property(sgtest::prop_switching_spectrum()); }
TEST_CASE("property: cycle signs under switching") { require_property(sgtest::prop_cycle_sign_switching()); }
TEST_CASE("property: double cover balance") { require_property(sgtest::prop_double_cover_balance()); }
TEST_CASE("property: shortest negative cycle") { require_property(sgtest::prop_shortest_negative_cycle()); }
TEST_CASE("property: switching class count") { require_property(sgtest::prop_switching_class_count()); }
TEST_CASE("property: Rayleigh moves") { require_property(sgtest::prop_rayleigh_moves()); }

TEST_CASE("property suites are reproducible") {
  const auto a = sgtest::prop_rayleigh_moves(7, 200);
  const auto b = sgtest::prop_rayleigh_moves(7, 200);
  CHECK(a.cases == b.cases);
  CHECK(a.failures == b.failures);
}
