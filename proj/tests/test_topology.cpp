#include "zetalab/errors.hpp"
#include "zetalab/topology/topology.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace zetalab;

TEST_CASE("genus 2 and 3 ledgers") {
  const TopologyLedger t = ledger_for_genus(2);
  CHECK(t.euler_characteristic == -2);
  CHECK(t.betti_surface == 4);
  CHECK(t.betti_unit_tangent == 4);
  CHECK(t.predicted_order == 2);
  CHECK(t.fried_coefficient_magnitude == doctest::Approx(4 * std::numbers::pi * std::numbers::pi).epsilon(1e-14));
  CHECK(t.fried_coefficient_magnitude == doctest::Approx(39.4784176).epsilon(1e-9));
  CHECK(t.assumption == kOrientabilityAssumption);
  CHECK(ledger_for_genus(3).predicted_order == 4);
}

TEST_CASE("genus below 2 is unsupported") {
  CHECK_THROWS_AS(ledger_for_genus(1), UnsupportedGenus);
  CHECK_THROWS_AS(ledger_for_genus(0), UnsupportedGenus);
  CHECK_THROWS_AS(ledger_for_genus(-4), UnsupportedGenus);
}

TEST_CASE("multiplicity balance") {
  CHECK(multiplicity_balance(1, 4, 1).mR == 2);
  CHECK(multiplicity_balance(0, 0, 0).mR == 0);
  CHECK_THROWS_AS(multiplicity_balance(-1, 2, 1), PreconditionError);
  for (int g = 2; g <= 50; ++g) {
    const TopologyLedger t = ledger_for_genus(g);
    const MultiplicityLedger m = multiplicity_balance(1, 2 * g, 1);
    CHECK(m.mR == 2 * g - 2);
    CHECK(m.mR == -t.euler_characteristic);
    CHECK(m.mR == t.predicted_order);
    CHECK(t.betti_unit_tangent - 2 == t.predicted_order);
    CHECK(genus_from_order(t.predicted_order) == g);
  }
}

TEST_CASE("genus from order") {
  CHECK(genus_from_order(2) == 2);
  CHECK(genus_from_order(4) == 3);
  CHECK_THROWS_AS(genus_from_order(3), NotRealizable);
  CHECK_THROWS_AS(genus_from_order(0), NotRealizable);
  CHECK_THROWS_AS(genus_from_order(-2), NotRealizable);
}
