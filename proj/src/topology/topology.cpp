#include "zetalab/topology/topology.hpp"

#include "zetalab/errors.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace zetalab {

TopologyLedger ledger_for_genus(int genus) {
  if (genus <= 1)
    throw UnsupportedGenus("genus " + std::to_string(genus) + " admits no hyperbolic metric (needs g >= 2)");
  TopologyLedger t;
  t.genus = genus;
  t.euler_characteristic = 2 - 2 * genus;
  t.betti_surface = 2 * genus;
  t.betti_unit_tangent = t.betti_surface;
  t.predicted_order = t.betti_unit_tangent - 2;
  t.fried_coefficient_magnitude = std::pow(2 * std::numbers::pi, std::abs(t.euler_characteristic));
  t.assumption = kOrientabilityAssumption;
  return t;
}

MultiplicityLedger multiplicity_balance(int m0, int m1, int m2) {
  if (m0 < 0 || m1 < 0 || m2 < 0) throw PreconditionError("multiplicities must be nonnegative");
  return {m0, m1, m2, m1 - m0 - m2};
}

int genus_from_order(int order) {
  if (order <= 0 || order % 2 != 0)
    throw NotRealizable("order " + std::to_string(order) +
                        " is not 2g - 2 for any closed oriented hyperbolic surface");
  return order / 2 + 1;
}

}  // namespace zetalab
