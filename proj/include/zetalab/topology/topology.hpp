#pragma once

#include <string>

namespace zetalab {

/// Topological bookkeeping for a closed oriented surface of genus g and its
/// unit tangent bundle M.
struct TopologyLedger {
  int genus = 0;
  int euler_characteristic = 0;  // 2 − 2g
  int betti_surface = 0;         // b1 of the surface, 2g
  int betti_unit_tangent = 0;    // b1(M), equal to 2g
  int predicted_order = 0;       // vanishing order of ζ_R at 0, −χ = b1(M) − 2
  double fried_coefficient_magnitude = 0;  // (2π)^{|χ|}
  /// Standing assumption under which the order prediction holds.
  std::string assumption;
};

struct MultiplicityLedger {
  int m0 = 0;
  int m1 = 0;
  int m2 = 0;
  int mR = 0;  // m1 − m0 − m2
};

inline constexpr const char* kOrientabilityAssumption =
    "stable and unstable bundles of the geodesic flow are orientable";

inline constexpr const char* kExponentConvention = "s^{χ(Σ)} ζ_R(s) holomorphic and nonzero at s = 0";

/// Throws UnsupportedGenus for g <= 1.
TopologyLedger ledger_for_genus(int genus);

/// Throws PreconditionError on negative inputs.
MultiplicityLedger multiplicity_balance(int m0, int m1, int m2);

/// Genus g with 2g − 2 = order. Throws NotRealizable for odd or nonpositive order.
int genus_from_order(int order);

}  // namespace zetalab
