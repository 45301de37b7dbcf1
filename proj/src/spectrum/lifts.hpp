#pragma once

// Shared class identification for both enumeration routes. A "lift" is a
// hyperbolic group element whose axis crosses the fundamental polygon; every
// conjugacy class has finitely many, and they are connected by conjugation
// with side pairings.

#include "zetalab/spectrum/spectrum.hpp"

#include <unordered_map>

namespace zetalab::detail {

struct Lift {
  Element element;
  Real length;
  Word word;  // any word in the conjugacy class
};

/// Slack for "axis meets the closed polygon" in high precision (Klein units).
Real lift_slack(int bits);

bool axis_meets_domain(const Element& h, const DirichletDomain<Real>& domain, const Real& eps);

/// Deduplicates lifts, drops non-primitive ones (a shorter lift shares the
/// oriented axis), and groups the rest into conjugacy classes. Throws
/// PrecisionExhausted if a conjugate lift that should be present is missing.
std::vector<ClassRecord> classify_lifts(std::vector<Lift> lifts, const FuchsianGroup& group,
                                        const Real& cutoff);

/// Canonical free-group form used for representative words.
Word canonical_word(const Word& w);

}  // namespace zetalab::detail
