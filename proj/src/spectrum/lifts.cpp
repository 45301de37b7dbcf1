#include "lifts.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace zetalab::detail {

Real lift_slack(int bits) { return cluster_resolution(bits); }

bool axis_meets_domain(const Element& h, const DirichletDomain<Real>& domain, const Real& eps) {
  const auto [p, q] = fixed_points(h);
  return domain.chord_meets(p, q, eps);
}

Word canonical_word(const Word& w) { return minimal_rotation(cyclically_reduce(w)); }

namespace {

// Oriented axis identity: endpoints rounded to 2^-24.
using AxisKey = std::array<std::int64_t, 4>;

AxisKey axis_key(const Element& h) {
  const auto [p, q] = fixed_points(h);
  auto r = [](const Real& x) { return std::llround(std::ldexp(to_double(x), 24)); };
  return {r(p.real()), r(p.imag()), r(q.real()), r(q.imag())};
}

struct DisjointSets {
  std::vector<std::size_t> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<ClassRecord> classify_lifts(std::vector<Lift> lifts, const FuchsianGroup& group,
                                        const Real& cutoff) {
  const int bits = group.precision_bits;

  // Deduplicate; keep the shortlex-least canonical word.
  std::vector<std::pair<ElementKey, std::size_t>> keyed;
  keyed.reserve(lifts.size());
  for (std::size_t i = 0; i < lifts.size(); ++i) {
    lifts[i].word = canonical_word(lifts[i].word);
    keyed.emplace_back(element_key(lifts[i].element), i);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<Lift> unique;
  std::vector<ElementKey> keys;
  for (std::size_t i = 0; i < keyed.size();) {
    std::size_t j = i, best = keyed[i].second;
    for (; j < keyed.size() && keyed[j].first == keyed[i].first; ++j)
      if (shortlex_less(lifts[keyed[j].second].word, lifts[best].word)) best = keyed[j].second;
    unique.push_back(std::move(lifts[best]));
    keys.push_back(keyed[i].first);
    i = j;
  }

  // Powers share the oriented axis of their root and are at least twice as long.
  std::map<AxisKey, Real> shortest_on_axis;
  std::vector<AxisKey> axes(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) {
    axes[i] = axis_key(unique[i].element);
    auto [it, inserted] = shortest_on_axis.try_emplace(axes[i], unique[i].length);
    if (!inserted && unique[i].length < it->second) it->second = unique[i].length;
  }
  std::vector<char> primitive(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i)
    primitive[i] = unique[i].length < shortest_on_axis.at(axes[i]) * Real(1.5);

  std::unordered_map<ElementKey, std::size_t, ElementKeyHash> index;
  index.reserve(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i) index.emplace(keys[i], i);

  const auto letters = group.letter_elements();
  const auto domain = group.domain();
  const Real eps = lift_slack(bits);

  // Neighbor lifts s⁻¹ h s for every letter s.
  std::vector<std::vector<std::size_t>> neighbors(unique.size());
  std::vector<char> missing(unique.size(), 0);
  parallel_for(unique.size(), [&](std::size_t i) {
    if (!primitive[i]) return;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const Element& s = letters[k];
      const Element c = letters[k ^ 1u] * unique[i].element * s;
      auto it = index.find(element_key(c));
      if (it != index.end()) {
        neighbors[i].push_back(it->second);
      } else if (axis_meets_domain(c, domain, eps)) {
        missing[i] = 1;
      }
    }
  });
  if (std::any_of(missing.begin(), missing.end(), [](char m) { return m != 0; }))
    throw PrecisionExhausted("conjugate lift missing from the candidate set");

  DisjointSets sets(unique.size());
  for (std::size_t i = 0; i < unique.size(); ++i)
    for (std::size_t j : neighbors[i])
      if (primitive[j]) sets.unite(i, j);

  // Roots are the smallest index of each component, so iteration order is fixed.
  std::map<std::size_t, std::vector<std::size_t>> components;
  for (std::size_t i = 0; i < unique.size(); ++i)
    if (primitive[i]) components[sets.find(i)].push_back(i);

  const Real tol = tolerance(bits);
  std::vector<ClassRecord> out;
  for (const auto& [root, members] : components) {
    std::size_t best = members.front();
    Real lo = unique[best].length, hi = lo;
    for (std::size_t m : members) {
      lo = std::min(lo, unique[m].length);
      hi = std::max(hi, unique[m].length);
      if (shortlex_less(unique[m].word, unique[best].word)) best = m;
    }
    if (hi - lo > tol) throw PrecisionExhausted("conjugate lifts disagree in length");
    if (unique[best].length > cutoff) continue;
    out.push_back({unique[best].length, unique[best].word});
  }
  return out;
}

}  // namespace zetalab::detail
