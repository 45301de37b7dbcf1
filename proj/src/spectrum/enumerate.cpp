#include "lifts.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

#include <array>
#include <cmath>
#include <optional>
#include <unordered_set>

namespace zetalab {

namespace {

using ElementD = GroupElement<double>;

struct Child {
  ElementD element{ElementD::Matrix::Identity(), 0};
  ElementKey key;
  bool is_new = false;
  bool candidate = false;
};

constexpr std::size_t kBlock = 4096;

}  // namespace

LengthSpectrum enumerate_spectrum(const FuchsianGroup& group, const Real& cutoff, EnumerationStats* stats) {
  if (!(cutoff > 0)) throw PreconditionError("enumerate_spectrum requires cutoff > 0");
  set_working_precision(group.precision_bits);
  const int bits = group.precision_bits;

  const auto letters = group.letter_elements_double();
  const auto domain = group.domain_double();
  const double L = to_double(cutoff);
  const double R = domain.covering_radius();
  // A lift of length <= L has its axis within R of the origin, so it moves
  // the origin by at most D. Every tile on the segment [0, g(0)] is centered
  // within D + R.
  const double D = 2 * std::asinh(std::cosh(R) * std::sinh(L / 2));
  const double margin = 1e-6 * (1 + D);
  const double ball = D + R + margin;
  const double length_slack = 1e-7 * (1 + L);
  const double chord_slack = 1e-7;

  std::vector<std::uint32_t> parent{0};
  std::vector<std::uint8_t> last_letter{255};
  std::vector<std::uint32_t> candidates;
  std::unordered_set<ElementKey, ElementKeyHash> seen;
  seen.insert(element_key(ElementD::identity(bits)));

  std::vector<std::uint32_t> frontier_ids{0};
  std::vector<ElementD> frontier{ElementD::identity(bits)};

  while (!frontier.empty()) {
    std::vector<std::uint32_t> next_ids;
    std::vector<ElementD> next;
    for (std::size_t begin = 0; begin < frontier.size(); begin += kBlock) {
      const std::size_t count = std::min(kBlock, frontier.size() - begin);
      std::vector<std::array<Child, 8>> children(count);
      parallel_for(count, [&](std::size_t i) {
        const std::size_t f = begin + i;
        const std::uint8_t back = last_letter[frontier_ids[f]];
        for (std::size_t k = 0; k < letters.size(); ++k) {
          if (back != 255 && k == (back ^ 1u)) continue;
          Child& c = children[i][k];
          c.element = frontier[f] * letters[k];
          const double d = displacement_at_center(c.element);
          if (!(d <= ball)) continue;
          c.key = element_key(c.element);
          if (seen.count(c.key)) continue;
          c.is_new = true;
          if (d > D + margin) continue;
          const double tr = std::abs(c.element.trace());
          if (!(tr > 2 + 1e-9)) continue;
          if (2 * std::acosh(tr / 2) > L + length_slack) continue;
          const auto [p, q] = fixed_points(c.element);
          c.candidate = domain.chord_meets(p, q, chord_slack);
        }
      });
      for (std::size_t i = 0; i < count; ++i) {
        for (std::size_t k = 0; k < letters.size(); ++k) {
          Child& c = children[i][k];
          if (!c.is_new || !seen.insert(c.key).second) continue;
          const auto id = static_cast<std::uint32_t>(parent.size());
          parent.push_back(frontier_ids[begin + i]);
          last_letter.push_back(static_cast<std::uint8_t>(k));
          if (c.candidate) candidates.push_back(id);
          next_ids.push_back(id);
          next.push_back(c.element);
        }
      }
    }
    frontier_ids = std::move(next_ids);
    frontier = std::move(next);
  }

  const auto alphabet_letters = alphabet(static_cast<int>(group.generators.size()));
  auto word_of = [&](std::uint32_t id) {
    Word w;
    for (; id != 0; id = parent[id]) w.push_back(alphabet_letters[last_letter[id]]);
    std::reverse(w.begin(), w.end());
    return w;
  };

  // Recompute candidates at full precision.
  const auto letters_hp = group.letter_elements();
  const auto domain_hp = group.domain();
  const Real eps = detail::lift_slack(bits);
  std::vector<std::optional<detail::Lift>> exact(candidates.size());
  parallel_for(candidates.size(), [&](std::size_t i) {
    Word w = word_of(candidates[i]);
    Element h = evaluate_word<Real>(w, letters_hp, bits);
    if (!is_hyperbolic(h)) return;
    Real len = translation_length(h);
    if (len > cutoff || !detail::axis_meets_domain(h, domain_hp, eps)) return;
    exact[i] = detail::Lift{std::move(h), std::move(len), std::move(w)};
  });
  std::vector<detail::Lift> lifts;
  for (auto& e : exact)
    if (e) lifts.push_back(std::move(*e));

  auto records = detail::classify_lifts(std::move(lifts), group, cutoff);
  if (stats) {
    stats->elements_visited = parent.size();
    stats->candidates = candidates.size();
    stats->classes = records.size();
    stats->search_radius = ball;
  }
  return assemble_spectrum(std::move(records), cutoff, group, true);
}

}  // namespace zetalab
