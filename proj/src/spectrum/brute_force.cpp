#include "lifts.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

#include <cmath>
#include <deque>
#include <limits>

namespace zetalab {

namespace {

using ElementD = GroupElement<double>;

struct Survivor {
  Word word;
  ElementD element;
};

// Conjugates h so that its axis passes through the polygon, via the point of
// the axis nearest the origin.
template <typename Scalar>
GroupElement<Scalar> move_axis_into_domain(const GroupElement<Scalar>& h, const DirichletDomain<Scalar>& domain,
                                           const Scalar& eps, int bits) {
  const auto [p, q] = fixed_points(h);
  const auto reduction = domain.reduce_point(DirichletDomain<Scalar>::nearest_point(p, q), eps, bits);
  return reduction.transform * h * reduction.transform.inverse();
}

}  // namespace

int brute_force_word_bound(const FuchsianGroup& group, const Real& cutoff) {
  if (!(cutoff > 0)) return 0;
  double min_displacement = std::numeric_limits<double>::infinity();
  for (const auto& g : group.generators)
    min_displacement = std::min(min_displacement, to_double(translation_length(g)));
  return static_cast<int>(std::ceil(2 * to_double(cutoff) / min_displacement)) + 2;
}

LengthSpectrum brute_force_spectrum(const FuchsianGroup& group, const Real& cutoff,
                                    const BruteForceOptions& options, EnumerationStats* stats) {
  set_working_precision(group.precision_bits);
  const int bits = group.precision_bits;
  const int n = options.max_word_length.value_or(brute_force_word_bound(group, cutoff));
  const std::size_t alphabet_size = 2 * group.generators.size();

  std::vector<std::uint64_t> per_length(static_cast<std::size_t>(std::max(n, 0)) + 1, 0);
  std::uint64_t total = 0;
  for (int k = 1; k <= n; ++k) {
    per_length[k] = k == 1 ? alphabet_size : per_length[k - 1] * (alphabet_size - 1);
    total += per_length[k];
    if (total > options.word_budget)
      throw BudgetExceeded("brute force needs " + std::to_string(total) + "+ words, budget " +
                           std::to_string(options.word_budget));
  }
  if (stats) {
    stats->words_per_length.assign(per_length.size(), 0);
    stats->word_length_bound = n;
  }
  if (n <= 0) return assemble_spectrum({}, cutoff, group, true);

  const auto letters = group.letter_elements_double();
  const auto alphabet_letters = alphabet(static_cast<int>(group.generators.size()));
  const double L = to_double(cutoff);
  const double length_slack = 1e-7 * (1 + L);

  // Every reduced word, sharded by first letter.
  std::vector<std::vector<Survivor>> shards(alphabet_size);
  std::vector<std::vector<std::uint64_t>> visited(alphabet_size, std::vector<std::uint64_t>(per_length.size(), 0));
  parallel_for(alphabet_size, [&](std::size_t first) {
    std::vector<std::size_t> word{first};
    std::vector<ElementD> prefix{letters[first]};
    auto& out = shards[first];
    auto& counts = visited[first];
    while (!word.empty()) {
      const std::size_t depth = word.size();
      ++counts[depth];
      const ElementD& g = prefix.back();
      if (word.size() < 2 || word.front() != (word.back() ^ 1u)) {
        const double tr = std::abs(g.trace());
        if (tr > 2 + 1e-9 && 2 * std::acosh(tr / 2) <= L + length_slack) {
          Word w;
          for (auto k : word) w.push_back(alphabet_letters[k]);
          out.push_back({std::move(w), g});
        }
      }
      // Advance to the next reduced word in depth-first order.
      if (depth < static_cast<std::size_t>(n)) {
        std::size_t next = 0;
        if (next == (word.back() ^ 1u)) ++next;
        word.push_back(next);
        prefix.push_back(prefix.back() * letters[next]);
        continue;
      }
      while (!word.empty()) {
        std::size_t next = word.back() + 1;
        word.pop_back();
        prefix.pop_back();
        if (word.empty()) break;
        if (next == (word.back() ^ 1u)) ++next;
        if (next < alphabet_size) {
          word.push_back(next);
          prefix.push_back(prefix.back() * letters[next]);
          break;
        }
      }
    }
  });

  for (const auto& counts : visited)
    for (std::size_t k = 0; k < counts.size(); ++k)
      if (stats) stats->words_per_length[k] += counts[k];

  // Classes are identified by their lifts; a lift key maps to its lift.
  const auto domain_d = group.domain_double();
  const auto domain = group.domain();
  const auto letters_hp = group.letter_elements();
  const Real eps = detail::lift_slack(bits);
  std::vector<detail::Lift> lifts;
  std::unordered_map<ElementKey, std::size_t, ElementKeyHash> lift_index;

  auto offer_word = [&](std::size_t lift, const Word& w) {
    Word c = detail::canonical_word(w);
    if (shortlex_less(c, lifts[lift].word)) lifts[lift].word = std::move(c);
  };

  for (const auto& shard : shards) {
    for (const Survivor& s : shard) {
      const ElementD moved = move_axis_into_domain(s.element, domain_d, 1e-12, bits);
      if (auto it = lift_index.find(element_key(moved)); it != lift_index.end()) {
        offer_word(it->second, s.word);
        continue;
      }
      const Element h = evaluate_word<Real>(s.word, letters_hp, bits);
      if (!is_hyperbolic(h)) continue;
      const Real len = translation_length(h);
      if (len > cutoff) continue;
      const Element start = move_axis_into_domain(h, domain, eps, bits);
      if (auto it = lift_index.find(element_key(start)); it != lift_index.end()) {
        offer_word(it->second, s.word);
        continue;
      }
      // New class: collect all of its lifts.
      const Word canonical = detail::canonical_word(s.word);
      std::deque<Element> queue{start};
      lift_index.emplace(element_key(start), lifts.size());
      lifts.push_back({start, len, canonical});
      while (!queue.empty()) {
        const Element c = queue.front();
        queue.pop_front();
        for (std::size_t k = 0; k < letters_hp.size(); ++k) {
          Element d = letters_hp[k ^ 1u] * c * letters_hp[k];
          if (!detail::axis_meets_domain(d, domain, eps)) continue;
          if (!lift_index.emplace(element_key(d), lifts.size()).second) continue;
          lifts.push_back({d, translation_length(d), canonical});
          queue.push_back(std::move(d));
        }
      }
    }
  }

  auto records = detail::classify_lifts(std::move(lifts), group, cutoff);
  if (stats) stats->classes = records.size();
  return assemble_spectrum(std::move(records), cutoff, group, true);
}

}  // namespace zetalab
