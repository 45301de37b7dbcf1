#include "zetalab/errors.hpp"
#include "zetalab/group/fuchsian.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace zetalab;

namespace {

const FuchsianGroup& bolza() {
  static const FuchsianGroup g = build_bolza_group(200);
  return g;
}

Real systole_closed_form() { return 2 * acosh(1 + sqrt(Real(2))); }

Word random_word(std::mt19937& rng, int generators, std::size_t len) {
  std::uniform_int_distribution<int> letter(0, 2 * generators - 1);
  Word w;
  for (std::size_t i = 0; i < len; ++i) {
    const int x = letter(rng);
    w.push_back({static_cast<std::uint8_t>(x / 2), x % 2 == 1});
  }
  return w;
}

Word rotate(const Word& w, std::size_t k) {
  Word r(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
  r.insert(r.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
  return r;
}

Word least_rotation_slow(const Word& w) {
  Word best = w;
  for (std::size_t k = 1; k < w.size(); ++k) best = std::min(best, rotate(w, k));
  return best;
}

}  // namespace

TEST_CASE("identity and inverse compose as expected") {
  set_working_precision(200);
  const Element& g = bolza().generators[1];
  const Element id = Element::identity(200);
  const Element left = id * g;
  const Element round = g * g.inverse();
  const Real slack = tolerance(200);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) {
      CHECK(abs(left(r, c) - g(r, c)) == 0);
      CHECK(abs(round(r, c) - id(r, c)) < slack);
    }
}

TEST_CASE("translation length of a systole generator matches iterated displacement") {
  set_working_precision(200);
  const Element& g = bolza().generators[0];
  const Real ell = translation_length(g);
  CHECK(abs(ell - systole_closed_form()) < Real("1e-55"));
  CHECK(to_double(ell) == doctest::Approx(3.05714).epsilon(1e-5));

  // d(z, g^n z)/n tends to the translation length from above.
  const Complex z(Real("0.3"), Real("0.1"));
  Complex w = z;
  Real previous(0);
  for (int n = 1; n <= 32; ++n) {
    w = g.apply(w);
    if (n == 16) previous = disk_distance(w, z) / n;
  }
  const Real per_step = disk_distance(w, z) / 32;
  CHECK(per_step >= ell - Real("1e-40"));
  CHECK(per_step - ell < (previous - ell));
  CHECK(to_double(Real(per_step - ell)) < 0.02);
}

TEST_CASE("non-hyperbolic elements are rejected") {
  set_working_precision(200);
  CHECK_THROWS_AS(translation_length(Element::identity(200)), NotHyperbolic);
  const Element parabolic = Element::real(Real(1), Real(1), Real(0), Real(1), 200);
  CHECK_THROWS_AS(translation_length(parabolic), NotHyperbolic);
  CHECK_FALSE(is_hyperbolic(parabolic));
}

TEST_CASE("Bolza group: four generators of trace 2(1+sqrt2) and a closing relator") {
  set_working_precision(200);
  const FuchsianGroup& g = bolza();
  CHECK(g.genus == 2);
  REQUIRE(g.generators.size() == 4);
  const Real trace = 2 * (1 + sqrt(Real(2)));
  for (const auto& e : g.generators) {
    CHECK(abs(abs(e.trace()) - trace) < Real("1e-55"));
    CHECK(abs(e.determinant() - Complex(Real(1))) < Real("1e-55"));
  }
  CHECK(g.relation_residual < ldexp(Real(1), -100));
  CHECK(g.relator.size() == 8);
  CHECK(abs(translation_length(g.generators[0]) - systole_closed_form()) < Real("1e-55"));
  CHECK(g.digest.size() == 16);
  CHECK(build_bolza_group(200).digest == g.digest);
}

TEST_CASE("canonical classes of short words") {
  set_working_precision(200);
  const FuchsianGroup& g = bolza();
  CHECK_THROWS_AS(canonical_class(parse_word("a1 A1"), g), TrivialWord);

  const ConjugacyClass ba = canonical_class(parse_word("b1 a1"), g);
  CHECK(ba.canonical_word == parse_word("a1 b1"));
  CHECK(ba.primitive);

  const ConjugacyClass abab = canonical_class(parse_word("a1 b1 a1 b1"), g);
  CHECK_FALSE(abab.primitive);
  CHECK(abab.root == parse_word("a1 b1"));
  CHECK(abs(abab.length - 2 * ba.length) < Real("1e-50"));

  CHECK_THROWS_AS(canonical_class(g.relator, g), NotHyperbolic);
}

TEST_CASE("word parsing and formatting round trip") {
  const Word w = parse_word("a1 B2 b1 A2");
  CHECK(format_word(w) == "a1 B2 b1 A2");
  CHECK(inverse(w) == parse_word("a2 B1 b2 A1"));
  CHECK(freely_reduce(parse_word("a1 b1 B1 A1 a2")) == parse_word("a2"));
  CHECK(cyclically_reduce(parse_word("b1 a1 a2 B1")) == parse_word("a1 a2"));
  CHECK(is_reduced(parse_word("a1 b1 A1")));
  CHECK_FALSE(is_cyclically_reduced(parse_word("a1 b1 A1")));
  CHECK(is_proper_power(parse_word("a1 a1")));
}

TEST_CASE("least rotation agrees with exhaustive search") {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t len = 1 + static_cast<std::size_t>(trial % 12);
    const Word w = random_word(rng, 2, len);
    CHECK(minimal_rotation(w) == least_rotation_slow(w));
  }
}

TEST_CASE("class invariants under rotation, conjugation and powers") {
  set_working_precision(200);
  const FuchsianGroup& g = bolza();
  std::mt19937 rng(777);
  int checked = 0;
  while (checked < 40) {
    const Word w = freely_reduce(random_word(rng, 2, 7));
    const Word r = cyclically_reduce(w);
    if (r.size() < 2) continue;
    ConjugacyClass base;
    try {
      base = canonical_class(w, g);
    } catch (const NotHyperbolic&) {
      continue;
    }
    ++checked;
    const ConjugacyClass rotated = canonical_class(rotate(r, r.size() / 2), g);
    CHECK(rotated.canonical_word == base.canonical_word);
    CHECK(abs(rotated.length - base.length) < Real("1e-50"));

    Word conj = parse_word("b2");
    conj.insert(conj.end(), w.begin(), w.end());
    conj.push_back(parse_word("B2").front());
    const ConjugacyClass conjugated = canonical_class(conj, g);
    CHECK(conjugated.canonical_word == base.canonical_word);
    CHECK(abs(conjugated.length - base.length) < Real("1e-50"));

    Word cube = r;
    cube.insert(cube.end(), r.begin(), r.end());
    cube.insert(cube.end(), r.begin(), r.end());
    const ConjugacyClass cubed = canonical_class(cube, g);
    CHECK(abs(cubed.length - 3 * base.length) < Real("1e-45"));
    CHECK(cubed.root == minimal_rotation(primitive_root(r)));
  }
}
