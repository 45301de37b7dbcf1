#include "zetalab/errors.hpp"
#include "zetalab/schottky/schottky.hpp"
#include "zetalab/zeta/zeta.hpp"

#include <doctest.h>

#include <array>

using namespace zetalab;

namespace {

const SchottkyGroup& group6() {
  static const SchottkyGroup g = build_schottky(Real(6), 200);
  return g;
}

const TraceTables& tables12() {
  static const TraceTables t = trace_tables(group6(), 12);
  return t;
}

// Symbol strings over {0,1,2,3} where x is never followed by its inverse
// x^1, read cyclically.
std::uint64_t admissible_strings(int n) {
  std::uint64_t count = 0;
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) ok = w[static_cast<std::size_t>((i + 1) % n)] != (w[static_cast<std::size_t>(i)] ^ 1);
    if (n == 1) ok = true;
    count += ok ? 1 : 0;
    int k = 0;
    while (k < n && ++w[static_cast<std::size_t>(k)] == 4) w[static_cast<std::size_t>(k++)] = 0;
    if (k == n) break;
  }
  return count;
}

std::uint64_t admissibility_trace(int n) {
  using M = std::array<std::array<std::uint64_t, 4>, 4>;
  M a{}, p{};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      a[i][j] = j == (i ^ 1) ? 0 : 1;
      p[i][j] = i == j ? 1 : 0;
    }
  for (int k = 0; k < n; ++k) {
    M q{};
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        for (int l = 0; l < 4; ++l) q[i][j] += p[i][l] * a[l][j];
    p = q;
  }
  return p[0][0] + p[1][1] + p[2][2] + p[3][3];
}

}  // namespace

TEST_CASE("t = 6 group: disks from the generator matrices") {
  set_working_precision(200);
  const SchottkyGroup& g = group6();
  REQUIRE(g.disks.size() == 4);
  const auto letters = g.letter_elements();
  Real gap = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < 4; ++i) {
    const Real c = letters[i](1, 0).real();
    const Real center = -letters[i](1, 1).real() / c;
    const Real radius = 1 / abs(c);
    CHECK(abs(g.disks[i].center - center) < Real("1e-55"));
    CHECK(abs(g.disks[i].radius - radius) < Real("1e-55"));
    for (std::size_t j = 0; j < i; ++j) {
      const Real cj = letters[j](1, 0).real();
      const Real d = abs(center + letters[j](1, 1).real() / cj) - radius - 1 / abs(cj);
      if (d < gap) gap = d;
    }
  }
  CHECK(g.minimal_gap > 0);
  CHECK(abs(g.minimal_gap - gap) < Real("1e-55"));
  CHECK(abs(g.minimal_gap - Real("0.25")) < Real("1e-55"));
}

TEST_CASE("degenerate parameters are rejected") {
  set_working_precision(200);
  CHECK_THROWS_AS(build_schottky(Real(2), 200), NotHyperbolic);
  CHECK_THROWS_AS(build_schottky(Real("2.5"), 200), DisksOverlap);
}

TEST_CASE("commutator of the generators is hyperbolic") {
  set_working_precision(200);
  const auto& g = group6().generators;
  const Element comm = g[0] * g[1] * g[0].inverse() * g[1].inverse();
  CHECK(abs(comm.trace()) > 2);
  CHECK(is_hyperbolic(comm));
}

TEST_CASE("periodic word counts match the admissibility matrix and brute force") {
  set_working_precision(200);
  CHECK(periodic_word_count(1) == 4);
  CHECK(periodic_word_count(2) == 12);
  for (int n = 1; n <= 7; ++n) {
    CHECK(periodic_word_count(n) == admissibility_trace(n));
    CHECK(periodic_word_count(n) == admissible_strings(n));
    CHECK(periodic_words(group6(), n).size() == periodic_word_count(n));
  }
  const auto singles = periodic_words(group6(), 1);
  for (const auto& d : singles) CHECK(d.word.size() == 1);
  CHECK_THROWS_AS(periodic_words(group6(), 9, 1000), BudgetExceeded);
}

TEST_CASE("transfer traces") {
  set_working_precision(200);
  TraceTables toy;
  toy.precision_bits = 200;
  toy.by_period.resize(2);
  toy.by_period[1].push_back({Real(1), 1, 1 / (1 - exp(Real(-1)))});
  const Complex t0 = transfer_trace(toy, Complex(Real(0)), 1);
  CHECK(abs(t0 - Complex(1 / (1 - exp(Real(-1))))) < Real("1e-55"));
  CHECK(to_double(Real(t0.real())) == doctest::Approx(1.5819767).epsilon(1e-7));

  // Period one: the four generator letters, all with length 2 arccosh(3).
  const Real ell = 2 * acosh(Real(3));
  Real hand(0);
  for (const auto& e : group6().letter_elements()) {
    const Real l = translation_length(e);
    CHECK(abs(l - ell) < Real("1e-55"));
    hand += exp(-l) / (1 - exp(-l));
  }
  CHECK(abs(transfer_trace(tables12(), Complex(Real(1)), 1) - Complex(hand)) < Real("1e-55"));
  CHECK(abs(transfer_trace(group6(), Complex(Real(1)), 1) - Complex(hand)) < Real("1e-55"));
}

TEST_CASE("determinant coefficient recursion at low order") {
  set_working_precision(200);
  const Complex t1(Real("0.3"), Real("0.1")), t2(Real("-0.2"), Real("0.05"));
  const auto b = determinant_coefficients({t1, t2});
  REQUIRE(b.size() == 3);
  CHECK(abs(b[0] - Complex(Real(1))) == 0);
  CHECK(abs(b[1] + t1) < Real("1e-55"));
  CHECK(abs(b[2] - (t1 * t1 - t2) / Complex(Real(2))) < Real("1e-55"));
}

TEST_CASE("determinant agrees with the Euler product where both converge") {
  set_working_precision(200);
  const LengthSpectrum primitive = schottky_primitive_spectrum(group6(), Real(12));
  for (const Complex& s : {Complex(Real("1.5")), Complex(Real(2)), Complex(Real("1.5"), Real("0.5"))}) {
    const ZetaEvaluation det = fredholm_determinant(tables12(), s, 12);
    const ZetaEvaluation euler = selberg_product(primitive, s, 40);
    CHECK(abs(det.log_value - euler.log_value) <= Real("1e-8"));
    CHECK(det.kind_label() == "schottky-determinant(12)");
  }
}

TEST_CASE("conjugate symmetry and real values right of delta") {
  set_working_precision(200);
  const Complex s(Real("0.8"), Real("0.6"));
  const ZetaEvaluation a = fredholm_determinant(tables12(), s, 10);
  const ZetaEvaluation b = fredholm_determinant(tables12(), conj(s), 10);
  CHECK(abs(a.value - conj(b.value)) < Real("1e-50"));
  const ZetaEvaluation r = schottky_ruelle(tables12(), Complex(Real("0.5")), 10);
  CHECK(r.value.imag() == 0);
  CHECK(abs(r.value) > 0);
}

TEST_CASE("first real zero is stable between orders 10 and 12") {
  set_working_precision(200);
  const auto d10 = first_real_zero(tables12(), 10);
  const auto d12 = first_real_zero(tables12(), 12);
  REQUIRE(d10);
  REQUIRE(d12);
  CHECK(abs(*d10 - *d12) < Real("1e-9"));
  CHECK(to_double(*d12) == doctest::Approx(0.2299983).epsilon(1e-6));
  // bisection stops at width 2^-50
  const Real h("1e-13");
  const Real left = fredholm_determinant(tables12(), Complex(*d12 - h), 12).value.real();
  const Real right = fredholm_determinant(tables12(), Complex(*d12 + h), 12).value.real();
  CHECK((left < 0) != (right < 0));
}

TEST_CASE("config parsing") {
  const SchottkyConfig c = parse_schottky_config("# t=6 group\ntrace_parameter = 6.5\nmax_order = 10\n");
  CHECK(c.trace_parameter == Real("6.5"));
  CHECK(c.max_order == 10);
  CHECK(c.precision_bits == 200);
  CHECK_THROWS_AS(parse_schottky_config("cutoff = 1\n"), FormatError);
  CHECK_THROWS_AS(parse_schottky_config("max_order = 3\nmax_order = 4\n"), FormatError);
  CHECK_THROWS_AS(parse_schottky_config("max_order = ten\n"), FormatError);
  CHECK_THROWS_AS(parse_schottky_config("max_order\n"), FormatError);
}
