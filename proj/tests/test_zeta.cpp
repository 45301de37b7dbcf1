#include "zetalab/errors.hpp"
#include "zetalab/zeta/zeta.hpp"

#include <doctest.h>

using namespace zetalab;

namespace {

LengthSpectrum toy(const std::vector<std::pair<const char*, int>>& lengths, const char* cutoff) {
  std::vector<ClassRecord> records;
  for (const auto& [len, mult] : lengths)
    for (int k = 0; k < mult; ++k) records.push_back({Real(len), parse_word("a1")});
  return assemble_spectrum(records, Real(cutoff), "toy", "toy", 200, true);
}

const FuchsianGroup& bolza() {
  static const FuchsianGroup g = build_bolza_group(200);
  return g;
}

const LengthSpectrum& bolza8() {
  static const LengthSpectrum s = enumerate_spectrum(bolza(), Real(8));
  return s;
}

Real level_remainder(const LengthSpectrum& spec, const Complex& s, int M) {
  Complex sum(Real(0));
  for (const auto& e : spec.entries)
    sum += Complex(Real(e.multiplicity)) * log(Complex(Real(1)) - exp(-(Complex(Real(M + 1)) + s) * Complex(e.length)));
  return abs(sum);
}

}  // namespace

TEST_CASE("one-factor and two-factor products") {
  set_working_precision(200);
  const LengthSpectrum one = toy({{"1", 1}}, "1");
  const ZetaEvaluation r = ruelle_product(one, Complex(Real(1)));
  CHECK(abs(r.value - Complex(1 - exp(Real(-1)))) < Real("1e-55"));
  CHECK(to_double(Real(r.value.real())) == doctest::Approx(0.6321206).epsilon(1e-7));
  const ZetaEvaluation z = selberg_product(one, Complex(Real(1)), 1);
  CHECK(abs(z.value - Complex((1 - exp(Real(-1))) * (1 - exp(Real(-2))))) < Real("1e-55"));
  CHECK(to_double(Real(z.value.real())) == doctest::Approx(0.5465723).epsilon(1e-7));
  CHECK(z.kind_label() == "selberg(1)");
}

TEST_CASE("empty spectrum gives 1") {
  set_working_precision(200);
  const LengthSpectrum empty = toy({}, "1");
  for (const Complex& s : {Complex(Real(2)), Complex(Real("0.5"), Real(3))}) {
    CHECK(abs(ruelle_product(empty, s).value - Complex(Real(1))) == 0);
    CHECK(abs(selberg_product(empty, s, 4).value - Complex(Real(1))) == 0);
  }
}

TEST_CASE("selberg with M = 0 is the ruelle product") {
  set_working_precision(200);
  for (const Complex& s : {Complex(Real(2)), Complex(Real(3), Real(1))}) {
    const ZetaEvaluation r = ruelle_product(bolza8(), s);
    const ZetaEvaluation z = selberg_product(bolza8(), s, 0);
    CHECK(r.log_value == z.log_value);
    CHECK(r.value == z.value);
  }
}

TEST_CASE("relation residual for a single factor") {
  set_working_precision(200);
  const LengthSpectrum one = toy({{"1", 1}}, "1");
  const RelationCheck c = selberg_relation_residual(one, Complex(Real(2)), 0);
  CHECK(abs(c.residual - abs(log(1 - exp(Real(-3))))) < Real("1e-55"));
  CHECK(c.holds());
}

TEST_CASE("relation residual on a two-entry spectrum equals the level remainder") {
  set_working_precision(200);
  const LengthSpectrum two = toy({{"1", 2}, {"1.5", 3}}, "2");
  for (int M : {0, 1, 3, 7}) {
    for (const Complex& s : {Complex(Real(2)), Complex(Real("1.5"), Real("0.7"))}) {
      const RelationCheck c = selberg_relation_residual(two, s, M);
      CHECK(abs(c.residual - level_remainder(two, s, M)) < Real("1e-55"));
      CHECK(c.holds());
    }
  }
  CHECK_THROWS_AS(selberg_relation_residual(two, Complex(Real(1)), 2), PreconditionError);
}

TEST_CASE("Bolza relation bound and its decay in M") {
  set_working_precision(200);
  const Real sys = bolza8().systole();
  const Real classes(static_cast<double>(bolza8().total_multiplicity()));
  const RelationCheck c20 = selberg_relation_residual(bolza8(), Complex(Real(2)), 20);
  CHECK(c20.holds());
  CHECK(c20.bound <= classes * exp(-23 * sys));
  const Real slack = tolerance(200);
  const RelationCheck c25 = selberg_relation_residual(bolza8(), Complex(Real(2)), 25);
  const Real ratio = (c25.bound - slack) / (c20.bound - slack);
  CHECK(to_double(Real(ratio / exp(-5 * sys))) == doctest::Approx(1.0).epsilon(1e-3));
}

TEST_CASE("Selberg M = 30 and M = 31 differ by the next level only") {
  set_working_precision(200);
  const Complex s(Real(2));
  const ZetaEvaluation a = selberg_product(bolza8(), s, 30);
  const ZetaEvaluation b = selberg_product(bolza8(), s, 31);
  const Real classes(static_cast<double>(bolza8().total_multiplicity()));
  CHECK(abs(a.log_value - b.log_value) <= exp(-33 * bolza8().systole()) * classes);
}

TEST_CASE("conjugate symmetry") {
  set_working_precision(200);
  const Complex s(Real(2), Real("1.25"));
  const ZetaEvaluation a = ruelle_product(bolza8(), s);
  const ZetaEvaluation b = ruelle_product(bolza8(), conj(s));
  CHECK(abs(a.value - conj(b.value)) < Real("1e-55"));
  const ZetaEvaluation c = selberg_product(bolza8(), s, 5);
  const ZetaEvaluation d = selberg_product(bolza8(), conj(s), 5);
  CHECK(abs(c.value - conj(d.value)) < Real("1e-55"));
}

TEST_CASE("cutoff 7 value is within its truncation bound of the cutoff 8 value") {
  set_working_precision(200);
  const LengthSpectrum seven = enumerate_spectrum(bolza(), Real(7));
  const Complex s(Real(2));
  const ZetaEvaluation a = ruelle_product(seven, s);
  const ZetaEvaluation b = ruelle_product(bolza8(), s);
  CHECK(a.bound_is_finite());
  CHECK(abs(a.log_value - b.log_value) <= a.truncation_bound);
  CHECK(b.truncation_bound < a.truncation_bound);
}

TEST_CASE("no finite bound at or left of Re s = 1") {
  set_working_precision(200);
  const ZetaEvaluation z = ruelle_product(bolza8(), Complex(Real("0.9")));
  CHECK_FALSE(z.bound_is_finite());
  const std::string row = zeta_csv_row(z, 10);
  CHECK(row.substr(row.size() - 3) == "inf");
  CHECK(zeta_csv_header() == "s_re,s_im,kind,log_re,log_im,value_re,value_im,trunc_bound");
}
