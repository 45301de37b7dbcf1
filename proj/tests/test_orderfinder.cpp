#include "zetalab/errors.hpp"
#include "zetalab/orderfinder/orderfinder.hpp"
#include "zetalab/schottky/schottky.hpp"

#include <doctest.h>

#include <numbers>

using namespace zetalab;
using Cd = std::complex<double>;

namespace {

constexpr double two_pi = 2 * std::numbers::pi;

int winding_d(const std::function<Cd(const Cd&)>& f, double radius, Cd center = {0, 0}) {
  return winding_order<double>(f, center, radius).winding;
}

}  // namespace

TEST_CASE("windings of simple zeros and poles") {
  CHECK(winding_d([](const Cd& s) { return s; }, 0.5) == 1);
  CHECK(winding_d([](const Cd& s) { return s * s; }, 0.5) == 2);
  CHECK(winding_d([](const Cd& s) { return 1.0 / s; }, 0.5) == -1);
  CHECK(winding_d([](const Cd& s) { return (s - 0.01) * (s + 0.01); }, 0.1) == 2);
  CHECK(winding_d([](const Cd& s) { return (two_pi * s) * (two_pi * s) * (1.0 + s / 3.0); }, 0.1) == 2);
  CHECK(winding_d([](const Cd& s) { return s - 3.0; }, 0.5) == 0);
  CHECK(winding_d([](const Cd& s) { return (s - 0.2) / (s + 0.3); }, 0.1, {0.2, 0}) == 1);
}

TEST_CASE("a zero on the contour raises instead of returning an integer") {
  CHECK_THROWS_AS(winding_d([](const Cd& s) { return s - 0.5; }, 0.5), ZeroOnContour);
  CHECK_THROWS_AS(winding_d([](const Cd& s) { return s * s + 0.25; }, 0.5), ZeroOnContour);
  set_working_precision(200);
  auto f = [](const Complex& s) { return s - Complex(Real("0.5")); };
  CHECK_THROWS_AS(winding_order<Real>(f, Complex(Real(0)), Real("0.5")), ZeroOnContour);
}

TEST_CASE("sampling refines for fast phase and gives up past the sample cap") {
  const auto r = winding_order<double>([](const Cd& s) { return std::pow(s, 200); }, Cd(0, 0), 1.0);
  CHECK(r.winding == 200);
  CHECK(r.samples >= 1024);
  // 4000 = 4096 - 96 aliases to -96 on every dyadic grid up to 1024
  const auto r4000 = winding_order<double>([](const Cd& s) { return std::pow(s, 4000); }, Cd(0, 0), 1.0);
  CHECK(r4000.winding == 4000);
  CHECK_THROWS_AS(winding_order<double>([](const Cd& s) { return std::pow(s, 40000); }, Cd(0, 0), 1.0),
                  UnwrapFailure);
  CHECK_THROWS_AS(winding_order<double>([](const Cd& s) { return s; }, Cd(0, 0), 1.0, 8), PreconditionError);
}

TEST_CASE("leading coefficients") {
  set_working_precision(200);
  const Real tp = 2 * pi();
  auto square = [&](const Complex& s) { return Complex(tp) * s * Complex(tp) * s; };
  const std::vector<Real> radii{Real("0.1"), Real("0.05"), Real("0.025")};
  const auto [c1, r1] = leading_coefficient<Real>(square, 2, Complex(Real(0)), radii);
  CHECK(abs(c1 - Complex(tp * tp)) < Real("1e-50"));
  CHECK(to_double(Real(c1.real())) == doctest::Approx(39.4784176).epsilon(1e-9));

  auto fried = [&](const Complex& s) { return square(s) * (Complex(Real(1)) + s / Complex(Real(3))); };
  const auto [c2, r2] = leading_coefficient<Real>(fried, 2, Complex(Real(0)), radii);
  CHECK(abs(c2 - Complex(tp * tp)) < Real("1e-6"));

  CHECK_THROWS_AS(leading_coefficient<Real>(square, 1, Complex(Real(0)), radii), InconsistentOrder);
  CHECK_THROWS_AS(leading_coefficient<Real>(square, 3, Complex(Real(0)), radii), InconsistentOrder);
  CHECK_THROWS_AS(leading_coefficient<Real>(square, 2, Complex(Real(0)), {Real(1), Real(2), Real(3)}),
                  PreconditionError);
}

TEST_CASE("winding is scale invariant and additive over products") {
  auto f = [](const Cd& s) { return (s - 0.02) * (s + Cd(0, 0.03)); };
  auto g = [](const Cd& s) { return 1.0 / (s - Cd(0.01, 0.01)); };
  for (const Cd scale : {Cd(1, 0), Cd(-3, 2), Cd(1e-6, 0)}) {
    CHECK(winding_d([&](const Cd& s) { return scale * f(s); }, 0.1) == winding_d(f, 0.1));
  }
  CHECK(winding_d([&](const Cd& s) { return f(s) * g(s); }, 0.1) == winding_d(f, 0.1) + winding_d(g, 0.1));

  set_working_precision(200);
  const std::vector<Real> radii{Real("0.1"), Real("0.05"), Real("0.025")};
  auto h = [](const Complex& s) { return s * s * s * (Complex(Real(2)) + s); };
  const Complex k(Real(-3), Real(2));
  const auto [a, ra] = leading_coefficient<Real>(h, 3, Complex(Real(0)), radii);
  const auto [b, rb] = leading_coefficient<Real>([&](const Complex& s) { return k * h(s); }, 3, Complex(Real(0)), radii);
  CHECK(abs(b - k * a) < Real("1e-45"));
}

TEST_CASE("report and CSV row") {
  set_working_precision(200);
  auto f = [](const Complex& s) { return Complex(Real(5)) * s * s; };
  const auto r = contour_order_report<Real>(f, Complex(Real(0)), Real("0.1"));
  CHECK(r.winding == 2);
  REQUIRE(r.leading_coefficient);
  CHECK(abs(*r.leading_coefficient - Complex(Real(5))) < Real("1e-50"));
  CHECK(contour_csv_row(r, 6).rfind("0,0,0.1,64,2,", 0) == 0);
  CHECK(contour_csv_header().rfind("center_re,center_im,radius,samples,winding", 0) == 0);
}

TEST_CASE("Schottky Ruelle zeta at s = 0: stable order and leading coefficient") {
  set_working_precision(200);
  const SchottkyGroup g = build_schottky(Real(6), 200);
  const TraceTables tables = trace_tables(g, 10);
  std::vector<ContourOrderReport<Real>> reports;
  for (int N : {8, 10}) {
    auto f = [&](const Complex& s) { return schottky_ruelle(tables, s, N).value; };
    reports.push_back(contour_order_report<Real>(f, Complex(Real(0)), Real("0.05")));
  }
  CHECK(reports[0].winding == reports[1].winding);
  for (const auto& r : reports) {
    REQUIRE(r.leading_coefficient);
    const Real c = abs(*r.leading_coefficient);
    CHECK(c > 0);
    CHECK(r.residual < Real("1e-4") * c);
  }
  CHECK(abs(*reports[0].leading_coefficient - *reports[1].leading_coefficient) <
        Real("1e-4") * abs(*reports[1].leading_coefficient));
}
