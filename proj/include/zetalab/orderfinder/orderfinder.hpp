#pragma once

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"
#include "zetalab/parallel.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace zetalab {

inline constexpr int kMinContourSamples = 64;
inline constexpr int kMaxContourSamples = 1 << 16;

template <typename Scalar>
struct ContourOrderReport {
  std::complex<Scalar> center;
  Scalar radius;
  int samples = 0;
  int winding = 0;
  Scalar min_modulus_on_contour;
  Scalar max_modulus_on_contour;
  std::optional<std::complex<Scalar>> leading_coefficient;
  Scalar residual{0};
};

/// Mantissa bits of the scalar: 53 for double, the working precision for Real.
template <typename Scalar>
int scalar_precision_bits() {
  if constexpr (std::is_same_v<Scalar, double>) {
    return std::numeric_limits<double>::digits;
  } else {
    return working_precision_bits();
  }
}

/// Zeros minus poles of f inside the circle |s − center| = radius, counted by
/// phase unwrapping. A grid counts when every step between neighbouring
/// samples turns the phase by less than π/2. One such grid can still be
/// aliased, and so can a whole dyadic sequence of them, so the count is
/// accepted only when a grid of n + 1 points agrees with the n-point grid.
/// The n-point grid doubles until that happens.
template <typename Scalar, typename F>
ContourOrderReport<Scalar> winding_order(F&& f, const std::complex<Scalar>& center, const Scalar& radius,
                                         int samples = kMinContourSamples) {
  using std::abs;
  using std::arg;
  using std::cos;
  using std::sin;
  using C = std::complex<Scalar>;
  if (samples < kMinContourSamples) throw PreconditionError("winding_order needs at least 64 samples");
  if (!(radius > Scalar(0))) throw PreconditionError("winding_order needs a positive radius");
  const Scalar two_pi = 2 * scalar_pi<Scalar>();
  const Scalar quarter_turn = scalar_pi<Scalar>() / 2;
  const Scalar zero_tolerance = std::ldexp(1.0, -scalar_precision_bits<Scalar>() / 4);

  auto point = [&](std::size_t k, std::size_t n) {
    const Scalar theta = two_pi * Scalar(static_cast<double>(k)) / Scalar(static_cast<double>(n));
    return center + C(radius * cos(theta), radius * sin(theta));
  };
  auto sample = [&](std::size_t n) {
    std::vector<C> v(n);
    parallel_for(n, [&](std::size_t k) { v[k] = f(point(k, n)); });
    return v;
  };

  Scalar lo(0), hi(0);
  auto check_modulus = [&](const std::vector<C>& values) {
    for (const auto& v : values) {
      const Scalar m = abs(v);
      if (!(m >= lo)) lo = m;
      if (!(m <= hi)) hi = m;
    }
    if (!(lo >= Scalar(zero_tolerance) * hi) || !(hi > Scalar(0)))
      throw ZeroOnContour("|f| = " + std::to_string(to_double(lo)) + " on the contour (max " +
                          std::to_string(to_double(hi)) + ")");
  };
  // Winding of one grid, or nothing when some step is too large.
  auto unwrap = [&](const std::vector<C>& values) -> std::optional<int> {
    Scalar total(0);
    for (std::size_t k = 0; k < values.size(); ++k) {
      const Scalar step = arg(values[(k + 1) % values.size()] / values[k]);
      if (!(abs(step) < quarter_turn)) return std::nullopt;
      total += step;
    }
    return static_cast<int>(std::lround(to_double(Scalar(total / two_pi))));
  };

  std::size_t n = static_cast<std::size_t>(samples);
  std::vector<C> values = sample(n);
  lo = hi = abs(values[0]);
  while (true) {
    check_modulus(values);
    if (const auto w = unwrap(values)) {
      const std::vector<C> other = sample(n + 1);
      check_modulus(other);
      if (unwrap(other) == w) {
        ContourOrderReport<Scalar> report;
        report.center = center;
        report.radius = radius;
        report.samples = static_cast<int>(n);
        report.winding = *w;
        report.min_modulus_on_contour = lo;
        report.max_modulus_on_contour = hi;
        return report;
      }
    }
    if (2 * n > static_cast<std::size_t>(kMaxContourSamples))
      throw UnwrapFailure("no two grids agree on the phase up to " + std::to_string(n) + " samples");

    // Keep the old samples at even indices; evaluate the new midpoints.
    std::vector<C> refined(2 * n);
    parallel_for(n, [&](std::size_t k) {
      refined[2 * k] = values[k];
      refined[2 * k + 1] = f(point(2 * k + 1, 2 * n));
    });
    values = std::move(refined);
    n *= 2;
  }
}

/// c in f(s) ≈ c·(s − center)^order from circle averages of
/// f/(s − center)^order over decreasing radii, Richardson-extrapolated to
/// radius 0. Throws InconsistentOrder when f/(s − center)^order does not
/// settle to a constant as the radius shrinks.
template <typename Scalar, typename F>
std::pair<std::complex<Scalar>, Scalar> leading_coefficient(F&& f, int order, const std::complex<Scalar>& center,
                                                            const std::vector<Scalar>& radii, int samples = 128) {
  using std::abs;
  using std::cos;
  using std::sin;
  using C = std::complex<Scalar>;
  if (radii.size() < 3) throw PreconditionError("leading_coefficient needs at least 3 radii");
  for (std::size_t i = 1; i < radii.size(); ++i)
    if (!(radii[i] < radii[i - 1]) || !(radii[i] > Scalar(0)))
      throw PreconditionError("radii must be positive and strictly decreasing");
  const Scalar two_pi = 2 * scalar_pi<Scalar>();
  const Scalar noise = std::ldexp(1.0, -scalar_precision_bits<Scalar>() / 4);

  std::vector<C> averages;
  std::vector<Scalar> spreads;
  for (const Scalar& r : radii) {
    std::vector<C> q(static_cast<std::size_t>(samples));
    parallel_for(q.size(), [&](std::size_t k) {
      const Scalar theta = two_pi * Scalar(static_cast<double>(k)) / Scalar(samples);
      const C offset(r * cos(theta), r * sin(theta));
      C power(Scalar(1));
      for (int j = 0; j < std::abs(order); ++j) power *= offset;
      q[k] = order >= 0 ? f(center + offset) / power : f(center + offset) * power;
    });
    C mean(Scalar(0));
    for (const auto& v : q) mean += v;
    mean /= C(Scalar(samples));
    Scalar spread(0);
    for (const auto& v : q) {
      const Scalar d = abs(v - mean);
      if (d > spread) spread = d;
    }
    averages.push_back(mean);
    spreads.push_back(abs(mean) > Scalar(0) ? spread / abs(mean) : std::numeric_limits<Scalar>::infinity());
  }

  // A correct order makes f/(s−c)^m nearly constant on small circles, with a
  // variation that shrinks with the radius.
  if (!(spreads.back() < Scalar(1)))
    throw InconsistentOrder("f/(s-c)^" + std::to_string(order) + " is not close to constant on the smallest circle");
  for (std::size_t i = 1; i < spreads.size(); ++i)
    if (spreads[i] > Scalar(1.5) * spreads[i - 1] && spreads[i] > Scalar(noise))
      throw InconsistentOrder("variation of f/(s-c)^" + std::to_string(order) + " grows as the radius shrinks");

  // First-order Richardson on consecutive radii.
  std::vector<C> extrapolated;
  for (std::size_t i = 1; i < averages.size(); ++i) {
    const Scalar ratio = radii[i - 1] / radii[i];
    extrapolated.push_back((C(ratio) * averages[i] - averages[i - 1]) / C(ratio - Scalar(1)));
  }
  C value(Scalar(0));
  for (const auto& e : extrapolated) value += e;
  value /= C(Scalar(static_cast<double>(extrapolated.size())));

  Scalar residual(0);
  for (const auto& a : averages)
    for (const auto& b : averages) {
      const Scalar d = abs(a - b);
      if (d > residual) residual = d;
    }
  return {value, residual};
}

/// Winding at `radius`, then the leading coefficient on radius·{1, 1/2, 1/4}.
template <typename Scalar, typename F>
ContourOrderReport<Scalar> contour_order_report(F&& f, const std::complex<Scalar>& center, const Scalar& radius,
                                                int samples = kMinContourSamples) {
  auto report = winding_order<Scalar>(f, center, radius, samples);
  const std::vector<Scalar> radii{radius, radius / 2, radius / 4};
  try {
    auto [c, residual] = leading_coefficient<Scalar>(f, report.winding, center, radii);
    report.leading_coefficient = c;
    report.residual = residual;
  } catch (const InconsistentOrder&) {
    report.leading_coefficient.reset();
  }
  return report;
}

inline std::string contour_csv_header() {
  return "center_re,center_im,radius,samples,winding,min_modulus,leading_re,leading_im,residual";
}

template <typename Scalar>
std::string format_scalar(const Scalar& x, int digits) {
  if constexpr (std::is_same_v<Scalar, double>) {
    std::ostringstream os;
    os.precision(digits);
    os << x;
    return os.str();
  } else {
    return to_decimal(x, digits);
  }
}

template <typename Scalar>
std::string contour_csv_row(const ContourOrderReport<Scalar>& r, int digits) {
  const auto& c = r.leading_coefficient;
  return format_scalar(r.center.real(), digits) + "," + format_scalar(r.center.imag(), digits) + "," +
         format_scalar(r.radius, digits) + "," + std::to_string(r.samples) + "," + std::to_string(r.winding) + "," +
         format_scalar(r.min_modulus_on_contour, digits) + "," + (c ? format_scalar(c->real(), digits) : "") + "," +
         (c ? format_scalar(c->imag(), digits) : "") + "," + (c ? format_scalar(r.residual, digits) : "");
}

template <typename Scalar>
std::string contour_summary(const ContourOrderReport<Scalar>& r, int digits) {
  std::ostringstream os;
  os << "contour: center " << format_scalar(r.center.real(), digits) << (r.center.imag() < 0 ? "" : "+")
     << format_scalar(r.center.imag(), digits) << "i, radius " << format_scalar(r.radius, digits) << ", "
     << r.samples << " samples\n"
     << "winding (zeros - poles): " << r.winding << "\n"
     << "min |f| on contour: " << format_scalar(r.min_modulus_on_contour, digits) << "\n";
  if (r.leading_coefficient) {
    os << "leading coefficient: " << format_scalar(r.leading_coefficient->real(), digits)
       << (r.leading_coefficient->imag() < 0 ? "" : "+") << format_scalar(r.leading_coefficient->imag(), digits)
       << "i (residual " << format_scalar(r.residual, digits) << ")\n";
  } else {
    os << "leading coefficient: unavailable (inconsistent order)\n";
  }
  return os.str();
}

}  // namespace zetalab
