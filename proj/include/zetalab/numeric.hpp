#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace zetalab {

/// Working real type. Precision is process-wide (see set_working_precision).
using Real = boost::multiprecision::mpfr_float;
using Complex = std::complex<Real>;

inline constexpr int kDefaultPrecisionBits = 200;

/// Sets the binary precision used by every Real constructed afterwards.
/// The effective mantissa is at least `bits` wide.
void set_working_precision(int bits);

/// Effective mantissa width of newly constructed Reals.
int working_precision_bits();

/// Decimal digits needed to round-trip a Real at the current precision.
int round_trip_digits();

/// 2^(-bits/2): the generic slack for identities at `bits` of precision.
Real tolerance(int bits);
/// 2^(-bits/4): length clustering resolution.
Real cluster_resolution(int bits);

Real pi();

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Real& x, int digits);
/// Decimal rendering sufficient for an exact round trip.
std::string to_decimal(const Real& x);

/// Parses a decimal real; throws FormatError on malformed input.
Real parse_real(std::string_view text);

/// Parses "a", "a+bi", "a-bi", "bi" or "a,b".
Complex parse_complex(std::string_view text);

/// Scalar helpers usable for both double and Real.
template <typename Scalar>
Scalar scalar_pi() {
  if constexpr (std::is_same_v<Scalar, double>) {
    return 3.14159265358979323846;
  } else {
    return boost::math::constants::pi<Scalar>();
  }
}

template <typename Scalar>
double to_double(const Scalar& x) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return x;
  } else {
    return x.template convert_to<double>();
  }
}

}  // namespace zetalab
