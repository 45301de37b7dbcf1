#pragma once

#include "zetalab/errors.hpp"
#include "zetalab/numeric.hpp"

#include <Eigen/Core>

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <utility>

namespace zetalab {

/// Unit-determinant 2x2 complex matrix acting by Möbius transformations on
/// the Poincaré disk (or upper half-plane for real matrices). Immutable.
template <typename Scalar>
class GroupElement {
 public:
  using ComplexType = std::complex<Scalar>;
  using Matrix = Eigen::Matrix<ComplexType, 2, 2>;

  GroupElement(Matrix entries, int precision_bits)
      : entries_(std::move(entries)), precision_bits_(precision_bits) {}

  static GroupElement identity(int precision_bits) {
    return GroupElement(Matrix::Identity(), precision_bits);
  }

  /// Real-entry element [[a, b], [c, d]].
  static GroupElement real(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d,
                           int precision_bits) {
    Matrix m;
    m << ComplexType(a), ComplexType(b), ComplexType(c), ComplexType(d);
    return GroupElement(std::move(m), precision_bits);
  }

  const Matrix& matrix() const { return entries_; }
  const ComplexType& operator()(int r, int c) const { return entries_(r, c); }
  int precision_bits() const { return precision_bits_; }

  ComplexType trace() const { return entries_(0, 0) + entries_(1, 1); }
  ComplexType determinant() const {
    return entries_(0, 0) * entries_(1, 1) - entries_(0, 1) * entries_(1, 0);
  }

  /// Inverse of a unit-determinant matrix (adjugate).
  GroupElement inverse() const {
    Matrix m;
    m << entries_(1, 1), -entries_(0, 1), -entries_(1, 0), entries_(0, 0);
    return GroupElement(std::move(m), precision_bits_);
  }

  ComplexType apply(const ComplexType& z) const {
    return (entries_(0, 0) * z + entries_(0, 1)) / (entries_(1, 0) * z + entries_(1, 1));
  }

  /// Image of the disk center, g(0).
  ComplexType orbit_point() const { return entries_(0, 1) / entries_(1, 1); }

  /// Conversion to another scalar (e.g. high precision -> double).
  template <typename Other>
  GroupElement<Other> cast() const {
    typename GroupElement<Other>::Matrix m;
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        m(r, c) = std::complex<Other>(Other(entries_(r, c).real()), Other(entries_(r, c).imag()));
    return GroupElement<Other>(std::move(m), precision_bits_);
  }

 private:
  Matrix entries_;
  int precision_bits_;
};

template <typename Scalar>
GroupElement<Scalar> compose(const GroupElement<Scalar>& a, const GroupElement<Scalar>& b) {
  if (a.precision_bits() != b.precision_bits())
    throw PreconditionError("compose: mismatched precision_bits");
  typename GroupElement<Scalar>::Matrix m = a.matrix() * b.matrix();
  return GroupElement<Scalar>(std::move(m), a.precision_bits());
}

template <typename Scalar>
GroupElement<Scalar> operator*(const GroupElement<Scalar>& a, const GroupElement<Scalar>& b) {
  return compose(a, b);
}

/// Identity-like slack 2^(-bits/2) in the element's scalar type.
template <typename Scalar>
Scalar precision_slack(int bits) {
  using std::ldexp;
  using boost::multiprecision::ldexp;
  return ldexp(Scalar(1), -bits / 2);
}

template <typename Scalar>
bool is_hyperbolic(const GroupElement<Scalar>& g) {
  using std::abs;
  return abs(g.trace()) > Scalar(2) + precision_slack<Scalar>(g.precision_bits());
}

/// Translation length 2·arccosh(|tr g| / 2). Throws NotHyperbolic.
template <typename Scalar>
Scalar translation_length(const GroupElement<Scalar>& g) {
  using std::abs;
  using std::acosh;
  using boost::multiprecision::acosh;
  const Scalar t = abs(g.trace());
  if (!(t > Scalar(2) + precision_slack<Scalar>(g.precision_bits())))
    throw NotHyperbolic("|trace| <= 2: element is elliptic, parabolic or the identity");
  return Scalar(2) * acosh(t / Scalar(2));
}

/// Max-norm distance of g from +I or -I, whichever is closer.
template <typename Scalar>
Scalar distance_from_identity(const GroupElement<Scalar>& g) {
  using std::abs;
  Scalar plus(0), minus(0);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      const std::complex<Scalar> id(r == c ? Scalar(1) : Scalar(0));
      plus = std::max<Scalar>(plus, abs(g(r, c) - id));
      minus = std::max<Scalar>(minus, abs(g(r, c) + id));
    }
  }
  return std::min(plus, minus);
}

/// Boundary fixed points of a hyperbolic element, ordered (repelling, attracting).
template <typename Scalar>
std::pair<std::complex<Scalar>, std::complex<Scalar>> fixed_points(const GroupElement<Scalar>& g) {
  using std::abs;
  using std::sqrt;
  const auto& m = g.matrix();
  const auto tr = g.trace();
  const auto root = sqrt(tr * tr - std::complex<Scalar>(4));
  const auto two_c = std::complex<Scalar>(2) * m(1, 0);
  const std::complex<Scalar> z1 = (m(0, 0) - m(1, 1) + root) / two_c;
  const std::complex<Scalar> z2 = (m(0, 0) - m(1, 1) - root) / two_c;
  // g'(z) = 1 / (c z + d)^2; the attracting point has |c z + d| > 1.
  if (abs(m(1, 0) * z1 + m(1, 1)) > Scalar(1)) return {z2, z1};
  return {z1, z2};
}

/// Hyperbolic distance between two points of the Poincaré disk.
template <typename Scalar>
Scalar disk_distance(const std::complex<Scalar>& z, const std::complex<Scalar>& w) {
  using std::abs;
  using std::atanh;
  using std::conj;
  using boost::multiprecision::atanh;
  return Scalar(2) * atanh(abs((z - w) / (std::complex<Scalar>(1) - conj(w) * z)));
}

/// Displacement d(0, g(0)) in the disk model.
template <typename Scalar>
Scalar displacement_at_center(const GroupElement<Scalar>& g) {
  using std::abs;
  using std::atanh;
  using boost::multiprecision::atanh;
  return Scalar(2) * atanh(abs(g.orbit_point()));
}

/// Hashable identity of an isometry: first-row entries rounded to 2^-20,
/// with the sign fixed so that g and -g share a key.
struct ElementKey {
  std::array<std::int64_t, 4> q{};
  friend bool operator==(const ElementKey&, const ElementKey&) = default;
  friend auto operator<=>(const ElementKey&, const ElementKey&) = default;
};

struct ElementKeyHash {
  std::size_t operator()(const ElementKey& k) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : k.q) {
      h ^= static_cast<std::uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

template <typename Scalar>
ElementKey element_key(const GroupElement<Scalar>& g) {
  std::array<double, 4> v{to_double(g(0, 0).real()), to_double(g(0, 0).imag()),
                          to_double(g(0, 1).real()), to_double(g(0, 1).imag())};
  // Sign convention: the larger-magnitude component of g(0,0) is positive.
  // |g(0,0)| >= 1 for disk isometries, so that component is far from zero.
  const double lead = std::abs(v[0]) >= std::abs(v[1]) ? v[0] : v[1];
  if (lead < 0)
    for (auto& x : v) x = -x;
  ElementKey key;
  for (std::size_t i = 0; i < 4; ++i) key.q[i] = std::llround(std::ldexp(v[i], 20));
  return key;
}

}  // namespace zetalab
