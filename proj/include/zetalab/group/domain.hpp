#pragma once

#include "zetalab/group/element.hpp"
#include "zetalab/group/word.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <vector>

namespace zetalab {

/// Dirichlet polygon centered at the disk origin for a group given by its
/// side pairings. Side i is the bisector of 0 and letter_i(0), so the tile
/// across side i is letter_i·F. Geometry is done in the Klein model, where
/// sides and geodesics are straight chords.
template <typename Scalar>
class DirichletDomain {
 public:
  using ComplexType = std::complex<Scalar>;
  using Element = GroupElement<Scalar>;

  DirichletDomain(std::vector<Letter> letters, std::vector<Element> elements)
      : letters_(std::move(letters)), elements_(std::move(elements)) {
    using std::abs;
    for (const auto& e : elements_) {
      inverses_.push_back(e.inverse());
      const ComplexType c = e.orbit_point();
      normals_.push_back(c / ComplexType(abs(c)));
      // Klein distance of the bisector equals the Poincaré modulus |c|.
      apothems_.push_back(abs(c));
    }
    compute_vertices();
  }

  std::size_t side_count() const { return letters_.size(); }
  Letter side_letter(std::size_t i) const { return letters_[i]; }
  const Element& side_element(std::size_t i) const { return elements_[i]; }
  const Element& side_inverse(std::size_t i) const { return inverses_[i]; }
  const std::vector<ComplexType>& klein_vertices() const { return vertices_; }

  /// Max hyperbolic distance from the origin to a vertex.
  Scalar covering_radius() const {
    using std::abs;
    using std::atanh;
    using boost::multiprecision::atanh;
    Scalar r(0);
    for (const auto& v : vertices_) r = std::max<Scalar>(r, atanh(abs(v)));
    return r;
  }

  static ComplexType to_klein(const ComplexType& z) {
    using std::norm;
    return ComplexType(Scalar(2)) * z / ComplexType(Scalar(1) + norm(z));
  }
  static ComplexType to_poincare(const ComplexType& k) {
    using std::norm;
    using std::sqrt;
    return k / ComplexType(Scalar(1) + sqrt(Scalar(1) - norm(k)));
  }

  /// Signed violation of side i by a Klein point (positive = outside).
  Scalar violation(std::size_t i, const ComplexType& k) const {
    using std::conj;
    return (conj(normals_[i]) * k).real() - apothems_[i];
  }

  bool contains(const ComplexType& z, const Scalar& eps) const {
    const ComplexType k = to_klein(z);
    for (std::size_t i = 0; i < side_count(); ++i)
      if (violation(i, k) > eps) return false;
    return true;
  }

  /// Whether the geodesic with boundary endpoints p, q meets the closed
  /// polygon, allowing an outward slack eps (Klein units).
  bool chord_meets(const ComplexType& p, const ComplexType& q, const Scalar& eps) const {
    using std::conj;
    Scalar lo(0), hi(1);
    const ComplexType dir = q - p;
    for (std::size_t i = 0; i < side_count(); ++i) {
      const Scalar num = apothems_[i] + eps - (conj(normals_[i]) * p).real();
      const Scalar den = (conj(normals_[i]) * dir).real();
      if (den == Scalar(0)) {
        if (num < Scalar(0)) return false;
        continue;
      }
      const Scalar t = num / den;
      if (den > Scalar(0)) {
        if (t < hi) hi = t;
      } else {
        if (t > lo) lo = t;
      }
      if (lo > hi) return false;
    }
    return true;
  }

  /// Point of the geodesic (p, q) closest to the origin, in disk coordinates.
  static ComplexType nearest_point(const ComplexType& p, const ComplexType& q) {
    using std::conj;
    using std::norm;
    const ComplexType dir = q - p;
    const Scalar t = -(conj(dir) * p).real() / norm(dir);
    return to_poincare(p + ComplexType(t) * dir);
  }

  struct Reduction {
    ComplexType point;
    Element transform;  // transform(z) == point, point in F
  };

  /// Moves z into F by side pairings (Dirichlet reduction); each step
  /// strictly decreases the distance to the origin.
  Reduction reduce_point(const ComplexType& z, const Scalar& eps, int precision_bits) const {
    ComplexType x = z;
    Element gamma = Element::identity(precision_bits);
    for (int step = 0; step < 100000; ++step) {
      const ComplexType k = to_klein(x);
      std::size_t worst = side_count();
      Scalar worst_violation = eps;
      for (std::size_t i = 0; i < side_count(); ++i) {
        const Scalar v = violation(i, k);
        if (v > worst_violation) {
          worst_violation = v;
          worst = i;
        }
      }
      if (worst == side_count()) return {x, gamma};
      x = inverses_[worst].apply(x);
      gamma = inverses_[worst] * gamma;
    }
    throw PrecisionExhausted("point reduction did not terminate");
  }

 private:
  void compute_vertices() {
    using std::arg;
    std::vector<std::size_t> order(side_count());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return arg(normals_[a]) < arg(normals_[b]);
    });
    for (std::size_t j = 0; j < order.size(); ++j) {
      const auto& n1 = normals_[order[j]];
      const auto& n2 = normals_[order[(j + 1) % order.size()]];
      const Scalar& a1 = apothems_[order[j]];
      const Scalar& a2 = apothems_[order[(j + 1) % order.size()]];
      // Solve n1.x = a1, n2.x = a2 for the Klein point x.
      const Scalar det = n1.real() * n2.imag() - n1.imag() * n2.real();
      const Scalar x = (a1 * n2.imag() - a2 * n1.imag()) / det;
      const Scalar y = (n1.real() * a2 - n2.real() * a1) / det;
      vertices_.emplace_back(x, y);
    }
  }

  std::vector<Letter> letters_;
  std::vector<Element> elements_;
  std::vector<Element> inverses_;
  std::vector<ComplexType> normals_;
  std::vector<Scalar> apothems_;
  std::vector<ComplexType> vertices_;
};

}  // namespace zetalab
