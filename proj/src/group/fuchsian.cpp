#include "zetalab/group/fuchsian.hpp"

#include "zetalab/errors.hpp"

#include <array>
#include <cstdio>

namespace zetalab {

std::vector<Element> FuchsianGroup::letter_elements() const {
  std::vector<Element> out;
  out.reserve(2 * generators.size());
  for (const auto& g : generators) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

std::vector<GroupElement<double>> FuchsianGroup::letter_elements_double() const {
  std::vector<GroupElement<double>> out;
  for (const auto& e : letter_elements()) out.push_back(e.cast<double>());
  return out;
}

Element FuchsianGroup::evaluate(const Word& w) const {
  const auto letters = letter_elements();
  return evaluate_word<Real>(w, letters, precision_bits);
}

DirichletDomain<Real> FuchsianGroup::domain() const {
  return DirichletDomain<Real>(alphabet(static_cast<int>(generators.size())), letter_elements());
}

DirichletDomain<double> FuchsianGroup::domain_double() const {
  return DirichletDomain<double>(alphabet(static_cast<int>(generators.size())), letter_elements_double());
}

std::string matrix_digest(const std::string& name, std::span<const Element> elements) {
  std::uint64_t h = 1469598103934665603ull;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 1099511628211ull;
    }
  };
  feed(name);
  for (const auto& e : elements)
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        // 30 digits: stable across working precisions >= 100 bits.
        feed(to_decimal(e(r, c).real(), 30));
        feed(",");
        feed(to_decimal(e(r, c).imag(), 30));
        feed(";");
      }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

namespace {

Element rotation(const Real& phi, int bits) {
  Element::Matrix m;
  const Real half = phi / 2;
  m << Complex(cos(half), sin(half)), Complex(0), Complex(0), Complex(cos(half), -sin(half));
  return Element(std::move(m), bits);
}

// Standard genus-2 relator shapes over abstract slots x0..x3; the search
// applies every generator relabeling by rotation and every inversion pattern.
struct RelatorShape {
  const char* name;
  std::array<std::pair<int, bool>, 8> slots;  // (slot, inverted)
};

constexpr std::array<RelatorShape, 2> kShapes{{
    {"commutator", {{{0, false}, {1, false}, {0, true}, {1, true},
                     {2, false}, {3, false}, {2, true}, {3, true}}}},
    {"side-pairing", {{{0, false}, {1, false}, {2, false}, {3, false},
                       {0, true}, {1, true}, {2, true}, {3, true}}}},
}};

}  // namespace

FuchsianGroup build_bolza_group(int precision_bits) {
  if (precision_bits < 64) throw PreconditionError("build_bolza_group requires precision_bits >= 64");
  set_working_precision(precision_bits);

  FuchsianGroup group;
  group.name = "bolza";
  group.genus = 2;
  group.precision_bits = precision_bits;

  // cosh(ℓ/2) = 1 + √2, so tr g0 = 2(1 + √2).
  const Real half_trace = Real(1) + sqrt(Real(2));
  const Real half_sinh = sqrt(half_trace * half_trace - 1);
  const Element g0 = Element::real(half_trace, half_sinh, half_sinh, half_trace, precision_bits);
  for (int k = 0; k < 4; ++k) {
    const Element r = rotation(pi() * k / 4, precision_bits);
    group.generators.push_back(r * g0 * r.inverse());
  }

  const Real tol = tolerance(precision_bits);
  for (const auto& g : group.generators)
    if (!is_hyperbolic(g)) throw ConstructionFailed("generator is not hyperbolic");

  const auto letters = group.letter_elements();
  for (const auto& shape : kShapes) {
    for (int shift = 0; shift < 4; ++shift) {
      for (int pattern = 0; pattern < 16; ++pattern) {
        Word w;
        for (auto [slot, inv] : shape.slots) {
          const int gen = (slot + shift) % 4;
          const bool flip = (pattern >> slot) & 1;
          w.push_back({static_cast<std::uint8_t>(gen), inv != flip});
        }
        const Real residual = distance_from_identity(evaluate_word<Real>(w, letters, precision_bits));
        if (residual < tol) {
          group.relator = w;
          group.relation_residual = residual;
          group.digest = matrix_digest(group.name, group.generators);
          return group;
        }
      }
    }
  }
  throw ConstructionFailed("no standard genus-2 relator closes for the Bolza generators");
}

}  // namespace zetalab
