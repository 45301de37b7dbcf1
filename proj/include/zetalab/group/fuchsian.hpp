#pragma once

#include "zetalab/group/domain.hpp"
#include "zetalab/group/element.hpp"
#include "zetalab/group/word.hpp"
#include "zetalab/numeric.hpp"

#include <span>
#include <string>
#include <vector>

namespace zetalab {

using Element = GroupElement<Real>;

/// Product of a word over per-letter elements indexed by 2*generator+inverted.
template <typename Scalar>
GroupElement<Scalar> evaluate_word(const Word& w, std::span<const GroupElement<Scalar>> letter_elements,
                                   int precision_bits) {
  GroupElement<Scalar> acc = GroupElement<Scalar>::identity(precision_bits);
  for (const Letter& l : w) acc = acc * letter_elements[2u * l.generator + (l.inverted ? 1u : 0u)];
  return acc;
}

inline std::size_t letter_index(Letter l) { return 2u * l.generator + (l.inverted ? 1u : 0u); }

/// Cocompact surface group in the disk model, presented by 2g side pairings
/// of a Dirichlet polygon at the origin.
struct FuchsianGroup {
  std::string name;
  int genus = 0;
  int precision_bits = kDefaultPrecisionBits;
  std::vector<Element> generators;
  Word relator;
  Real relation_residual;
  std::string digest;

  /// Generators and inverses in alphabet order (a1, A1, b1, B1, ...).
  std::vector<Element> letter_elements() const;
  std::vector<GroupElement<double>> letter_elements_double() const;

  Element evaluate(const Word& w) const;

  /// Fundamental polygon whose side i is paired by the i-th alphabet letter.
  DirichletDomain<Real> domain() const;
  DirichletDomain<double> domain_double() const;
};

/// Genus-2 Bolza group: translations of length 2·arccosh(1+√2) along the
/// diameters at angles kπ/4, pairing opposite sides of the regular octagon
/// with vertex angle π/4. Throws ConstructionFailed if no standard relator
/// closes to within 2^(-bits/2).
FuchsianGroup build_bolza_group(int precision_bits = kDefaultPrecisionBits);

/// Content digest (FNV-1a, 16 hex digits) of a list of matrices.
std::string matrix_digest(const std::string& name, std::span<const Element> elements);

struct ConjugacyClass {
  Word canonical_word;
  Real length;
  bool primitive = true;
  std::size_t word_length = 0;
  Word root;  // primitive root of canonical_word
};

/// Free-group conjugacy canonicalization of a word: cyclic reduction, then
/// minimal rotation; length from the matrix product. Throws TrivialWord when
/// the word cyclically reduces to nothing, NotHyperbolic when the product is
/// not hyperbolic (e.g. a relator).
template <typename Group>
ConjugacyClass canonical_class(const Word& w, const Group& group) {
  Word reduced = cyclically_reduce(w);
  if (reduced.empty()) throw TrivialWord("word cyclically reduces to the identity");
  ConjugacyClass cls;
  cls.canonical_word = minimal_rotation(reduced);
  cls.word_length = cls.canonical_word.size();
  cls.root = primitive_root(cls.canonical_word);
  cls.primitive = cls.root.size() == cls.canonical_word.size();
  cls.length = translation_length(group.evaluate(cls.canonical_word));
  return cls;
}

}  // namespace zetalab
