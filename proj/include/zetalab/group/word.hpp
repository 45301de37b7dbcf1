#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetalab {

/// A generator or its inverse. Ordered by (generator_index, inverted) with
/// the positive letter first.
struct Letter {
  std::uint8_t generator = 0;
  bool inverted = false;

  Letter inverse() const { return {generator, !inverted}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

/// Letters of an alphabet with `generators` generators, in Letter order.
std::vector<Letter> alphabet(int generators);

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);

/// Free reduction (cancels adjacent x x^-1 pairs).
Word freely_reduce(const Word& w);
/// Free reduction followed by stripping cancelling first/last pairs.
Word cyclically_reduce(const Word& w);
/// Lexicographically minimal cyclic rotation.
Word minimal_rotation(const Word& w);
/// Shortest r with w = r^k; returns w itself when w is not a proper power.
Word primitive_root(const Word& w);
bool is_proper_power(const Word& w);

Word inverse(const Word& w);

/// Token names: generator 2j -> a{j+1}, 2j+1 -> b{j+1}; uppercase is inverse.
std::string letter_name(Letter l);
std::string format_word(const Word& w);
/// Parses whitespace-separated tokens; throws FormatError.
Word parse_word(std::string_view text);
std::optional<Letter> parse_letter(std::string_view token);

/// Shortlex order (length first, then lexicographic).
bool shortlex_less(const Word& a, const Word& b);

}  // namespace zetalab
