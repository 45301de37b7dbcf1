#include "zetalab/group/word.hpp"

#include "zetalab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace zetalab {

std::vector<Letter> alphabet(int generators) {
  std::vector<Letter> out;
  out.reserve(2 * static_cast<std::size_t>(generators));
  for (int g = 0; g < generators; ++g) {
    out.push_back({static_cast<std::uint8_t>(g), false});
    out.push_back({static_cast<std::uint8_t>(g), true});
  }
  return out;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  return is_reduced(w) && (w.size() < 2 || w.front() != w.back().inverse());
}

Word freely_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& l : w) {
    if (!out.empty() && out.back() == l.inverse()) {
      out.pop_back();
    } else {
      out.push_back(l);
    }
  }
  return out;
}

Word cyclically_reduce(const Word& w) {
  Word r = freely_reduce(w);
  std::size_t lo = 0, hi = r.size();
  while (hi - lo >= 2 && r[lo] == r[hi - 1].inverse()) {
    ++lo;
    --hi;
  }
  return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word minimal_rotation(const Word& w) {
  const std::size_t n = w.size();
  if (n < 2) return w;
  // Booth's least-rotation algorithm.
  std::vector<std::ptrdiff_t> f(2 * n, -1);
  std::size_t k = 0;
  auto at = [&](std::size_t i) { return w[i % n]; };
  for (std::size_t j = 1; j < 2 * n; ++j) {
    const Letter sj = at(j);
    std::ptrdiff_t i = f[j - k - 1];
    while (i != -1 && sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k + static_cast<std::size_t>(i) + 1)) k = j - static_cast<std::size_t>(i) - 1;
      i = f[static_cast<std::size_t>(i)];
    }
    if (sj != at(k + static_cast<std::size_t>(i) + 1)) {
      if (sj < at(k)) k = j;
      f[j - k] = -1;
    } else {
      f[j - k] = i + 1;
    }
  }
  Word out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = at(k + i);
  return out;
}

Word primitive_root(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool periodic = true;
    for (std::size_t i = p; i < n && periodic; ++i) periodic = w[i] == w[i - p];
    if (periodic) return Word(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(p));
  }
  return w;
}

bool is_proper_power(const Word& w) { return primitive_root(w).size() < w.size(); }

Word inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::string letter_name(Letter l) {
  const char base = (l.generator % 2 == 0) ? 'a' : 'b';
  std::string s(1, l.inverted ? static_cast<char>(base - 'a' + 'A') : base);
  s += std::to_string(l.generator / 2 + 1);
  return s;
}

std::string format_word(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += letter_name(w[i]);
  }
  return s;
}

std::optional<Letter> parse_letter(std::string_view token) {
  if (token.size() < 2) return std::nullopt;
  const char c = token[0];
  int family;
  bool inverted;
  switch (c) {
    case 'a': family = 0; inverted = false; break;
    case 'b': family = 1; inverted = false; break;
    case 'A': family = 0; inverted = true; break;
    case 'B': family = 1; inverted = true; break;
    default: return std::nullopt;
  }
  int index = 0;
  const auto* first = token.data() + 1;
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, index);
  if (ec != std::errc() || ptr != last || index < 1 || index > 127) return std::nullopt;
  return Letter{static_cast<std::uint8_t>(2 * (index - 1) + family), inverted};
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    auto l = parse_letter(token);
    if (!l) throw FormatError("bad letter token '" + token + "'");
    w.push_back(*l);
  }
  return w;
}

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace zetalab
