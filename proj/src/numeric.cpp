#include "zetalab/numeric.hpp"

#include "zetalab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace zetalab {

namespace {

unsigned digits10_for_bits(int bits) {
  // digits10 such that boost's digits10 -> bits conversion yields >= bits.
  return static_cast<unsigned>(std::ceil(bits * 0.30102999566398120)) ;
}

}  // namespace

void set_working_precision(int bits) {
  if (bits < 16) throw PreconditionError("precision_bits must be >= 16");
  Real::default_precision(digits10_for_bits(bits));
}

int working_precision_bits() {
  return static_cast<int>(boost::multiprecision::detail::digits10_2_2(Real::default_precision()));
}

int round_trip_digits() {
  return static_cast<int>(std::ceil(working_precision_bits() * 0.30102999566398120)) + 2;
}

Real tolerance(int bits) { return boost::multiprecision::ldexp(Real(1), -bits / 2); }

Real cluster_resolution(int bits) { return boost::multiprecision::ldexp(Real(1), -bits / 4); }

Real pi() { return boost::math::constants::pi<Real>(); }

std::string to_decimal(const Real& x, int digits) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::string to_decimal(const Real& x) {
  // Per-value precision, so values keep round-tripping after the working
  // precision changes.
  return to_decimal(x, static_cast<int>(x.precision()) + 3);
}

Real parse_real(std::string_view text) {
  std::string s(text);
  auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  if (s.empty()) throw FormatError("empty number");
  bool digit_seen = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digit_seen = true;
    } else if (c == '+' || c == '-') {
      if (i != 0 && s[i - 1] != 'e' && s[i - 1] != 'E') throw FormatError("bad number '" + s + "'");
    } else if (c != '.' && c != 'e' && c != 'E') {
      throw FormatError("bad number '" + s + "'");
    }
  }
  if (!digit_seen) throw FormatError("bad number '" + s + "'");
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw FormatError("bad number '" + s + "'");
  }
}

Complex parse_complex(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw FormatError("empty complex number");
  if (auto comma = s.find(','); comma != std::string::npos) {
    return {parse_real(s.substr(0, comma)), parse_real(s.substr(comma + 1))};
  }
  if (s.back() != 'i' && s.back() != 'j') return {parse_real(s), Real(0)};
  s.pop_back();
  // Split at the last sign that is not an exponent sign and not leading.
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag_part = [](std::string t) {
    if (t.empty() || t == "+") return Real(1);
    if (t == "-") return Real(-1);
    return parse_real(t);
  };
  if (split == std::string::npos) return {Real(0), imag_part(s)};
  return {parse_real(s.substr(0, split)), imag_part(s.substr(split))};
}

}  // namespace zetalab
