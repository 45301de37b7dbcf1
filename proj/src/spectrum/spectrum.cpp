#include "zetalab/spectrum/spectrum.hpp"

#include "zetalab/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace zetalab {

std::uint64_t LengthSpectrum::total_multiplicity() const {
  std::uint64_t n = 0;
  for (const auto& e : entries) n += e.multiplicity;
  return n;
}

const Real& LengthSpectrum::systole() const {
  if (entries.empty()) throw PreconditionError("empty spectrum has no systole");
  return entries.front().length;
}

LengthSpectrum assemble_spectrum(std::vector<ClassRecord> classes, const Real& cutoff,
                                 const FuchsianGroup& group, bool complete) {
  return assemble_spectrum(std::move(classes), cutoff, group.name, group.digest, group.precision_bits, complete);
}

LengthSpectrum assemble_spectrum(std::vector<ClassRecord> classes, const Real& cutoff, const std::string& group_name,
                                 const std::string& group_id, int bits, bool complete) {
  std::erase_if(classes, [&](const ClassRecord& c) { return c.length > cutoff; });
  std::sort(classes.begin(), classes.end(), [](const ClassRecord& a, const ClassRecord& b) {
    if (a.length != b.length) return a.length < b.length;
    return shortlex_less(a.word, b.word);
  });

  const Real equal = tolerance(bits);
  const Real distinct = cluster_resolution(bits);
  LengthSpectrum spec;
  spec.cutoff = cutoff;
  spec.group_name = group_name;
  spec.group_id = group_id;
  spec.precision_bits = bits;
  spec.complete = complete;

  std::size_t start = 0;
  auto close_cluster = [&](std::size_t end) {
    std::size_t best = start;
    for (std::size_t i = start; i < end; ++i)
      if (shortlex_less(classes[i].word, classes[best].word)) best = i;
    spec.entries.push_back({classes[best].length, end - start, classes[best].word});
  };
  for (std::size_t i = 1; i <= classes.size(); ++i) {
    if (i < classes.size()) {
      const Real gap = classes[i].length - classes[i - 1].length;
      if (gap < equal) continue;
      if (gap < distinct)
        throw PrecisionExhausted("lengths " + to_decimal(classes[i - 1].length, 20) + " and " +
                                 to_decimal(classes[i].length, 20) + " can be neither merged nor separated");
    }
    close_cluster(i);
    start = i;
  }
  return spec;
}

std::uint64_t counting_function(const LengthSpectrum& spectrum, const Real& L) {
  if (L > spectrum.cutoff)
    throw CutoffExceeded("L = " + to_decimal(L, 12) + " exceeds spectrum cutoff " + to_decimal(spectrum.cutoff, 12));
  std::uint64_t n = 0;
  for (const auto& e : spectrum.entries) {
    if (e.length > L) break;
    n += e.multiplicity;
  }
  return n;
}

namespace {

constexpr std::string_view kMagic = "# zetalab-spectrum v1";

std::string_view header_value(std::string_view line, std::string_view key) {
  const std::string prefix = "# " + std::string(key) + ": ";
  if (line.substr(0, prefix.size()) != prefix) throw FormatError("expected header '" + prefix + "'");
  std::string_view v = line.substr(prefix.size());
  if (v.empty()) throw FormatError("empty header value for " + std::string(key));
  return v;
}

template <typename Int>
Int parse_int(std::string_view text, const char* what) {
  Int value{};
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw FormatError(std::string("bad ") + what + " '" + std::string(text) + "'");
  return value;
}

}  // namespace

std::string format_spectrum(const LengthSpectrum& spectrum) {
  std::ostringstream out;
  out << kMagic << '\n'
      << "# group: " << spectrum.group_name << '\n'
      << "# digest: " << spectrum.group_id << '\n'
      << "# cutoff: " << to_decimal(spectrum.cutoff) << '\n'
      << "# precision_bits: " << spectrum.precision_bits << '\n'
      << "# complete: " << (spectrum.complete ? "true" : "false") << '\n';
  for (const auto& e : spectrum.entries)
    out << to_decimal(e.length) << ' ' << e.multiplicity << ' ' << format_word(e.representative_word) << '\n';
  return out.str();
}

LengthSpectrum parse_spectrum(std::string_view text, const std::optional<std::string>& expected_digest) {
  if (text.find('\r') != std::string_view::npos) throw FormatError("spectrum files use LF line endings");
  if (text.empty() || text.back() != '\n') throw FormatError("truncated spectrum file (no final newline)");

  std::vector<std::string_view> lines;
  for (std::size_t pos = 0; pos < text.size();) {
    const std::size_t nl = text.find('\n', pos);
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  if (lines.size() < 6) throw FormatError("truncated spectrum header");
  if (lines[0] != kMagic) throw FormatError("unsupported spectrum version line '" + std::string(lines[0]) + "'");

  LengthSpectrum spec;
  spec.group_name = std::string(header_value(lines[1], "group"));
  spec.group_id = std::string(header_value(lines[2], "digest"));
  const std::string_view cutoff_text = header_value(lines[3], "cutoff");
  spec.precision_bits = parse_int<int>(header_value(lines[4], "precision_bits"), "precision_bits");
  if (spec.precision_bits < 16) throw FormatError("precision_bits too small");
  const std::string_view complete = header_value(lines[5], "complete");
  if (complete == "true") {
    spec.complete = true;
  } else if (complete == "false") {
    spec.complete = false;
  } else {
    throw FormatError("complete must be true or false");
  }
  if (expected_digest && *expected_digest != spec.group_id)
    throw DigestMismatch("spectrum digest " + spec.group_id + " does not match group digest " + *expected_digest);

  set_working_precision(spec.precision_bits);
  spec.cutoff = parse_real(cutoff_text);
  if (!(spec.cutoff > 0)) throw FormatError("cutoff must be positive");

  for (std::size_t i = 6; i < lines.size(); ++i) {
    const std::string line(lines[i]);
    std::istringstream in(line);
    std::string length, mult;
    if (!(in >> length >> mult)) throw FormatError("malformed body line " + std::to_string(i + 1));
    std::string rest;
    std::getline(in, rest);
    SpectrumEntry e;
    e.length = parse_real(length);
    e.multiplicity = parse_int<std::uint64_t>(mult, "multiplicity");
    if (e.multiplicity == 0) throw FormatError("zero multiplicity on line " + std::to_string(i + 1));
    e.representative_word = parse_word(rest);
    if (e.representative_word.empty()) throw FormatError("missing word on line " + std::to_string(i + 1));
    if (!spec.entries.empty() && !(spec.entries.back().length < e.length))
      throw FormatError("body not sorted by strictly increasing length at line " + std::to_string(i + 1));
    if (e.length > spec.cutoff) throw FormatError("body length exceeds header cutoff at line " + std::to_string(i + 1));
    spec.entries.push_back(std::move(e));
  }
  return spec;
}

void save_spectrum(const LengthSpectrum& spectrum, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw PreconditionError("cannot write " + path.string());
  out << format_spectrum(spectrum);
  if (!out) throw PreconditionError("write failed for " + path.string());
}

LengthSpectrum load_spectrum(const std::filesystem::path& path, const std::optional<std::string>& expected_digest) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_spectrum(buffer.str(), expected_digest);
}

}  // namespace zetalab
