#pragma once

#include "zetalab/group/fuchsian.hpp"
#include "zetalab/numeric.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace zetalab {

struct SpectrumEntry {
  Real length;
  std::uint64_t multiplicity = 0;
  Word representative_word;

  friend bool operator==(const SpectrumEntry&, const SpectrumEntry&) = default;
};

/// Primitive length spectrum up to a cutoff: one entry per distinct length,
/// multiplicities counting oriented primitive conjugacy classes.
struct LengthSpectrum {
  std::vector<SpectrumEntry> entries;
  Real cutoff;
  std::string group_name;
  std::string group_id;
  int precision_bits = kDefaultPrecisionBits;
  bool complete = false;

  std::uint64_t total_multiplicity() const;
  /// Smallest length; throws PreconditionError on an empty spectrum.
  const Real& systole() const;

  friend bool operator==(const LengthSpectrum&, const LengthSpectrum&) = default;
};

/// Diagnostics of one enumeration run.
struct EnumerationStats {
  std::size_t elements_visited = 0;   // tiling search: distinct group elements
  std::size_t candidates = 0;         // elements whose axis meets the polygon
  std::size_t classes = 0;            // primitive classes found
  std::vector<std::uint64_t> words_per_length;  // brute force: words visited per length
  int word_length_bound = 0;
  double search_radius = 0;
};

/// One primitive conjugacy class produced by an enumeration route.
struct ClassRecord {
  Real length;
  Word word;
};

/// Sorts, clusters equal lengths (|Δ| below 2^(-bits/2)), and builds entries.
/// Throws PrecisionExhausted for gaps in [2^(-bits/2), 2^(-bits/4)).
LengthSpectrum assemble_spectrum(std::vector<ClassRecord> classes, const Real& cutoff,
                                 const FuchsianGroup& group, bool complete);
LengthSpectrum assemble_spectrum(std::vector<ClassRecord> classes, const Real& cutoff, const std::string& group_name,
                                 const std::string& group_id, int precision_bits, bool complete);

/// Pruned enumeration. Walks the tiling of the disk by copies of the
/// fundamental polygon, keeping only group elements whose orbit point lies
/// in the certified search ball; every class of length <= cutoff has a
/// representative whose axis crosses the polygon, and all such
/// representatives lie in the ball, so the result is complete.
LengthSpectrum enumerate_spectrum(const FuchsianGroup& group, const Real& cutoff,
                                  EnumerationStats* stats = nullptr);

struct BruteForceOptions {
  std::uint64_t word_budget = 50'000'000;
  /// Overrides the default word-length bound.
  std::optional<int> max_word_length;
};

/// ceil(2·cutoff / min generator translation length) + 2.
int brute_force_word_bound(const FuchsianGroup& group, const Real& cutoff);

/// Oracle: visits every reduced word up to the word-length bound with no
/// pruning and identifies conjugacy classes geometrically.
LengthSpectrum brute_force_spectrum(const FuchsianGroup& group, const Real& cutoff,
                                    const BruteForceOptions& options = {},
                                    EnumerationStats* stats = nullptr);

/// Number of primitive classes (with multiplicity) of length <= L.
std::uint64_t counting_function(const LengthSpectrum& spectrum, const Real& L);

std::string format_spectrum(const LengthSpectrum& spectrum);
LengthSpectrum parse_spectrum(std::string_view text,
                              const std::optional<std::string>& expected_digest = std::nullopt);
void save_spectrum(const LengthSpectrum& spectrum, const std::filesystem::path& path);
LengthSpectrum load_spectrum(const std::filesystem::path& path,
                             const std::optional<std::string>& expected_digest = std::nullopt);

}  // namespace zetalab
