#pragma once

#include "zetalab/group/fuchsian.hpp"
#include "zetalab/spectrum/spectrum.hpp"
#include "zetalab/zeta/zeta.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string_view>
#include <vector>

namespace zetalab {

inline constexpr std::uint64_t kDefaultWordBudget = 5'000'000;
inline constexpr int kDefaultDeterminantOrder = 12;

/// Closed disk on the real line of the upper half-plane model.
struct IsometricDisk {
  Real center;
  Real radius;
};

/// Two-generator Schottky group in the upper half-plane (three-funneled
/// sphere). g1 = [[t/2, 2u], [1/2, t/2]] with u = t²/4 − 1, and g2 is g1
/// conjugated by z -> −1/z, so the configuration is symmetric under that
/// inversion and under z -> −z.
struct SchottkyGroup {
  Real trace_parameter;
  int precision_bits = kDefaultPrecisionBits;
  std::vector<Element> generators;
  /// Isometric disk of each letter in alphabet order (a1, A1, b1, B1).
  /// Letter x maps the exterior of disks[x] onto the interior of disks[x⁻¹].
  std::vector<IsometricDisk> disks;
  Real minimal_gap;
  std::string digest;

  std::vector<Element> letter_elements() const;
  std::string name() const;
};

/// Throws NotHyperbolic for t <= 2 and DisksOverlap when the four isometric
/// disks are not pairwise disjoint (t <= 3 for this family).
SchottkyGroup build_schottky(const Real& trace_parameter, int precision_bits = kDefaultPrecisionBits);

struct PeriodicOrbitDatum {
  Word word;
  Real displacement;
};

/// Number of fixed points of the n-th shift power: 3^n + (−1)^n + 2.
std::uint64_t periodic_word_count(int n);

/// Every cyclically admissible word of period n (repetitions of shorter
/// words included), in lexicographic letter order.
std::vector<PeriodicOrbitDatum> periodic_words(const SchottkyGroup& group, int n,
                                               std::uint64_t budget = kDefaultWordBudget);

/// Periodic displacements by period, merged into (length, count) rows.
struct TraceTables {
  struct Row {
    Real length;
    std::uint64_t count;
    Real weight;  // count / (1 − e^{−length})
  };
  std::vector<std::vector<Row>> by_period;  // index n = 1..max_order
  std::string source;
  int precision_bits = kDefaultPrecisionBits;
  int max_order() const { return static_cast<int>(by_period.size()) - 1; }
};

TraceTables trace_tables(const SchottkyGroup& group, int max_order, std::uint64_t budget = kDefaultWordBudget);

/// t_n(s) = Σ e^{−sℓ}/(1 − e^{−ℓ}) over the period-n fixed points.
Complex transfer_trace(const TraceTables& tables, const Complex& s, int n);
Complex transfer_trace(const SchottkyGroup& group, const Complex& s, int n,
                       std::uint64_t budget = kDefaultWordBudget);

/// Plemelj–Smithies: b0 = 1, b_k = −(1/k) Σ_{j=1..k} t_j b_{k−j}.
/// traces[j-1] = t_j; returns b_0..b_N with N = traces.size().
std::vector<Complex> determinant_coefficients(const std::vector<Complex>& traces);

/// Z(s) = Σ_{k<=N} b_k. Throws NonDecayingTail if |b_N| >= |b_{N/2}|.
ZetaEvaluation fredholm_determinant(const TraceTables& tables, const Complex& s, int N = kDefaultDeterminantOrder);
ZetaEvaluation fredholm_determinant(const SchottkyGroup& group, const Complex& s, int N = kDefaultDeterminantOrder,
                                    std::uint64_t budget = kDefaultWordBudget);

/// Z(s)/Z(s+1). Throws PoleAtPoint when |Z(s+1)| is below tolerance.
ZetaEvaluation schottky_ruelle(const TraceTables& tables, const Complex& s, int N = kDefaultDeterminantOrder);

/// First real zero of Z met when scanning down from s = 2, refined by
/// bisection; empty if Z keeps its sign down to `lower`.
std::optional<Real> first_real_zero(const TraceTables& tables, int N = kDefaultDeterminantOrder,
                                    const Real& lower = Real(0), const Real& step = Real("0.05"));

/// Primitive oriented classes (necklaces that are not proper powers) of
/// length <= cutoff, for Euler products.
LengthSpectrum schottky_primitive_spectrum(const SchottkyGroup& group, const Real& cutoff,
                                           std::uint64_t budget = kDefaultWordBudget);

struct SchottkyConfig {
  Real trace_parameter{6};
  int precision_bits = kDefaultPrecisionBits;
  int max_order = kDefaultDeterminantOrder;
  std::uint64_t word_budget = kDefaultWordBudget;
};

/// `key = value` lines; '#' starts a comment. Throws FormatError.
SchottkyConfig parse_schottky_config(std::string_view text);
SchottkyConfig load_schottky_config(const std::filesystem::path& path);

}  // namespace zetalab
