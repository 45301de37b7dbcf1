#include "zetalab/schottky/schottky.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace zetalab {

std::vector<Element> SchottkyGroup::letter_elements() const {
  std::vector<Element> out;
  for (const auto& g : generators) {
    out.push_back(g);
    out.push_back(g.inverse());
  }
  return out;
}

std::string SchottkyGroup::name() const { return "schottky(t=" + to_decimal(trace_parameter, 12) + ")"; }

namespace {

IsometricDisk isometric_disk(const Element& g) {
  // |cz + d| = 1 on the real-entry matrix [[a, b], [c, d]].
  const Real c = g(1, 0).real();
  const Real d = g(1, 1).real();
  return {-d / c, 1 / abs(c)};
}

}  // namespace

SchottkyGroup build_schottky(const Real& t, int precision_bits) {
  if (precision_bits < 32) throw PreconditionError("build_schottky requires precision_bits >= 32");
  set_working_precision(precision_bits);
  if (!(t > Real(2) + tolerance(precision_bits)))
    throw NotHyperbolic("trace parameter " + to_decimal(t, 12) + " <= 2");

  SchottkyGroup group;
  group.trace_parameter = t;
  group.precision_bits = precision_bits;
  const Real half = t / 2;
  const Real u = t * t / 4 - 1;
  group.generators.push_back(Element::real(half, 2 * u, Real("0.5"), half, precision_bits));
  group.generators.push_back(Element::real(half, Real("-0.5"), -2 * u, half, precision_bits));

  const auto letters = group.letter_elements();
  for (const auto& x : letters) group.disks.push_back(isometric_disk(x));

  group.minimal_gap = std::numeric_limits<Real>::infinity();
  for (std::size_t i = 0; i < group.disks.size(); ++i)
    for (std::size_t j = i + 1; j < group.disks.size(); ++j) {
      const auto& a = group.disks[i];
      const auto& b = group.disks[j];
      const Real gap = abs(a.center - b.center) - a.radius - b.radius;
      if (gap < group.minimal_gap) group.minimal_gap = gap;
    }
  if (!(group.minimal_gap > 0))
    throw DisksOverlap("isometric disks overlap for t = " + to_decimal(t, 12) + " (gap " +
                       to_decimal(group.minimal_gap, 6) + ")");

  // Each letter carries its isometric circle onto its partner's circle and
  // sends infinity (outside every disk) to the partner center.
  const Real tol = tolerance(precision_bits);
  for (std::size_t k = 0; k < letters.size(); ++k) {
    const auto& from = group.disks[k];
    const auto& to = group.disks[k ^ 1u];
    for (int j = 1; j < 16; ++j) {
      const Real theta = pi() * j / 16;
      const Complex z(from.center + from.radius * cos(theta), from.radius * sin(theta));
      const Complex w = letters[k].apply(z);
      if (abs(abs(w - Complex(to.center)) - to.radius) > tol * (1 + to.radius))
        throw ConstructionFailed("generator does not pair its isometric circles");
    }
    const Real image_of_infinity = letters[k](0, 0).real() / letters[k](1, 0).real();
    if (abs(image_of_infinity - to.center) > tol * (1 + abs(to.center)))
      throw ConstructionFailed("generator does not map the exterior into its partner disk");
  }
  group.digest = matrix_digest("schottky", group.generators);
  return group;
}

std::uint64_t periodic_word_count(int n) {
  if (n < 1) return 0;
  std::uint64_t p = 1;
  for (int i = 0; i < n; ++i) p *= 3;
  return p + (n % 2 == 0 ? 3 : 1);
}

namespace {

void check_budget(int n, std::uint64_t budget) {
  if (n < 1) throw PreconditionError("period must be >= 1");
  if (n > 38 || periodic_word_count(n) > budget)
    throw BudgetExceeded("period " + std::to_string(n) + " needs more than " + std::to_string(budget) + " words");
}

// Depth-first walk over the reduced words of length 1..max_length that start
// with `first`; visit(word, product) sees each word once.
template <typename Mat, typename Visit>
void reduced_word_walk(std::size_t first, int max_length, const std::vector<Mat>& letters, Visit&& visit) {
  const std::size_t alphabet_size = letters.size();
  std::vector<std::size_t> word{first};
  std::vector<Mat> prefix{letters[first]};
  while (!word.empty()) {
    visit(word, prefix.back());
    if (word.size() < static_cast<std::size_t>(max_length)) {
      const std::size_t next = (word.back() ^ 1u) == 0 ? 1 : 0;
      word.push_back(next);
      prefix.push_back(prefix.back() * letters[next]);
      continue;
    }
    while (!word.empty()) {
      std::size_t next = word.back() + 1;
      word.pop_back();
      prefix.pop_back();
      if (word.empty()) break;
      if (next == (word.back() ^ 1u)) ++next;
      if (next < alphabet_size) {
        word.push_back(next);
        prefix.push_back(prefix.back() * letters[next]);
        break;
      }
    }
  }
}

bool cyclically_admissible(const std::vector<std::size_t>& word) {
  return word.size() == 1 || word.front() != (word.back() ^ 1u);
}

// Real 2x2 matrix; the Schottky generators have real entries.
struct RealMatrix {
  Real a, b, c, d;
  RealMatrix operator*(const RealMatrix& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
};

}  // namespace

std::vector<PeriodicOrbitDatum> periodic_words(const SchottkyGroup& group, int n, std::uint64_t budget) {
  check_budget(n, budget);
  set_working_precision(group.precision_bits);
  const auto letters = group.letter_elements();
  const auto names = alphabet(static_cast<int>(group.generators.size()));
  std::vector<std::vector<PeriodicOrbitDatum>> shards(letters.size());
  parallel_for(letters.size(), [&](std::size_t first) {
    reduced_word_walk(first, n, letters, [&](const std::vector<std::size_t>& w, const Element& g) {
      if (static_cast<int>(w.size()) != n || !cyclically_admissible(w)) return;
      Word word;
      for (auto k : w) word.push_back(names[k]);
      shards[first].push_back({std::move(word), translation_length(g)});
    });
  });
  std::vector<PeriodicOrbitDatum> out;
  for (auto& s : shards)
    for (auto& d : s) out.push_back(std::move(d));
  return out;
}

TraceTables trace_tables(const SchottkyGroup& group, int max_order, std::uint64_t budget) {
  if (max_order < 1) throw PreconditionError("max_order must be >= 1");
  for (int n = 1; n <= max_order; ++n) check_budget(n, budget);
  set_working_precision(group.precision_bits);
  const int bits = group.precision_bits;

  std::vector<RealMatrix> letters;
  for (const auto& e : group.letter_elements())
    letters.push_back({e(0, 0).real(), e(0, 1).real(), e(1, 0).real(), e(1, 1).real()});

  // |trace| of every fixed point of σⁿ, per first letter and period.
  std::vector<std::vector<std::vector<Real>>> shards(
      letters.size(), std::vector<std::vector<Real>>(static_cast<std::size_t>(max_order) + 1));
  parallel_for(letters.size(), [&](std::size_t first) {
    reduced_word_walk(first, max_order, letters, [&](const std::vector<std::size_t>& w, const RealMatrix& g) {
      if (cyclically_admissible(w)) shards[first][w.size()].push_back(abs(g.a + g.d));
    });
  });

  TraceTables tables;
  tables.source = group.digest;
  tables.precision_bits = bits;
  tables.by_period.resize(static_cast<std::size_t>(max_order) + 1);
  const Real equal = tolerance(bits);
  const Real distinct = cluster_resolution(bits);
  for (int n = 1; n <= max_order; ++n) {
    std::vector<Real> traces;
    for (auto& s : shards) {
      auto& v = s[static_cast<std::size_t>(n)];
      std::move(v.begin(), v.end(), std::back_inserter(traces));
      v.clear();
      v.shrink_to_fit();
    }
    std::sort(traces.begin(), traces.end());
    auto& rows = tables.by_period[static_cast<std::size_t>(n)];
    std::size_t start = 0;
    for (std::size_t i = 1; i <= traces.size(); ++i) {
      if (i < traces.size()) {
        const Real gap = (traces[i] - traces[i - 1]) / traces[i];
        if (gap < equal) continue;
        if (gap < distinct) throw PrecisionExhausted("periodic traces can be neither merged nor separated");
      }
      const Real length = 2 * acosh(traces[start] / 2);
      const auto count = static_cast<std::uint64_t>(i - start);
      rows.push_back({length, count, Real(count) / (1 - exp(-length))});
      start = i;
    }
  }
  return tables;
}

Complex transfer_trace(const TraceTables& tables, const Complex& s, int n) {
  if (n < 1 || n > tables.max_order()) throw PreconditionError("trace order outside the computed tables");
  set_working_precision(tables.precision_bits);
  const bool real_s = s.imag() == 0;
  Real re(0), im(0);
  for (const auto& row : tables.by_period[static_cast<std::size_t>(n)]) {
    const Real modulus = exp(-s.real() * row.length) * row.weight;
    if (real_s) {
      re += modulus;
    } else {
      const Real phase = s.imag() * row.length;
      re += modulus * cos(phase);
      im -= modulus * sin(phase);
    }
  }
  return {re, im};
}

Complex transfer_trace(const SchottkyGroup& group, const Complex& s, int n, std::uint64_t budget) {
  TraceTables tables = trace_tables(group, n, budget);
  return transfer_trace(tables, s, n);
}

std::vector<Complex> determinant_coefficients(const std::vector<Complex>& traces) {
  std::vector<Complex> b{Complex(Real(1))};
  for (std::size_t k = 1; k <= traces.size(); ++k) {
    Complex sum(Real(0));
    for (std::size_t j = 1; j <= k; ++j) sum += traces[j - 1] * b[k - j];
    b.push_back(-sum / Complex(Real(static_cast<long>(k))));
  }
  return b;
}

ZetaEvaluation fredholm_determinant(const TraceTables& tables, const Complex& s, int N) {
  if (N < 1) throw PreconditionError("determinant order N must be >= 1");
  if (N > tables.max_order()) throw PreconditionError("determinant order exceeds the computed trace tables");
  set_working_precision(tables.precision_bits);
  std::vector<Complex> traces;
  for (int n = 1; n <= N; ++n) traces.push_back(transfer_trace(tables, s, n));
  const auto b = determinant_coefficients(traces);
  if (N >= 2 && abs(b[N]) >= abs(b[N / 2]))
    throw NonDecayingTail("|b_" + std::to_string(N) + "| >= |b_" + std::to_string(N / 2) + "|");
  ZetaEvaluation z;
  z.s = s;
  z.value = Complex(Real(0));
  for (const auto& bk : b) z.value += bk;
  z.log_value = log(z.value);
  z.truncation_bound = abs(b[N]) + abs(b[N - 1]);
  z.kind = ZetaKind::schottky_determinant;
  z.order = N;
  z.source = tables.source;
  return z;
}

ZetaEvaluation fredholm_determinant(const SchottkyGroup& group, const Complex& s, int N, std::uint64_t budget) {
  return fredholm_determinant(trace_tables(group, N, budget), s, N);
}

ZetaEvaluation schottky_ruelle(const TraceTables& tables, const Complex& s, int N) {
  const ZetaEvaluation upper = fredholm_determinant(tables, s + Complex(Real(1)), N);
  if (abs(upper.value) < tolerance(tables.precision_bits))
    throw PoleAtPoint("Z(s+1) vanishes at s = " + to_decimal(s.real(), 12) + (s.imag() < 0 ? "" : "+") +
                      to_decimal(s.imag(), 12) + "i");
  const ZetaEvaluation lower = fredholm_determinant(tables, s, N);
  ZetaEvaluation z;
  z.s = s;
  z.value = lower.value / upper.value;
  z.log_value = lower.log_value - upper.log_value;
  // Relative errors of numerator and denominator add in the log.
  z.truncation_bound = upper.truncation_bound / abs(upper.value);
  if (abs(lower.value) > 0) {
    z.truncation_bound += lower.truncation_bound / abs(lower.value);
  } else {
    z.truncation_bound = std::numeric_limits<Real>::infinity();
  }
  z.kind = ZetaKind::ruelle;
  z.order = N;
  z.source = tables.source;
  return z;
}

std::optional<Real> first_real_zero(const TraceTables& tables, int N, const Real& lower, const Real& step) {
  set_working_precision(tables.precision_bits);
  auto Z = [&](const Real& s) { return fredholm_determinant(tables, Complex(s), N).value.real(); };
  Real hi = 2;
  Real f_hi = Z(hi);
  if (f_hi == 0) return hi;
  for (Real lo = hi - step; lo >= lower; lo -= step) {
    const Real f_lo = Z(lo);
    if (f_lo == 0) return lo;
    if ((f_lo < 0) != (f_hi < 0)) {
      Real a = lo, b = hi, fa = f_lo;
      const Real width = cluster_resolution(tables.precision_bits);
      while (b - a > width) {
        const Real m = (a + b) / 2;
        const Real fm = Z(m);
        if (fm == 0) return m;
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      return (a + b) / 2;
    }
    hi = lo;
    f_hi = f_lo;
  }
  return std::nullopt;
}

LengthSpectrum schottky_primitive_spectrum(const SchottkyGroup& group, const Real& cutoff, std::uint64_t budget) {
  set_working_precision(group.precision_bits);
  std::vector<ClassRecord> records;
  int beyond = 0;
  for (int n = 1; beyond < 2; ++n) {
    auto words = periodic_words(group, n, budget);
    Real shortest = std::numeric_limits<Real>::infinity();
    for (auto& d : words) {
      if (d.displacement < shortest) shortest = d.displacement;
      if (d.displacement > cutoff || minimal_rotation(d.word) != d.word || is_proper_power(d.word)) continue;
      records.push_back({std::move(d.displacement), std::move(d.word)});
    }
    beyond = shortest > cutoff ? beyond + 1 : 0;
  }
  return assemble_spectrum(std::move(records), cutoff, group.name(), group.digest, group.precision_bits, true);
}

SchottkyConfig parse_schottky_config(std::string_view text) {
  std::map<std::string, std::string> values;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key != "trace_parameter" && key != "precision_bits" && key != "max_order" && key != "word_budget")
      throw FormatError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    if (value.empty()) throw FormatError("config line " + std::to_string(line_no) + ": empty value");
    if (!values.emplace(key, value).second) throw FormatError("duplicate config key '" + key + "'");
  }
  auto integer = [&](const std::string& key, long long lo) {
    const std::string& v = values.at(key);
    std::size_t used = 0;
    long long x = 0;
    try {
      x = std::stoll(v, &used);
    } catch (const std::exception&) {
      throw FormatError("bad integer for " + key + ": '" + v + "'");
    }
    if (used != v.size() || x < lo) throw FormatError("bad integer for " + key + ": '" + v + "'");
    return x;
  };
  SchottkyConfig cfg;
  if (values.count("precision_bits")) cfg.precision_bits = static_cast<int>(integer("precision_bits", 32));
  if (values.count("max_order")) cfg.max_order = static_cast<int>(integer("max_order", 1));
  if (values.count("word_budget")) cfg.word_budget = static_cast<std::uint64_t>(integer("word_budget", 1));
  set_working_precision(cfg.precision_bits);
  cfg.trace_parameter = values.count("trace_parameter") ? parse_real(values.at("trace_parameter")) : Real(6);
  return cfg;
}

SchottkyConfig load_schottky_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_schottky_config(buffer.str());
}

}  // namespace zetalab
