#include "zetalab/zeta/zeta.hpp"

#include "zetalab/errors.hpp"
#include "zetalab/parallel.hpp"

#include <limits>

namespace zetalab {

std::string ZetaEvaluation::kind_label() const {
  switch (kind) {
    case ZetaKind::ruelle: return "ruelle";
    case ZetaKind::selberg: return "selberg(" + std::to_string(order) + ")";
    case ZetaKind::schottky_determinant: return "schottky-determinant(" + std::to_string(order) + ")";
  }
  return "unknown";
}

bool ZetaEvaluation::bound_is_finite() const { return boost::multiprecision::isfinite(truncation_bound); }

namespace {

Real infinity() { return std::numeric_limits<Real>::infinity(); }

struct LogSum {
  Complex total{Real(0), Real(0)};
  std::size_t skipped = 0;
  std::size_t zeros = 0;
};

// Σ_entries mult·log(1 − e^{−(m+s)ℓ}) for m in [m_lo, m_hi]; per-entry terms
// are computed in parallel and added in entry order.
LogSum log_factor_sum(const LengthSpectrum& spectrum, const Complex& s, int m_lo, int m_hi) {
  const Real negligible = boost::multiprecision::ldexp(Real(1), -spectrum.precision_bits);
  std::vector<LogSum> terms(spectrum.entries.size());
  parallel_for(spectrum.entries.size(), [&](std::size_t i) {
    const auto& e = spectrum.entries[i];
    LogSum& t = terms[i];
    for (int m = m_lo; m <= m_hi; ++m) {
      const Complex x = exp(-(s + Complex(Real(m))) * Complex(e.length));
      if (abs(x) < negligible) {
        ++t.skipped;
        continue;
      }
      const Complex factor = Complex(Real(1)) - x;
      if (factor == Complex(Real(0))) {
        ++t.zeros;
        continue;
      }
      t.total += Complex(Real(e.multiplicity)) * log(factor);
    }
  });
  LogSum sum;
  for (const auto& t : terms) {
    sum.total += t.total;
    sum.skipped += t.skipped;
    sum.zeros += t.zeros;
  }
  return sum;
}

// Heuristic bound on Σ_{ℓ > cutoff} |log(1 − e^{−sℓ})| from N(L) ≈ c·e^L/L.
Real spectral_tail(const LengthSpectrum& spectrum, const Real& sigma, const Real& c) {
  if (!(sigma > 1)) return infinity();
  const Real& L = spectrum.cutoff;
  const Real rho = 2 * c / (L * (1 - exp(-sigma * L)));
  return rho * exp(-(sigma - 1) * L) / (sigma - 1);
}

ZetaEvaluation finish(const LengthSpectrum& spectrum, const Complex& s, ZetaKind kind, int order,
                      const LogSum& sum, Real bound) {
  ZetaEvaluation z;
  z.s = s;
  z.log_value = sum.total;
  z.value = exp(sum.total);
  z.truncation_bound = std::move(bound);
  z.kind = kind;
  z.order = order;
  z.source = spectrum.group_id;
  z.skipped_factors = sum.skipped;
  z.zero_factors = sum.zeros;
  return z;
}

}  // namespace

Real counting_constant(const LengthSpectrum& spectrum) {
  set_working_precision(spectrum.precision_bits);
  const Real lo = spectrum.cutoff / 2;
  Real num(0), den(0);
  std::uint64_t count = 0;
  for (const auto& e : spectrum.entries) {
    count += e.multiplicity;
    if (e.length < lo) continue;
    const Real f = exp(e.length) / e.length;
    num += Real(count) * f;
    den += f * f;
  }
  if (den == 0) return Real(1);
  return num / den;
}

ZetaEvaluation ruelle_product(const LengthSpectrum& spectrum, const Complex& s) {
  set_working_precision(spectrum.precision_bits);
  const LogSum sum = log_factor_sum(spectrum, s, 0, 0);
  return finish(spectrum, s, ZetaKind::ruelle, 0, sum, spectral_tail(spectrum, s.real(), counting_constant(spectrum)));
}

ZetaEvaluation selberg_product(const LengthSpectrum& spectrum, const Complex& s, int M) {
  if (M < 0) throw PreconditionError("selberg_product requires M >= 0");
  set_working_precision(spectrum.precision_bits);
  const LogSum sum = log_factor_sum(spectrum, s, 0, M);
  const Real sigma = s.real();
  Real bound(0);
  if (!(sigma > 1)) {
    bound = infinity();
  } else {
    // Missing lengths over every level m, plus levels m > M of the kept lengths.
    bound = spectral_tail(spectrum, sigma, counting_constant(spectrum)) / (1 - exp(-spectrum.cutoff));
    for (const auto& e : spectrum.entries) {
      const Real x = exp(-(Real(M + 1) + sigma) * e.length);
      bound += Real(e.multiplicity) * x / ((1 - x) * (1 - exp(-e.length)));
    }
  }
  return finish(spectrum, s, ZetaKind::selberg, M, sum, std::move(bound));
}

RelationCheck selberg_relation_residual(const LengthSpectrum& spectrum, const Complex& s, int M) {
  if (!(s.real() > 1)) throw PreconditionError("selberg_relation_residual requires Re s > 1");
  const ZetaEvaluation r = ruelle_product(spectrum, s);
  const ZetaEvaluation z0 = selberg_product(spectrum, s, M);
  const ZetaEvaluation z1 = selberg_product(spectrum, s + Complex(Real(1)), M);
  RelationCheck check;
  check.residual = abs(r.log_value - z0.log_value + z1.log_value);
  const Real negligible = boost::multiprecision::ldexp(Real(1), -spectrum.precision_bits);
  check.bound = tolerance(spectrum.precision_bits);
  for (const auto& e : spectrum.entries) {
    const Complex x = exp(-(s + Complex(Real(M + 1))) * Complex(e.length));
    if (abs(x) < negligible) continue;
    check.bound += Real(e.multiplicity) * abs(log(Complex(Real(1)) - x));
  }
  return check;
}

std::string zeta_csv_header() { return "s_re,s_im,kind,log_re,log_im,value_re,value_im,trunc_bound"; }

std::string zeta_csv_row(const ZetaEvaluation& z, int digits) {
  const std::string bound = z.bound_is_finite() ? to_decimal(z.truncation_bound, digits) : "inf";
  return to_decimal(z.s.real(), digits) + "," + to_decimal(z.s.imag(), digits) + "," + z.kind_label() + "," +
         to_decimal(z.log_value.real(), digits) + "," + to_decimal(z.log_value.imag(), digits) + "," +
         to_decimal(z.value.real(), digits) + "," + to_decimal(z.value.imag(), digits) + "," + bound;
}

}  // namespace zetalab
