#pragma once

#include "zetalab/numeric.hpp"
#include "zetalab/spectrum/spectrum.hpp"

#include <string>

namespace zetalab {

enum class ZetaKind { ruelle, selberg, schottky_determinant };

struct ZetaEvaluation {
  Complex s;
  Complex value;
  Complex log_value;
  /// Heuristic bound on |log error|; +infinity outside the convergence region.
  Real truncation_bound;
  ZetaKind kind = ZetaKind::ruelle;
  int order = 0;  // M for selberg, N for the determinant
  std::string source;
  std::size_t skipped_factors = 0;  // factors equal to 1 at working precision
  std::size_t zero_factors = 0;     // factors exactly 0, left out of the product

  /// "ruelle", "selberg(M)" or "schottky-determinant(N)".
  std::string kind_label() const;
  bool bound_is_finite() const;
};

/// Least-squares constant c in N(L) ≈ c·e^L/L over [cutoff/2, cutoff];
/// 1 (the asymptotic value) when the window holds no data.
Real counting_constant(const LengthSpectrum& spectrum);

/// Sum over entries of multiplicity·log(1 − e^{−sℓ}).
ZetaEvaluation ruelle_product(const LengthSpectrum& spectrum, const Complex& s);

/// Sum over entries and m = 0..M of multiplicity·log(1 − e^{−(m+s)ℓ}).
ZetaEvaluation selberg_product(const LengthSpectrum& spectrum, const Complex& s, int M);

struct RelationCheck {
  Real residual;
  Real bound;
  bool holds() const { return residual <= bound; }
};

/// |log ζ_R(s) − log ζ_S(s) + log ζ_S(s+1)| on one shared spectrum, with the
/// level-(M+1) remainder it must equal up to rounding.
RelationCheck selberg_relation_residual(const LengthSpectrum& spectrum, const Complex& s, int M);

std::string zeta_csv_header();
std::string zeta_csv_row(const ZetaEvaluation& z, int digits);

}  // namespace zetalab
