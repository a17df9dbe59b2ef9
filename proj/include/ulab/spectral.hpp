#pragma once

// Sine-series view of slice-reduced states and momentum moments computed
// through the series rather than through pointwise derivatives of steps.

#include <span>
#include <string_view>
#include <vector>

#include "ulab/packet.hpp"
#include "ulab/quadrature.hpp"
#include "ulab/step_basis.hpp"

namespace ulab {

/// Coefficients a_k (k = 1..kmax) of a state in the basis psi_{n,k}(x, 0).
/// The series is a truncation of a unit-norm parent, so sum |a_k|^2 <= 1.
struct SineSeries {
  int n = 0;
  std::vector<Complex> coeffs;  ///< coeffs[k - 1] = a_k

  int kmax() const { return static_cast<int>(coeffs.size()); }
  /// sum_k |a_k|^2
  double weight() const;
  /// Throws ParameterError when empty, NormalizationError when all-zero or
  /// heavier than unit norm.
  void validate() const;
};

/// How truncated-series sums are turned into expectation values.
///
/// A cutoff series phi_K carries weight w = sum |a_k|^2 < 1.  kCutoffMixed
/// divides by sqrt(w): for the second moment this is exactly
/// <chi_K| p^2 |phi> with chi_K = phi_K / sqrt(w) the normalized truncated
/// state and phi the unit-norm parent.  kUnitNorm divides by w (moments of
/// chi_K itself); kRaw leaves the sums undivided.  All three coincide for a
/// complete normalized series.
enum class MomentNormalization { kCutoffMixed, kUnitNorm, kRaw };

std::string_view to_string(MomentNormalization policy);
/// Accepts "mixed", "normalized", "raw".
MomentNormalization parse_normalization(std::string_view name);

/// Weighted sums of a series: w = <phi|phi>, first = <p>_sym, second = <p^2>_sym
/// with the hermitian-symmetrized derivative forms, before normalization.
struct SeriesSums {
  double weight = 0.0;
  double first = 0.0;
  double second = 0.0;
};

/// Closed-form sums over coefficient pairs.
SeriesSums series_sums(const SineSeries& series);

/// The same sums by quadrature of the reconstructed series and its
/// analytic derivatives.
SeriesSums series_sums_quadrature(const SineSeries& series,
                                  const QuadratureSpec& spec = {});

/// Momentum moments of exp(i p_n x) phi(x): <p> = p_n + <p>_phi,
/// <p^2> = p_n^2 + 2 p_n <p>_phi + <p^2>_phi, sd^2 = <p^2>_phi - <p>_phi^2.
AxisMoments momentum_moments(int n, const SeriesSums& sums,
                             MomentNormalization policy);

AxisMoments hermitian_moments(
    const SineSeries& series,
    MomentNormalization policy = MomentNormalization::kCutoffMixed);

AxisMoments hermitian_moments_quadrature(
    const SineSeries& series, const QuadratureSpec& spec = {},
    MomentNormalization policy = MomentNormalization::kCutoffMixed);

/// a_{l0,k} = <psi_{n,k} | phi_{l0}> for k = 1..kmax, from product-to-sum
/// antiderivatives.  The Bloch phases cancel, so every coefficient is real.
SineSeries sine_coefficients(const ReducedState& reduced, int kmax);

/// sum_k a_k psi_{n,k}(x, 0) / sqrt(sum |a_k|^2).
class TruncatedState {
 public:
  explicit TruncatedState(SineSeries series);

  const SineSeries& series() const { return series_; }
  double norm() const { return norm_; }

  Complex operator()(double xbar) const;
  double density(double xbar) const { return std::norm((*this)(xbar)); }

  /// Densities at every node of spec, via a phase recurrence.
  std::vector<double> sample_density(const QuadratureSpec& spec) const;
  AxisMoments position_moments(const QuadratureSpec& spec = {}) const;

 private:
  SineSeries series_;
  double norm_;
};

/// Throws NormalizationError for an all-zero series.
TruncatedState reconstruct_truncated(const SineSeries& series);

}  // namespace ulab
