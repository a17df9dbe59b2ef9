#include "ulab/spectral.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

// Partial sums S0 = sum a_k sin(k t), S1 = sum a_k k cos(k t),
// S2 = sum a_k k^2 sin(k t) at t = pi x.
struct BasisSums {
  Complex s0, s1, s2;
};

BasisSums basis_sums(std::span<const Complex> coeffs, double xbar) {
  constexpr int kReseed = 64;
  const double theta = kPi * xbar;
  const Complex step = std::polar(1.0, theta);
  Complex z = step;
  BasisSums out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double k = static_cast<double>(i + 1);
    if (i > 0) {
      z = (i % kReseed == 0) ? std::polar(1.0, k * theta) : z * step;
    }
    const Complex& a = coeffs[i];
    out.s0 += a * z.imag();
    out.s1 += a * (k * z.real());
    out.s2 += a * (k * k * z.imag());
  }
  return out;
}

// Integral of cos(m pi x) over [a, b].
double cosine_mass(int m, double a, double b) {
  if (m == 0) return b - a;
  const double mp = m * kPi;
  return 2.0 * std::cos(0.5 * mp * (a + b)) * std::sin(0.5 * mp * (b - a)) / mp;
}

}  // namespace

double SineSeries::weight() const {
  double w = 0.0;
  for (const auto& a : coeffs) w += std::norm(a);
  return w;
}

void SineSeries::validate() const {
  if (coeffs.empty()) throw ParameterError("sine series has no coefficients");
  const double w = weight();
  if (!(w > 0.0)) {
    throw NormalizationError("sine series is all-zero; not normalizable");
  }
  if (w > 1.0 + 1e-12) {
    throw NormalizationError("sine series weight " + std::to_string(w) +
                             " exceeds unit norm");
  }
}

std::string_view to_string(MomentNormalization policy) {
  switch (policy) {
    case MomentNormalization::kCutoffMixed:
      return "mixed";
    case MomentNormalization::kUnitNorm:
      return "normalized";
    case MomentNormalization::kRaw:
      return "raw";
  }
  return "?";
}

MomentNormalization parse_normalization(std::string_view name) {
  if (name == "mixed") return MomentNormalization::kCutoffMixed;
  if (name == "normalized") return MomentNormalization::kUnitNorm;
  if (name == "raw") return MomentNormalization::kRaw;
  throw ParameterError("unknown moment normalization '" + std::string(name) +
                       "' (expected mixed, normalized or raw)");
}

SeriesSums series_sums(const SineSeries& series) {
  series.validate();
  const auto& a = series.coeffs;
  const std::size_t K = a.size();
  SeriesSums s;
  for (std::size_t i = 0; i < K; ++i) {
    const double kp = kPi * static_cast<double>(i + 1);
    s.weight += std::norm(a[i]);
    s.second += kp * kp * std::norm(a[i]);
  }
  // <s_j | s_k'> = 4jk / (j^2 - k^2) when j + k is odd, else 0; the
  // antisymmetry leaves only 2 Im(a_j^* a_k) per unordered pair.
  for (std::size_t i = 0; i < K; ++i) {
    const double j = static_cast<double>(i + 1);
    for (std::size_t m = i + 1; m < K; m += 2) {
      const double im = std::imag(std::conj(a[i]) * a[m]);
      if (im == 0.0) continue;
      const double k = static_cast<double>(m + 1);
      s.first += 2.0 * im * 4.0 * j * k / (j * j - k * k);
    }
  }
  return s;
}

SeriesSums series_sums_quadrature(const SineSeries& series,
                                  const QuadratureSpec& spec) {
  series.validate();
  spec.validate();
  const std::size_t count = spec.panels + 1;
  std::vector<double> norm(count);
  std::vector<Complex> cross1(count), cross2(count);
  for (std::size_t i = 0; i < count; ++i) {
    const BasisSums b = basis_sums(series.coeffs, spec.node(i));
    norm[i] = 2.0 * std::norm(b.s0);
    cross1[i] = 2.0 * kPi * std::conj(b.s0) * b.s1;
    cross2[i] = 2.0 * kPi * kPi * std::conj(b.s0) * b.s2;
  }
  const double h = spec.step();
  SeriesSums s;
  s.weight = simpson_sum<double>(norm, h);
  s.first = simpson_sum<Complex>(cross1, h).imag();
  s.second = simpson_sum<Complex>(cross2, h).real();
  return s;
}

AxisMoments momentum_moments(int n, const SeriesSums& sums,
                             MomentNormalization policy) {
  if (!(sums.weight > 0.0)) {
    throw NormalizationError("series has zero weight; not normalizable");
  }
  double scale = 1.0;
  switch (policy) {
    case MomentNormalization::kCutoffMixed:
      scale = std::sqrt(sums.weight);
      break;
    case MomentNormalization::kUnitNorm:
      scale = sums.weight;
      break;
    case MomentNormalization::kRaw:
      break;
  }
  const double inner_mean = sums.first / scale;
  const double inner_sq = sums.second / scale;
  const double pn = kPi * n;
  const double var = inner_sq - inner_mean * inner_mean;
  return {pn + inner_mean, pn * pn + 2.0 * pn * inner_mean + inner_sq,
          std::sqrt(var > 0.0 ? var : 0.0)};
}

AxisMoments hermitian_moments(const SineSeries& series,
                              MomentNormalization policy) {
  return momentum_moments(series.n, series_sums(series), policy);
}

AxisMoments hermitian_moments_quadrature(const SineSeries& series,
                                         const QuadratureSpec& spec,
                                         MomentNormalization policy) {
  return momentum_moments(series.n, series_sums_quadrature(series, spec),
                          policy);
}

SineSeries sine_coefficients(const ReducedState& reduced, int kmax) {
  if (kmax < 1) {
    throw ParameterError("cutoff kmax must be >= 1, got " +
                         std::to_string(kmax));
  }
  const double a = reduced.lo();
  const double b = reduced.hi();
  const double scale = std::sqrt(reduced.N() / reduced.B());
  SineSeries series{reduced.source().n, std::vector<Complex>(kmax)};
  // 2 sin(k pi x) sin(pi x) = cos((k-1) pi x) - cos((k+1) pi x)
  for (int k = 1; k <= kmax; ++k) {
    series.coeffs[k - 1] =
        scale * (cosine_mass(k - 1, a, b) - cosine_mass(k + 1, a, b));
  }
  return series;
}

TruncatedState::TruncatedState(SineSeries series)
    : series_(std::move(series)), norm_(std::sqrt(series_.weight())) {
  series_.validate();
}

Complex TruncatedState::operator()(double xbar) const {
  const BasisSums b = basis_sums(series_.coeffs, xbar);
  const Complex carrier =
      Complex{0.0, std::sqrt(2.0)} * std::polar(1.0, kPi * series_.n * xbar);
  return carrier * b.s0 / norm_;
}

std::vector<double> TruncatedState::sample_density(
    const QuadratureSpec& spec) const {
  spec.validate();
  std::vector<double> out(spec.panels + 1);
  const double w = norm_ * norm_;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = 2.0 * std::norm(basis_sums(series_.coeffs, spec.node(i)).s0) / w;
  }
  return out;
}

AxisMoments TruncatedState::position_moments(const QuadratureSpec& spec) const {
  return position_moments_sampled(sample_density(spec), spec);
}

TruncatedState reconstruct_truncated(const SineSeries& series) {
  return TruncatedState(series);
}

}  // namespace ulab
