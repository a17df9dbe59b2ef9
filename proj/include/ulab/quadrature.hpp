#pragma once

#include <cstddef>
#include <span>
#include <type_traits>
#include <vector>

#include "ulab/packet.hpp"

namespace ulab {

/// Composite Simpson rule on a uniform grid over [lo, hi].
struct QuadratureSpec {
  static constexpr std::size_t kMinPanels = 100;

  std::size_t panels = 100000;
  double lo = 0.0;
  double hi = 1.0;

  /// Throws ParameterError for odd or too-small panel counts or an empty
  /// interval.
  void validate() const;
  double step() const { return (hi - lo) / static_cast<double>(panels); }
  double node(std::size_t i) const {
    return i == panels ? hi : lo + static_cast<double>(i) * step();
  }
  QuadratureSpec on(double a, double b) const { return {panels, a, b}; }
};

/// Simpson sum of pre-sampled values f(node(0)) ... f(node(panels)).
template <class T>
T simpson_sum(std::span<const T> values, double h) {
  T odd{}, even{};
  const std::size_t last = values.size() - 1;
  for (std::size_t i = 1; i < last; ++i) {
    if (i % 2) {
      odd += values[i];
    } else {
      even += values[i];
    }
  }
  return (values.front() + values[last] + 4.0 * odd + 2.0 * even) * (h / 3.0);
}

/// Integrates a real- or complex-valued f over [spec.lo, spec.hi].
template <class F>
auto integrate(F&& f, const QuadratureSpec& spec) {
  using T = std::decay_t<decltype(f(0.0))>;
  spec.validate();
  std::vector<T> values(spec.panels + 1);
  for (std::size_t i = 0; i <= spec.panels; ++i) values[i] = f(spec.node(i));
  return simpson_sum<T>(values, spec.step());
}

/// Position moments of a probability density by quadrature. Throws
/// NormalizationError when the density does not integrate to 1 within 1e-6.
template <class F>
AxisMoments position_moments(F&& density, const QuadratureSpec& spec);

AxisMoments position_moments_sampled(std::span<const double> density,
                                     const QuadratureSpec& spec);

template <class F>
AxisMoments position_moments(F&& density, const QuadratureSpec& spec) {
  spec.validate();
  std::vector<double> values(spec.panels + 1);
  for (std::size_t i = 0; i <= spec.panels; ++i) {
    values[i] = density(spec.node(i));
  }
  return position_moments_sampled(values, spec);
}

}  // namespace ulab
