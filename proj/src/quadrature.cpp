#include "ulab/quadrature.hpp"

#include <cmath>
#include <string>

#include "ulab/errors.hpp"

namespace ulab {

void QuadratureSpec::validate() const {
  if (panels < kMinPanels) {
    throw ParameterError("quadrature needs at least " +
                         std::to_string(kMinPanels) + " panels, got " +
                         std::to_string(panels));
  }
  if (panels % 2 != 0) {
    throw ParameterError("Simpson quadrature needs an even panel count, got " +
                         std::to_string(panels));
  }
  if (!(hi > lo)) throw ParameterError("quadrature interval is empty");
}

AxisMoments position_moments_sampled(std::span<const double> density,
                                     const QuadratureSpec& spec) {
  spec.validate();
  if (density.size() != spec.panels + 1) {
    throw ParameterError("sample count does not match quadrature grid");
  }
  const double h = spec.step();
  const double norm = simpson_sum<double>(density, h);
  if (!std::isfinite(norm) || std::abs(norm - 1.0) > 1e-6) {
    throw NormalizationError("density integrates to " + std::to_string(norm) +
                             ", expected 1");
  }
  std::vector<double> weighted(density.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    weighted[i] = spec.node(i) * density[i];
  }
  const double mean = simpson_sum<double>(weighted, h);
  // Central second moment; the raw one cancels badly for narrow densities.
  for (std::size_t i = 0; i < density.size(); ++i) {
    const double d = spec.node(i) - mean;
    weighted[i] = d * d * density[i];
  }
  const double var = simpson_sum<double>(weighted, h);
  return {mean, var + mean * mean, std::sqrt(var > 0.0 ? var : 0.0)};
}

}  // namespace ulab
