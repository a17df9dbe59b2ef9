#include "ulab/diffraction.hpp"

#include <string>

#include "ulab/errors.hpp"

namespace ulab::diffraction {

void DiffractionSetup::validate() const {
  if (!(p0 > 0.0) || !(dp0 > 0.0) || !(q_over_L > 0.0) ||
      !(dq_over_L > 0.0) || !(annulus_norm > 0.0)) {
    throw ParameterError("diffraction setup fields must all be positive");
  }
  if (q_over_L > 1.0 || dq_over_L > 1.0) {
    throw ParameterError("q/L and dq/L must not exceed 1");
  }
}

Estimate momentum_uncertainty(const DiffractionSetup& s) {
  s.validate();
  return {s.p0 * s.dq_over_L + s.dp0 * s.q_over_L};
}

double crossover_size(const DiffractionSetup& s) {
  s.validate();
  return s.dp0 * s.q_over_L / s.p0;
}

Estimate uncertainty_product(const DiffractionSetup& s) {
  const double limit = crossover_size(s);
  if (s.dq_over_L > limit) {
    throw RegimeError("dq/L = " + std::to_string(s.dq_over_L) +
                      " exceeds the crossover " + std::to_string(limit) +
                      "; the intrinsic momentum spread no longer dominates");
  }
  return {s.dp0 * s.q_over_L * s.dq_over_L};
}

Estimate detection_probability(const DiffractionSetup& s) {
  s.validate();
  return {s.annulus_norm * s.q_over_L * s.dq_over_L};
}

Estimate screen_coverage_probability(int detectors, double annulus_norm) {
  if (detectors < 1) {
    throw ParameterError("detector count must be >= 1, got " +
                         std::to_string(detectors));
  }
  const double width = 1.0 / detectors;
  double total = 0.0;
  for (int i = 0; i < detectors; ++i) {
    total += annulus_norm * (i + 0.5) * width * width;
  }
  return {total};
}

}  // namespace ulab::diffraction
