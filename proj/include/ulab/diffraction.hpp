#pragma once

// Order-of-magnitude estimates for a pin-hole diffraction experiment with a
// small annular detector on the screen.  Momenta are in units of hbar/L,
// lengths in units of the pin-hole/screen distance L.  Every result is a
// ~-relation: only ratios and scalings are meaningful.

namespace ulab::diffraction {

struct DiffractionSetup {
  double p0 = 1000.0;      ///< incoming momentum
  double dp0 = 1.0;        ///< prepared momentum spread, ~ hbar/L
  double q_over_L = 0.5;   ///< detector radius / L
  double dq_over_L = 0.01; ///< detector size / L
  /// 2 pi |psi|^2 L^2 for the annulus; 1 for a screen-normalized packet.
  double annulus_norm = 1.0;

  void validate() const;
};

struct Estimate {
  double value = 0.0;
  bool order_of_magnitude = true;
};

/// delta p ~ p0 dq/L + dp0 q/L.
Estimate momentum_uncertainty(const DiffractionSetup& s);

/// Detector size at which the two terms of momentum_uncertainty are equal.
double crossover_size(const DiffractionSetup& s);

/// delta p delta q ~ dp0 (q/L) (dq/L).  Throws RegimeError when dq/L
/// exceeds crossover_size(s), where the geometric term dominates.
Estimate uncertainty_product(const DiffractionSetup& s);

/// |psi(q)|^2 2 pi q dq ~ (q/L)(dq/L).
Estimate detection_probability(const DiffractionSetup& s);

/// Summed probability of `detectors` concentric annuli of width 1/detectors
/// tiling the unit screen radius.
Estimate screen_coverage_probability(int detectors,
                                     double annulus_norm = 1.0);

}  // namespace ulab::diffraction
