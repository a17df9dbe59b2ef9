#pragma once

// Detector-array decomposition of the prepared packet psi_{n,1}.
//
// The box is tiled by N slices [(l-1)/N, l/N], l = 1..N, each carrying a
// normalized step function u_l = sqrt(N).  Firing detector l0 reduces the
// packet to phi_{l0} = psi u_{l0} / sqrt(B_{l0}).

#include <vector>

#include "ulab/packet.hpp"
#include "ulab/quadrature.hpp"

namespace ulab {

struct StepBasis {
  int N = 1;

  explicit StepBasis(int detectors);
  double slice_lo(int l) const { return static_cast<double>(l - 1) / N; }
  double slice_hi(int l) const { return static_cast<double>(l) / N; }
  double height() const;  ///< sqrt(N)
};

struct SliceAmplitude {
  double c = 0.0;  ///< sqrt(B / N)
  double B = 0.0;  ///< integral of |psi u_l|^2
};

/// Slices whose B falls below this are treated as nodes of psi.
inline constexpr double kNodeThreshold = 1e-15;

class ReducedState {
 public:
  ReducedState(ElementaryPacket source, StepBasis basis, int l0, double B);

  int l0() const { return l0_; }
  int N() const { return basis_.N; }
  const ElementaryPacket& source() const { return source_; }
  double B() const { return B_; }
  double c() const;
  double probability() const { return B_ / basis_.N; }
  double lo() const { return basis_.slice_lo(l0_); }
  double hi() const { return basis_.slice_hi(l0_); }

  /// phi_{l0}(x, 0); zero off the slice.
  Complex amplitude(double xbar) const;
  double density(double xbar) const;

  /// Quadrature over the support slice.
  AxisMoments position_moments(const QuadratureSpec& spec = {}) const;

 private:
  ElementaryPacket source_;
  StepBasis basis_;
  int l0_;
  double B_;
};

/// Exact integral of 2 sin^2(pi x) over [a, b].
double sine_squared_mass(double a, double b);

/// (c_l, B_l) for l = 1..N.  Requires packet.k == 1 and N >= 1.
std::vector<SliceAmplitude> decompose(const ElementaryPacket& packet, int N);

/// Throws ParameterError for l0 outside [1, N], NodeSliceError when
/// B_{l0} < kNodeThreshold.
ReducedState reduce(const ElementaryPacket& packet, int N, int l0);

}  // namespace ulab
