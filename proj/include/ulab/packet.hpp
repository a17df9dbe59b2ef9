#pragma once

// Elementary localized wave packets on the unit box.
//
// All quantities are dimensionless: positions in units of the box size L,
// momenta in units of hbar/L, time as T = ct/L with Compton ratio lambda.

#include <complex>

namespace ulab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

struct DomainParams {
  double lambda = 1e-5;  ///< Compton wavelength over box size.
  double T = 0.0;        ///< ct/L.

  void validate() const;
};

/// Two-plane-wave packet: Bloch index n (momentum offset pi*n) times the
/// sine envelope sin(k*pi*x) on a window that drifts with velocity pi*n.
struct ElementaryPacket {
  int n = 0;
  int k = 1;

  double bloch_momentum() const { return kPi * n; }
  double sine_momentum() const { return kPi * k; }
  void validate() const;
};

/// First and second moments of one observable.
struct AxisMoments {
  double mean = 0.0;
  double mean_sq = 0.0;
  double sd = 0.0;

  static AxisMoments from_raw(double mean, double mean_sq);
};

struct MomentSet {
  AxisMoments x;
  AxisMoments p;

  double product() const { return x.sd * p.sd; }
};

/// Left edge of the evaluation window, pi*n*lambda*T. The window is
/// [shift, 1 + shift]; at T = 0 it is [0, 1].
double window_shift(const ElementaryPacket& packet, const DomainParams& dom);

/// Amplitude (2i/sqrt2) exp[i p_n x - i (p_n^2 + p_k^2) lambda T / 2]
/// sin(k pi [x - p_n lambda T]).  Throws ParameterError when k < 1.
Complex eval_packet(const ElementaryPacket& packet, double xbar,
                    const DomainParams& dom = {});

/// x-derivative of eval_packet.
Complex eval_packet_derivative(const ElementaryPacket& packet, double xbar,
                               const DomainParams& dom = {});

/// Closed-form moments over the packet's evaluation window.
MomentSet analytic_moments(const ElementaryPacket& packet,
                           const DomainParams& dom = {});

/// Position/momentum deviation product of psi_{n,k}; independent of n and T.
/// k = 1 is the minimum, (pi / (2 sqrt3)) sqrt(1 - 24/(2pi)^2) = 0.567862...
double kennard_product(int k);

}  // namespace ulab
