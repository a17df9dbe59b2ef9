#include "ulab/packet.hpp"

#include <cmath>
#include <string>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

// sin(pi*t) and cos(pi*t) with exact zeros at integer / half-integer t.
double sin_pi(double t) {
  double r = std::fmod(t, 2.0);  // (-2, 2)
  if (r > 1.0) r -= 2.0;
  if (r < -1.0) r += 2.0;
  if (r == 0.0 || r == 1.0 || r == -1.0) return 0.0;
  if (r == 0.5) return 1.0;
  if (r == -0.5) return -1.0;
  return std::sin(kPi * r);
}

double cos_pi(double t) { return sin_pi(t + 0.5); }

const Complex kPrefactor{0.0, std::sqrt(2.0)};  // 2i / sqrt(2)

}  // namespace

void DomainParams::validate() const {
  if (!(lambda > 0.0)) throw ParameterError("lambda must be positive");
  if (!(T >= 0.0)) throw ParameterError("T must be non-negative");
}

void ElementaryPacket::validate() const {
  if (k < 1) {
    throw ParameterError("sine index k must be >= 1, got " + std::to_string(k));
  }
}

AxisMoments AxisMoments::from_raw(double mean, double mean_sq) {
  const double var = mean_sq - mean * mean;
  return {mean, mean_sq, std::sqrt(var > 0.0 ? var : 0.0)};
}

double window_shift(const ElementaryPacket& packet, const DomainParams& dom) {
  return packet.bloch_momentum() * dom.lambda * dom.T;
}

Complex eval_packet(const ElementaryPacket& packet, double xbar,
                    const DomainParams& dom) {
  packet.validate();
  const double pn = packet.bloch_momentum();
  const double pk = packet.sine_momentum();
  const double phase =
      pn * xbar - 0.5 * (pn * pn + pk * pk) * dom.lambda * dom.T;
  const double envelope =
      sin_pi(packet.k * (xbar - window_shift(packet, dom)));
  return kPrefactor * std::polar(1.0, phase) * envelope;
}

Complex eval_packet_derivative(const ElementaryPacket& packet, double xbar,
                               const DomainParams& dom) {
  packet.validate();
  const double pn = packet.bloch_momentum();
  const double pk = packet.sine_momentum();
  const double phase =
      pn * xbar - 0.5 * (pn * pn + pk * pk) * dom.lambda * dom.T;
  const double u = packet.k * (xbar - window_shift(packet, dom));
  const Complex carrier = kPrefactor * std::polar(1.0, phase);
  return carrier * (Complex{0.0, pn} * sin_pi(u) + pk * cos_pi(u));
}

MomentSet analytic_moments(const ElementaryPacket& packet,
                           const DomainParams& dom) {
  packet.validate();
  const double pn = packet.bloch_momentum();
  const double pk = packet.sine_momentum();
  const double s = window_shift(packet, dom);
  const double twopik = 2.0 * kPi * packet.k;

  MomentSet m;
  m.p.mean = pn;
  m.p.mean_sq = 0.5 * ((pn + pk) * (pn + pk) + (pn - pk) * (pn - pk));
  m.p.sd = pk;

  m.x.mean = 0.5 + s;
  m.x.mean_sq = 1.0 / 3.0 - 2.0 / (twopik * twopik) + s + s * s;
  m.x.sd = std::sqrt(1.0 - 24.0 / (twopik * twopik)) / (2.0 * std::sqrt(3.0));
  return m;
}

double kennard_product(int k) {
  if (k < 1) {
    throw ParameterError("sine index k must be >= 1, got " + std::to_string(k));
  }
  const double c = 24.0 / (4.0 * kPi * kPi);
  return kPi / (2.0 * std::sqrt(3.0)) *
         std::sqrt(static_cast<double>(k) * k - c);
}

}  // namespace ulab
