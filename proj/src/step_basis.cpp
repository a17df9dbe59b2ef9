#include "ulab/step_basis.hpp"

#include <cmath>
#include <string>

#include "ulab/errors.hpp"

namespace ulab {

namespace {

void require_prepared(const ElementaryPacket& packet) {
  packet.validate();
  if (packet.k != 1) {
    throw ParameterError("the protocol prepares psi_{n,1}; got k = " +
                         std::to_string(packet.k));
  }
}

}  // namespace

StepBasis::StepBasis(int detectors) : N(detectors) {
  if (N < 1) {
    throw ParameterError("detector count N must be >= 1, got " +
                         std::to_string(N));
  }
}

double StepBasis::height() const { return std::sqrt(static_cast<double>(N)); }

double sine_squared_mass(double a, double b) {
  return (b - a) - std::cos(kPi * (a + b)) * std::sin(kPi * (b - a)) / kPi;
}

std::vector<SliceAmplitude> decompose(const ElementaryPacket& packet, int N) {
  const StepBasis basis(N);
  require_prepared(packet);
  std::vector<SliceAmplitude> out(static_cast<std::size_t>(N));
  for (int l = 1; l <= N; ++l) {
    const double mass = sine_squared_mass(basis.slice_lo(l), basis.slice_hi(l));
    out[l - 1] = {std::sqrt(mass), N * mass};
  }
  return out;
}

ReducedState reduce(const ElementaryPacket& packet, int N, int l0) {
  const StepBasis basis(N);
  require_prepared(packet);
  if (l0 < 1 || l0 > N) {
    throw ParameterError("slice index l0 must lie in [1, " + std::to_string(N) +
                         "], got " + std::to_string(l0));
  }
  const double B =
      N * sine_squared_mass(basis.slice_lo(l0), basis.slice_hi(l0));
  if (!(B >= kNodeThreshold)) {
    throw NodeSliceError("slice " + std::to_string(l0) + " of " +
                         std::to_string(N) +
                         " sits on a node of the packet (B = " +
                         std::to_string(B) + ")");
  }
  return ReducedState(packet, basis, l0, B);
}

ReducedState::ReducedState(ElementaryPacket source, StepBasis basis, int l0,
                           double B)
    : source_(source), basis_(basis), l0_(l0), B_(B) {}

double ReducedState::c() const { return std::sqrt(probability()); }

Complex ReducedState::amplitude(double xbar) const {
  if (xbar < lo() || xbar > hi()) return {};
  return eval_packet(source_, xbar) * (basis_.height() / std::sqrt(B_));
}

double ReducedState::density(double xbar) const {
  return std::norm(amplitude(xbar));
}

AxisMoments ReducedState::position_moments(const QuadratureSpec& spec) const {
  return ulab::position_moments([this](double x) { return density(x); },
                                spec.on(lo(), hi()));
}

}  // namespace ulab
