#include "ulab/protocol.hpp"

#include <string>

#include "ulab/errors.hpp"
#include "ulab/step_basis.hpp"

namespace ulab {

namespace {

ProtocolParams partial(const ElementaryPacket& packet, int N, int l0,
                       int kmax) {
  return {packet.n, N, l0, kmax};
}

}  // namespace

std::string_view to_string(Stage stage) {
  switch (stage) {
    case Stage::kI:
      return "i";
    case Stage::kII:
      return "ii";
    case Stage::kIII:
      return "iii";
    case Stage::kIV:
      return "iv";
  }
  return "?";
}

Stage parse_stage(std::string_view name) {
  if (name == "i") return Stage::kI;
  if (name == "ii") return Stage::kII;
  if (name == "iii") return Stage::kIII;
  if (name == "iv") return Stage::kIV;
  throw ParameterError("unknown stage '" + std::string(name) + "'");
}

ProtocolParams ProtocolParams::with_default_cutoff(int n, int N, int l0) {
  return {n, N, l0, 4 * N};
}

void ProtocolParams::validate() const {
  if (N < 1) {
    throw ParameterError("detector count N must be >= 1, got " +
                         std::to_string(N));
  }
  if (l0 < 1 || l0 > N) {
    throw ParameterError("slice index l0 must lie in [1, " + std::to_string(N) +
                         "], got " + std::to_string(l0));
  }
  if (kmax < 1) {
    throw ParameterError("cutoff kmax must be >= 1, got " +
                         std::to_string(kmax));
  }
}

MeasurementRecord stage_i(const ElementaryPacket& packet,
                          const ProtocolOptions& /*options*/) {
  const MomentSet m = analytic_moments(packet);
  MeasurementRecord r;
  r.stage = Stage::kI;
  r.sd_x = m.x.sd;
  r.sd_p = m.p.sd;
  r.U = m.product();
  r.P = r.P_cumulative = 1.0;
  r.params = partial(packet, 0, 0, 0);
  return r;
}

MeasurementRecord stage_ii(const ElementaryPacket& packet, int N, int l0,
                           const ProtocolOptions& options) {
  const ReducedState reduced = reduce(packet, N, l0);
  MeasurementRecord r;
  r.stage = Stage::kII;
  r.sd_x = reduced.position_moments(options.quadrature).sd;
  r.sd_p = analytic_moments(packet).p.sd;
  r.U = r.sd_x * r.sd_p;
  r.P = r.P_cumulative = reduced.probability();
  r.params = partial(packet, N, l0, 0);
  return r;
}

MeasurementRecord stage_iii(const ElementaryPacket& packet, int N, int l0,
                            int kmax, const ProtocolOptions& options) {
  const ReducedState reduced = reduce(packet, N, l0);
  const SineSeries series = sine_coefficients(reduced, kmax);
  MeasurementRecord r;
  r.stage = Stage::kIII;
  r.sd_x = reduced.position_moments(options.quadrature).sd;
  r.sd_p = hermitian_moments(series, options.normalization).sd;
  r.U = r.sd_x * r.sd_p;
  r.P = r.P_cumulative = 1.0;
  r.params = partial(packet, N, l0, kmax);
  return r;
}

MeasurementRecord stage_iv(const ElementaryPacket& packet, int N, int l0,
                           const ProtocolOptions& options) {
  const ReducedState reduced = reduce(packet, N, l0);
  const SineSeries first = sine_coefficients(reduced, 1);
  MeasurementRecord r;
  r.stage = Stage::kIV;
  r.sd_x = reduced.position_moments(options.quadrature).sd;
  r.sd_p = analytic_moments(packet).p.sd;
  r.U = r.sd_x * r.sd_p;
  r.P = std::norm(first.coeffs.front());
  r.P_cumulative = reduced.probability() * r.P;
  r.params = partial(packet, N, l0, 0);
  r.approx = true;
  return r;
}

std::array<MeasurementRecord, 4> run_protocol(const ProtocolParams& params,
                                              const ProtocolOptions& options) {
  params.validate();
  options.domain.validate();
  const ElementaryPacket packet{params.n, 1};
  std::array<MeasurementRecord, 4> records{
      stage_i(packet, options),
      stage_ii(packet, params.N, params.l0, options),
      stage_iii(packet, params.N, params.l0, params.kmax, options),
      stage_iv(packet, params.N, params.l0, options),
  };
  for (auto& r : records) r.params = params;
  return records;
}

}  // namespace ulab
