#pragma once

// Four-stage sampling protocol on the prepared packet psi_{n,1} at T = 0.
//
//   i    accept every event of psi:                 U = dx * dp,        P = 1
//   ii   keep events of detector l0 only:           U = dp * dx_l0,     P = B/N
//   iii  all momenta of the reduced state phi_l0:   U = dp_l0 * dx_l0,  P = 1
//   iv   select momentum of psi from phi_l0:        U = dp * dx_l0,     P = |a_1|^2

#include <array>
#include <string_view>

#include "ulab/packet.hpp"
#include "ulab/quadrature.hpp"
#include "ulab/spectral.hpp"

namespace ulab {

enum class Stage { kI, kII, kIII, kIV };

std::string_view to_string(Stage stage);
Stage parse_stage(std::string_view name);

struct ProtocolParams {
  int n = 10;
  int N = 200;
  int l0 = 80;
  int kmax = 800;

  /// Defaults kmax to 4N.
  static ProtocolParams with_default_cutoff(int n, int N, int l0);
  void validate() const;
};

struct ProtocolOptions {
  QuadratureSpec quadrature{};
  MomentNormalization normalization = MomentNormalization::kCutoffMixed;
  /// Stages run at T = 0; carried for forward compatibility only.
  DomainParams domain{};
};

struct MeasurementRecord {
  Stage stage = Stage::kI;
  double U = 0.0;
  double P = 1.0;
  /// Ensemble probability of reaching this record from psi; P_ii * P_iv for
  /// stage iv, otherwise P.
  double P_cumulative = 1.0;
  double sd_x = 0.0;
  double sd_p = 0.0;
  ProtocolParams params{};
  /// Stage iv values are approximate (selective momentum measurement).
  bool approx = false;
};

MeasurementRecord stage_i(const ElementaryPacket& packet,
                          const ProtocolOptions& options = {});
MeasurementRecord stage_ii(const ElementaryPacket& packet, int N, int l0,
                           const ProtocolOptions& options = {});
MeasurementRecord stage_iii(const ElementaryPacket& packet, int N, int l0,
                            int kmax, const ProtocolOptions& options = {});
MeasurementRecord stage_iv(const ElementaryPacket& packet, int N, int l0,
                           const ProtocolOptions& options = {});

std::array<MeasurementRecord, 4> run_protocol(
    const ProtocolParams& params, const ProtocolOptions& options = {});

}  // namespace ulab
