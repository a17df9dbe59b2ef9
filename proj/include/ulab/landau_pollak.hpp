#pragma once

// Discrete Landau-Pollak laboratory on an M-point periodic grid.
//
// E projects onto a contiguous window of grid points, P onto a contiguous
// window of DFT frequencies (P = F^dagger D F).  On the grid the phase-space
// volume delta_x delta_p / 2 pi hbar becomes the count w_x w_p / M.

#include <Eigen/Dense>

#include "ulab/packet.hpp"

namespace ulab::lp {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Contiguous index range [start, start + width) taken modulo M.
struct Window {
  int start = 0;
  int width = 1;
};

enum class SecondKind { kMomentum, kCoordinate };

struct ProjectorPair {
  int M = 0;
  Window x_window;
  Window p_window;
  SecondKind kind = SecondKind::kMomentum;
  Matrix E;
  Matrix P;
};

inline constexpr int kDefaultMaxGrid = 512;

/// Throws ParameterError for M < 2, empty or oversized windows, or
/// M > max_grid.
ProjectorPair build_projectors(int M, Window x_window, Window p_window,
                               SecondKind kind = SecondKind::kMomentum,
                               int max_grid = kDefaultMaxGrid);

struct ProjectorResiduals {
  double idempotent_E = 0.0;
  double idempotent_P = 0.0;
  double hermitian_E = 0.0;
  double hermitian_P = 0.0;
};

/// Largest entrywise |E^2 - E|, |E^dagger - E| and likewise for P.
ProjectorResiduals residuals(const ProjectorPair& pair);

struct ChainReport {
  double norm_EP = 0.0;
  double trace_EPE = 0.0;
  double trace_PEP = 0.0;
  double counting = 0.0;  ///< w_x w_p / M for momentum pairs
  bool chain_holds = false;
};

/// ||EP||^2 = ||EPE|| <= Tr(EPE) = Tr(PEP).  ||EP|| is the square root of
/// the top eigenvalue of the hermitian EPE.
ChainReport check_chain(const ProjectorPair& pair);

struct LpReport {
  double lambda_max_EplusP = 0.0;
  double bound = 0.0;  ///< 1 + ||EP||
  double residual = 0.0;
  bool equality_holds = false;  ///< |lambda_max - bound| <= 1e-8
};

LpReport check_lp_inequality(const ProjectorPair& pair);

struct StateBoundReport {
  double prob_E = 0.0;
  double prob_P = 0.0;
  double trace_bound = 0.0;       ///< Tr(EPE)
  double sqrt_trace_bound = 0.0;  ///< its square root
  double band_residual = 0.0;     ///< ||P psi - psi||
  bool band_limited = false;
  /// prob_E <= trace_bound; only asserted for band-limited states.
  bool bound_asserted = false;
  bool bound_holds = false;
  double ratio = 0.0;  ///< prob_E / trace_bound
};

/// Throws NormalizationError unless ||state|| = 1 within 1e-10.
StateBoundReport state_bound_check(const Vector& state,
                                   const ProjectorPair& pair);

/// Samples psi_{n,k}(j / M, 0), j = 0..M-1, normalized on the grid.
Vector discretize_packet(const ElementaryPacket& packet, int M);

/// Unitary DFT matrix F_{fj} = exp(-2 pi i f j / M) / sqrt(M).
Matrix dft_matrix(int M);

}  // namespace ulab::lp
