#include "ulab/landau_pollak.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include <Eigen/Eigenvalues>

#include "ulab/errors.hpp"

namespace ulab::lp {

namespace {

constexpr double kChainSlack = 1e-10;
constexpr double kEqualityTol = 1e-8;
constexpr double kBandTol = 1e-6;
constexpr double kNormTol = 1e-10;

int wrap(long long i, int M) {
  const long long r = i % M;
  return static_cast<int>(r < 0 ? r + M : r);
}

void check_window(const Window& w, int M, const char* name) {
  if (w.width < 1 || w.width > M) {
    throw ParameterError(std::string(name) + " width must lie in [1, " +
                         std::to_string(M) + "], got " +
                         std::to_string(w.width));
  }
}

// exp(2 pi i m / M) for m = 0..M-1; entry 0 is exactly 1.
std::vector<Complex> unit_roots(int M) {
  std::vector<Complex> roots(M);
  for (int m = 0; m < M; ++m) {
    roots[m] = std::polar(1.0, 2.0 * kPi * m / M);
  }
  roots[0] = 1.0;
  return roots;
}

Matrix coordinate_projector(int M, const Window& w) {
  Matrix out = Matrix::Zero(M, M);
  for (int i = 0; i < w.width; ++i) {
    const int j = wrap(static_cast<long long>(w.start) + i, M);
    out(j, j) = 1.0;
  }
  return out;
}

// Circulant: entry (a, b) depends only on (a - b) mod M.
Matrix momentum_projector(int M, const Window& w) {
  const auto roots = unit_roots(M);
  std::vector<Complex> column(M);
  for (int d = 0; d < M; ++d) {
    Complex sum = 0.0;
    for (int i = 0; i < w.width; ++i) {
      const long long f = static_cast<long long>(w.start) + i;
      sum += roots[wrap(f * d, M)];
    }
    column[d] = sum / static_cast<double>(M);
  }
  Matrix out(M, M);
  for (int a = 0; a < M; ++a) {
    for (int b = 0; b < M; ++b) out(a, b) = column[wrap(a - b, M)];
  }
  return out;
}

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

// Real part of the trace, accumulated in extended precision so that
// Tr(EPE) reproduces w_x w_p / M to rounding.
double real_trace(const Matrix& m) {
  long double sum = 0.0L;
  for (Eigen::Index i = 0; i < m.rows(); ++i) sum += m(i, i).real();
  return static_cast<double>(sum);
}

double top_eigenvalue(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitian,
                                               Eigen::EigenvaluesOnly);
  return solver.eigenvalues().maxCoeff();
}

}  // namespace

ProjectorPair build_projectors(int M, Window x_window, Window p_window,
                               SecondKind kind, int max_grid) {
  if (M < 2) {
    throw ParameterError("grid size M must be >= 2, got " + std::to_string(M));
  }
  if (M > max_grid) {
    throw ParameterError("grid size M = " + std::to_string(M) +
                         " exceeds the cap " + std::to_string(max_grid));
  }
  check_window(x_window, M, "x window");
  check_window(p_window, M, "p window");

  ProjectorPair pair;
  pair.M = M;
  pair.x_window = x_window;
  pair.p_window = p_window;
  pair.kind = kind;
  pair.E = coordinate_projector(M, x_window);
  pair.P = kind == SecondKind::kMomentum ? momentum_projector(M, p_window)
                                         : coordinate_projector(M, p_window);
  return pair;
}

ProjectorResiduals residuals(const ProjectorPair& pair) {
  return {max_abs(pair.E * pair.E - pair.E), max_abs(pair.P * pair.P - pair.P),
          max_abs(pair.E.adjoint() - pair.E),
          max_abs(pair.P.adjoint() - pair.P)};
}

ChainReport check_chain(const ProjectorPair& pair) {
  ChainReport r;
  const Matrix EPE = pair.E * pair.P * pair.E;
  const Matrix PEP = pair.P * pair.E * pair.P;
  r.trace_EPE = real_trace(EPE);
  r.trace_PEP = real_trace(PEP);
  // EPE vanishes outside the rows/columns of the x window.
  std::vector<int> rows;
  for (int i = 0; i < pair.x_window.width; ++i) {
    rows.push_back(wrap(static_cast<long long>(pair.x_window.start) + i, pair.M));
  }
  const auto w = static_cast<Eigen::Index>(rows.size());
  Matrix block(w, w);
  for (Eigen::Index a = 0; a < w; ++a) {
    for (Eigen::Index b = 0; b < w; ++b) block(a, b) = EPE(rows[a], rows[b]);
  }
  r.norm_EP = std::sqrt(std::max(0.0, top_eigenvalue(block)));
  r.counting = pair.kind == SecondKind::kMomentum
                   ? static_cast<double>(pair.x_window.width) *
                         pair.p_window.width / pair.M
                   : r.trace_EPE;
  r.chain_holds = r.norm_EP * r.norm_EP <= r.trace_EPE + kChainSlack &&
                  std::abs(r.trace_EPE - r.trace_PEP) <= kChainSlack;
  return r;
}

LpReport check_lp_inequality(const ProjectorPair& pair) {
  LpReport r;
  r.lambda_max_EplusP = top_eigenvalue(pair.E + pair.P);
  r.bound = 1.0 + check_chain(pair).norm_EP;
  r.residual = r.lambda_max_EplusP - r.bound;
  r.equality_holds = std::abs(r.residual) <= kEqualityTol;
  return r;
}

StateBoundReport state_bound_check(const Vector& state,
                                   const ProjectorPair& pair) {
  if (state.size() != pair.M) {
    throw ParameterError("state has " + std::to_string(state.size()) +
                         " entries, grid has " + std::to_string(pair.M));
  }
  const double norm = state.norm();
  if (!(std::abs(norm - 1.0) <= kNormTol)) {
    throw NormalizationError("grid state has norm " + std::to_string(norm));
  }
  StateBoundReport r;
  r.prob_E = state.dot(pair.E * state).real();
  const Vector projected = pair.P * state;
  r.prob_P = state.dot(projected).real();
  r.trace_bound = check_chain(pair).trace_EPE;
  r.sqrt_trace_bound = std::sqrt(r.trace_bound);
  r.band_residual = (projected - state).norm();
  r.band_limited = r.band_residual <= kBandTol;
  r.ratio = r.prob_E / r.trace_bound;
  r.bound_asserted = r.band_limited;
  r.bound_holds = r.prob_E <= r.trace_bound + kChainSlack;
  return r;
}

Vector discretize_packet(const ElementaryPacket& packet, int M) {
  if (M < 2) {
    throw ParameterError("grid size M must be >= 2, got " + std::to_string(M));
  }
  Vector v(M);
  for (int j = 0; j < M; ++j) {
    v(j) = eval_packet(packet, static_cast<double>(j) / M);
  }
  return v / v.norm();
}

Matrix dft_matrix(int M) {
  const auto roots = unit_roots(M);
  Matrix F(M, M);
  const double s = 1.0 / std::sqrt(static_cast<double>(M));
  for (int f = 0; f < M; ++f) {
    for (int j = 0; j < M; ++j) {
      F(f, j) = std::conj(roots[wrap(static_cast<long long>(f) * j, M)]) * s;
    }
  }
  return F;
}

}  // namespace ulab::lp
