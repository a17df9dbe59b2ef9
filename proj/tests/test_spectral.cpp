#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "ulab/errors.hpp"
#include "ulab/spectral.hpp"
#include "ulab/step_basis.hpp"

using namespace ulab;

namespace {

SineSeries random_series(std::mt19937_64& rng, int n, int K) {
  std::normal_distribution<double> g;
  SineSeries s{n, std::vector<Complex>(K)};
  double w = 0.0;
  for (auto& a : s.coeffs) {
    a = {g(rng), g(rng)};
    w += std::norm(a);
  }
  for (auto& a : s.coeffs) a /= std::sqrt(w);
  return s;
}

// <p> and <p^2> of exp(i pi n x) phi_K by Gauss-Legendre, differentiating
// each basis term directly.
struct MomentumOracle {
  double mean, mean_sq;
};

MomentumOracle momentum_oracle(const SineSeries& s) {
  const double pn = oracle::kPi * s.n;
  auto psi = [&](double x) {
    Complex v = 0.0;
    for (int k = 1; k <= s.kmax(); ++k) v += s.coeffs[k - 1] * std::sin(k * oracle::kPi * x);
    return Complex{0, std::sqrt(2.0)} * std::polar(1.0, pn * x) * v;
  };
  auto dpsi = [&](double x) {
    Complex v = 0.0, dv = 0.0;
    for (int k = 1; k <= s.kmax(); ++k) {
      v += s.coeffs[k - 1] * std::sin(k * oracle::kPi * x);
      dv += s.coeffs[k - 1] * (k * oracle::kPi) * std::cos(k * oracle::kPi * x);
    }
    return Complex{0, std::sqrt(2.0)} * std::polar(1.0, pn * x) * (Complex{0, pn} * v + dv);
  };
  // -i d/dx is hermitian on these states; <p^2> = ||p psi||^2.
  const Complex mean = oracle::gauss(
      [&](double x) { return std::conj(psi(x)) * Complex{0, -1} * dpsi(x); }, 0.0, 1.0, 64);
  const double mean_sq = oracle::gauss([&](double x) { return std::norm(dpsi(x)); }, 0.0, 1.0, 64);
  return {mean.real(), mean_sq};
}

}  // namespace

TEST_CASE("hermitian_moments: single-k series") {
  for (int k : {1, 2, 9}) {
    SineSeries s{10, std::vector<Complex>(k)};
    s.coeffs.back() = 1.0;
    const AxisMoments m = hermitian_moments(s);
    CHECK(m.sd == doctest::Approx(k * kPi).epsilon(1e-14));
    CHECK(m.mean == doctest::Approx(10 * kPi).epsilon(1e-15));
    const SeriesSums sums = series_sums(s);
    CHECK(sums.first == 0.0);
  }
}

TEST_CASE("hermitian_moments: complete random series match derivative oracle") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const SineSeries s = random_series(rng, trial - 10, 1 + trial % 10);
    const MomentumOracle o = momentum_oracle(s);
    for (auto policy : {MomentNormalization::kCutoffMixed, MomentNormalization::kUnitNorm,
                        MomentNormalization::kRaw}) {
      const AxisMoments m = hermitian_moments(s, policy);
      CHECK(m.mean == doctest::Approx(o.mean).epsilon(1e-11));
      CHECK(m.mean_sq == doctest::Approx(o.mean_sq).epsilon(1e-11));
    }
  }
}

TEST_CASE("closed-form and quadrature paths agree") {
  std::mt19937_64 rng(5);
  SUBCASE("random complex series") {
    for (int K : {3, 40, 200}) {
      const SineSeries s = random_series(rng, 7, K);
      const AxisMoments a = hermitian_moments(s);
      const AxisMoments b = hermitian_moments_quadrature(s, {20000});
      CHECK(a.mean == doctest::Approx(b.mean).epsilon(1e-6));
      CHECK(a.sd == doctest::Approx(b.sd).epsilon(1e-6));
    }
  }
  SUBCASE("reduced state at kmax = 800") {
    const SineSeries s = sine_coefficients(reduce({10, 1}, 200, 80), 800);
    for (auto policy : {MomentNormalization::kCutoffMixed, MomentNormalization::kUnitNorm,
                        MomentNormalization::kRaw}) {
      const AxisMoments a = hermitian_moments(s, policy);
      const AxisMoments b = hermitian_moments_quadrature(s, {100000}, policy);
      CHECK(a.sd == doctest::Approx(b.sd).epsilon(1e-6));
      CHECK(a.mean_sq == doctest::Approx(b.mean_sq).epsilon(1e-6));
    }
  }
}

TEST_CASE("reduced-state momentum spread at the paper cutoff") {
  const SineSeries s = sine_coefficients(reduce({10, 1}, 200, 80), 800);
  const AxisMoments m = hermitian_moments(s);
  CHECK(m.sd == doctest::Approx(572.993).epsilon(0.005));
  // Frozen from an independent numpy evaluation of the coefficient sums.
  CHECK(m.sd == doctest::Approx(572.9928979616919).epsilon(1e-11));
  CHECK(hermitian_moments(s, MomentNormalization::kUnitNorm).sd ==
        doctest::Approx(580.3968664246829).epsilon(1e-11));
  CHECK(hermitian_moments(s, MomentNormalization::kRaw).sd ==
        doctest::Approx(565.6833799552285).epsilon(1e-11));
  CHECK(m.mean == doctest::Approx(10 * kPi));
}

TEST_CASE("sine_coefficients") {
  SUBCASE("first coefficient equals slice amplitude") {
    const ReducedState r = reduce({10, 1}, 200, 80);
    const SineSeries s = sine_coefficients(r, 800);
    CHECK(std::abs(std::norm(s.coeffs[0]) - 0.00899826) < 1e-8);
    CHECK(std::abs(std::norm(s.coeffs[0]) - r.c() * r.c()) < 1e-15);
    for (const auto& a : s.coeffs) CHECK(a.imag() == 0.0);
    // Brute-force sum: leakage past the cutoff is about 5%.
    CHECK(s.weight() == doctest::Approx(0.9499411920693749).epsilon(1e-12));
    CHECK(s.weight() > 0.94);
    CHECK(s.weight() < 0.95);
  }
  SUBCASE("whole-box slice is the identity") {
    const SineSeries s = sine_coefficients(reduce({10, 1}, 1, 1), 30);
    CHECK(s.coeffs[0].real() == doctest::Approx(1.0).epsilon(1e-15));
    for (int k = 2; k <= 30; ++k) CHECK(std::abs(s.coeffs[k - 1]) < 1e-15);
  }
  SUBCASE("against Gauss-Legendre inner products") {
    for (auto [N, l0] : {std::pair{200, 80}, {100, 40}, {37, 5}}) {
      const SineSeries s = sine_coefficients(reduce({3, 1}, N, l0), 60);
      for (int k : {1, 2, 17, 60}) {
        CHECK(s.coeffs[k - 1].real() ==
              doctest::Approx(oracle::slice_coefficient(N, l0, k)).epsilon(1e-10));
      }
    }
  }
  SUBCASE("independent of Bloch index") {
    const auto a = sine_coefficients(reduce({0, 1}, 50, 9), 20);
    const auto b = sine_coefficients(reduce({17, 1}, 50, 9), 20);
    for (int k = 0; k < 20; ++k) CHECK(a.coeffs[k] == b.coeffs[k]);
  }
  SUBCASE("bad cutoff") {
    CHECK_THROWS_AS(sine_coefficients(reduce({10, 1}, 10, 3), 0), ParameterError);
  }
}

TEST_CASE("Parseval: coefficient weight equals projected norm") {
  for (auto [N, l0] : {std::pair{200, 80}, {100, 40}, {60, 1}}) {
    const SineSeries s = sine_coefficients(reduce({10, 1}, N, l0), 4 * N);
    const SeriesSums q = series_sums_quadrature(s, {100000});
    CHECK(std::abs(q.weight - s.weight()) <= 1e-10);
  }
}

TEST_CASE("reconstruct_truncated") {
  SUBCASE("single coefficient") {
    SineSeries s{4, {0.0, 0.0, 0.6}};
    const TruncatedState t = reconstruct_truncated(s);
    for (double x : {0.1, 0.25, 0.7}) {
      const double v = std::sin(3 * kPi * x);
      CHECK(t.density(x) == doctest::Approx(2 * v * v).epsilon(1e-13));
    }
  }
  SUBCASE("position spread at the paper cutoff") {
    const SineSeries s = sine_coefficients(reduce({10, 1}, 200, 80), 800);
    const AxisMoments m = reconstruct_truncated(s).position_moments({100000});
    CHECK(std::abs(m.sd - 0.0013598) < 1e-3);
    // Frozen from a 4e5-interval numpy Simpson evaluation.
    CHECK(m.sd == doctest::Approx(0.0013641320397).epsilon(1e-8));
  }
  SUBCASE("large cutoff approaches the step state") {
    const ReducedState r = reduce({10, 1}, 200, 80);
    const TruncatedState t = reconstruct_truncated(sine_coefficients(r, 20000));
    const double peak = r.density(0.3975);
    for (double x : {0.3965, 0.3975, 0.3985}) {
      CHECK(std::abs(t.density(x) - r.density(x)) < 0.02 * peak);
    }
    for (double x : {0.2, 0.39, 0.41, 0.8}) CHECK(t.density(x) < 0.02 * peak);
  }
  SUBCASE("all-zero series") {
    CHECK_THROWS_AS(reconstruct_truncated(SineSeries{0, {0.0, 0.0}}), NormalizationError);
    CHECK_THROWS_AS(hermitian_moments(SineSeries{0, {0.0}}), NormalizationError);
    CHECK_THROWS_AS(hermitian_moments(SineSeries{0, {}}), ParameterError);
  }
}

TEST_CASE("normalization policy names") {
  CHECK(parse_normalization("mixed") == MomentNormalization::kCutoffMixed);
  CHECK(to_string(parse_normalization("raw")) == "raw");
  CHECK_THROWS_AS(parse_normalization("bogus"), ParameterError);
}
