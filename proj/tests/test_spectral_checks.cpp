#include "hcdirac/spectral_checks.hpp"

#include "hcdirac/conditions.hpp"
#include "hcdirac/dirac.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hcdirac;

namespace {

Eigen::VectorXcd gaussian_1d(int points, double halfwidth) {
  Eigen::VectorXcd f(points);
  const double h = 2 * halfwidth / points;
  for (int i = 0; i < points; ++i) {
    const double t = -halfwidth + h * i;
    f[i] = std::exp(-t * t);
  }
  return f;
}

}  // namespace

TEST_CASE("Gaussian reduces to 1 + s^2") {
  const auto f = gaussian_1d(512, 8.0);
  for (double s : {0.0, 0.25, 0.5, 1.0, 2.0}) {
    const auto res = fourier_1d_check(f, 8.0, s);
    CHECK(res.quotient == doctest::Approx(1 + s * s).epsilon(1e-6));
    CHECK(res.rhs >= res.lhs);
  }
  CHECK(fourier_1d_check(f, 8.0, 0.0).lhs == 0.0);
}

TEST_CASE("random bumps satisfy the Parseval bound") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> shift(-2.0, 2.0);
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const auto f = random_bump_1d(4096, 8.0, seed);
    const double s = shift(rng);
    const auto res = fourier_1d_check(f, 8.0, s);
    CHECK(res.rhs - res.lhs >= -1e-9 * res.rhs);
    // Excess equals the energy of f'.
    const auto grid = SpectralGrid::make({1, 4096, 8.0});
    const Eigen::VectorXcd df = grid->derivative(Eigen::MatrixXcd(f), 0).col(0);
    const double energy = df.squaredNorm() * grid->spec().spacing();
    CHECK(res.rhs - res.lhs == doctest::Approx(energy).epsilon(1e-9));
  }
}

TEST_CASE("unresolved functions are rejected") {
  Eigen::VectorXcd f = Eigen::VectorXcd::Zero(256);
  f[100] = 1.0;
  CHECK_THROWS_AS(fourier_1d_check(f, 4.0, 0.5), PreconditionError);
}

TEST_CASE("harmonic basis polynomials are harmonic") {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int n : {2, 3, 4}) {
    for (int l : {0, 1, 2}) {
      const auto basis = harmonic_basis(n, l);
      const std::size_t expected = l == 0 ? 1 : l == 1 ? n : n * (n - 1) / 2 + (n - 1);
      CHECK(basis.size() == expected);
      for (const auto& p : basis) {
        std::vector<double> x(n);
        for (auto& xi : x) xi = u(rng);
        const double h = 1e-3;
        double lap = 0;
        for (int j = 0; j < n; ++j) {
          auto xp = x, xm = x;
          xp[j] += h;
          xm[j] -= h;
          lap += (p(xp.data()) - 2 * p(x.data()) + p(xm.data())) / (h * h);
        }
        CHECK(std::abs(lap) < 1e-6);
      }
    }
  }
  CHECK_THROWS_AS(harmonic_basis(3, 3), std::invalid_argument);
}

TEST_CASE("angular operator is symmetric") {
  const auto rep = build_clifford(3);
  const auto grid = SpectralGrid::make({3, 48, 3.0});
  const auto u = make_annulus_bump(grid, 4, {1.0, 2.0}, 1);
  const auto v = make_annulus_bump(grid, 4, {1.0, 2.0}, 2);
  const Complex a = inner(apply_angular(rep, u), v);
  const Complex b = inner(u, apply_angular(rep, v));
  CHECK(std::abs(a - b) < 1e-10);
}

TEST_CASE("angular identity in the plane") {
  // n = 2: L = alpha_1 alpha_2 d_theta and both forms coincide.
  const auto rep = build_clifford(2);
  const auto report = angular_identity_check(rep, {2, 64, 3.0}, {0, 1, 2});
  CHECK(report.worst_stated < 1e-8);
  CHECK(report.worst_corrected < 1e-8);
}

TEST_CASE("angular spectrum in three dimensions") {
  const auto rep = build_clifford(3);
  const auto report = angular_identity_check(rep, {3, 48, 3.0}, {0, 1});
  // -Laplace-Beltrami equals L(L - 1) on spinor-valued harmonics.
  CHECK(report.worst_corrected < 1e-6);
  for (const auto& s : report.samples) {
    CAPTURE(s.label);
    CHECK(s.expectation_stated == doctest::Approx(s.eigenvalue).epsilon(1e-9));
    // L(L + 1) differs from L(L - 1) by 2L, which does not vanish for l >= 1.
    if (s.l == 0)
      CHECK(s.residual_stated < 1e-6);
    else
      CHECK(s.residual_stated > 0.1);
  }
}
