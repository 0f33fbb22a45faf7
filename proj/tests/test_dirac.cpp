#include "hcdirac/dirac.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hcdirac;

namespace {

constexpr Complex I(0, 1);

SpinorField plane_wave(const GridPtr& grid, const Eigen::VectorXcd& w, const Eigen::VectorXd& xi) {
  SpinorField u{grid, static_cast<int>(w.size()), Eigen::MatrixXcd(grid->size(), w.size()), std::nullopt};
  for (Eigen::Index p = 0; p < grid->size(); ++p) {
    double phase = 0;
    for (int j = 0; j < grid->dim(); ++j) phase += xi[j] * grid->coordinate(j)[p];
    u.values.row(p) = std::exp(I * phase) * w.transpose();
  }
  return u;
}

double rel(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).norm() / b.norm(); }

}  // namespace

TEST_CASE("plane waves are eigenfunctions of the symbol") {
  const double R = 3.0;
  for (int n : {1, 2, 3}) {
    const auto rep = build_clifford(n);
    const auto grid = SpectralGrid::make({n, n == 3 ? 16 : 32, R});
    Eigen::VectorXd xi(n);
    for (int j = 0; j < n; ++j) xi[j] = (j + 2) * M_PI / R;
    const Eigen::VectorXcd w = Eigen::VectorXcd::Random(rep.m);
    CMatrix<double> symbol = rep.beta;
    for (int j = 0; j < n; ++j) symbol += xi[j] * rep.alphas[j];
    const auto u = plane_wave(grid, w, xi);
    const auto expected = plane_wave(grid, symbol * w, xi);
    CHECK(rel(apply_dirac(rep, u, true).values, expected.values) < 1e-10);

    // Constant magnetic potential shifts the symbol.
    MagneticPotential pot{{grid, Eigen::VectorXd::Zero(grid->size())}, {}};
    for (int j = 0; j < n; ++j) pot.A.push_back(Eigen::VectorXd::Constant(grid->size(), j == 0 ? 0.7 : 0.0));
    CMatrix<double> shifted = symbol - 0.7 * rep.alphas[0];
    CHECK(rel(apply_magnetic_dirac(rep, u, pot).values, plane_wave(grid, shifted * w, xi).values) < 1e-10);
  }
}

TEST_CASE("massless operator annihilates constants") {
  const auto rep = build_clifford(2);
  const auto grid = SpectralGrid::make({2, 32, 3.0});
  SpinorField u{grid, 2, Eigen::MatrixXcd::Constant(grid->size(), 2, Complex(0.3, -1.1)), std::nullopt};
  CHECK(apply_dirac(rep, u, false).values.norm() < 1e-12);
}

TEST_CASE("structural identities on annulus fields") {
  for (int n : {2, 3}) {
    const auto rep = build_clifford(n);
    const auto grid = SpectralGrid::make({n, n == 2 ? 128 : 48, 3.0});
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto u = make_annulus_bump(grid, rep.m, {1.0, 2.0}, s);
      const auto v = make_annulus_bump(grid, rep.m, {1.0, 2.0}, s + 100);
      // (H0)^2 = -Laplacian
      const auto h0 = apply_dirac(rep, apply_dirac(rep, u, false), false);
      CHECK(rel(h0.values, -spectral_laplacian(u).values) < 1e-8);
      // H^2 = -Laplacian + 1
      const auto h = apply_dirac(rep, apply_dirac(rep, u, true), true);
      CHECK(rel(h.values, (-spectral_laplacian(u).values + u.values).eval()) < 1e-8);
      // symmetry of H and of each D_j
      const double scale = norm(u) * norm(v);
      CHECK(std::abs(inner(apply_dirac(rep, u, true), v) - inner(u, apply_dirac(rep, v, true))) <= 1e-8 * scale);
      for (int j = 0; j < n; ++j)
        CHECK(std::abs(inner(momentum(u, j), v) - inner(u, momentum(v, j))) <= 1e-10 * scale);
    }
  }
}

TEST_CASE("commutator with a smooth scalar") {
  const auto rep = build_clifford(2);
  const auto grid = SpectralGrid::make({2, 512, 3.0});
  const auto u = make_annulus_bump(grid, rep.m, {0.5, 2.5}, 9);
  const ScalarField one{grid, Eigen::VectorXd::Ones(grid->size())};
  CHECK(apply_commutator_identity(rep, u, one) < 1e-12);
  const auto phi = gaussian_scalar(grid, 1.5, 0.4, Eigen::Vector2d(0.1, -0.05));
  CHECK(apply_commutator_identity(rep, u, phi) <= 1e-8 * norm(u));
}

TEST_CASE("gauge transformation") {
  const auto rep = build_clifford(2);
  const auto grid = SpectralGrid::make({2, 512, 3.0});
  const auto u = make_annulus_bump(grid, rep.m, {0.5, 2.5}, 4);
  const auto phi = random_gaussian_phase(grid, 17);
  const auto v = gauge_transform(u, phi);
  CHECK(std::abs(norm(v) - norm(u)) < 1e-12);
  ScalarField minus{grid, -phi.values};
  CHECK((gauge_transform(v, minus).values - u.values).cwiseAbs().maxCoeff() < 1e-14);
  const ScalarField zero{grid, Eigen::VectorXd::Zero(grid->size())};
  CHECK(gauge_transform(u, zero).values == u.values);

  const auto pot = make_magnetic_potential(phi);
  CHECK(curl_defect(pot) < 1e-8);
  const auto lhs = apply_magnetic_dirac(rep, v, pot);
  const auto rhs = gauge_transform(apply_dirac(rep, u, true), phi);
  CHECK((lhs.values - rhs.values).norm() * std::sqrt(grid->cell_volume()) <= 1e-8 * norm(u));

  const auto zero_pot = make_magnetic_potential(zero);
  CHECK(apply_magnetic_dirac(rep, u, zero_pot).values == apply_dirac(rep, u, true).values);
}

TEST_CASE("weighted norms") {
  const auto rep = build_clifford(3);
  const auto grid = SpectralGrid::make({3, 48, 3.0});
  const auto u = make_annulus_bump(grid, rep.m, {1.0, 2.0}, 1);
  CHECK(weighted_norm_sq(u, catalogue::unit_weight()) == doctest::Approx(norm_sq(u)).epsilon(1e-14));
  for (double tau : {0.5, 1.0, 3.0}) {
    const auto w = RadialWeightd::from_log("r^(tau/2)", {}, catalogue::log_power(tau / 2));
    const double val = weighted_norm_sq(u, w);
    CHECK(val >= std::pow(1.0, tau) * norm_sq(u));
    CHECK(val <= std::pow(2.0, tau) * norm_sq(u));
  }
}

TEST_CASE("weighted norms converge under resolution doubling") {
  // 48^3 resolves the annulus bump only to about 1e-5; 128^2 and 64^3 reach 1e-6.
  const auto pair = catalogue::hardy_pair();
  for (auto [n, points] : {std::pair{2, 128}, std::pair{3, 64}}) {
    const auto rep = build_clifford(n);
    const auto coarse = SpectralGrid::make({n, points, 3.0});
    const auto fine = SpectralGrid::make({n, 2 * points, 3.0});
    for (std::uint64_t s = 0; s < 2; ++s) {
      const auto u = make_annulus_bump(coarse, rep.m, {1.0, 2.0}, s);
      const auto uf = make_annulus_bump(fine, rep.m, {1.0, 2.0}, s);
      const double a = weighted_norm_sq(u, pair.b), b = weighted_norm_sq(uf, pair.b);
      CHECK(std::abs(b - a) / b <= 1e-6);
    }
  }
}

TEST_CASE("shape mismatches are rejected") {
  const auto rep3 = build_clifford(3);
  const auto grid2 = SpectralGrid::make({2, 32, 3.0});
  const auto u = make_annulus_bump(grid2, 2, {1.0, 2.0}, 1);
  CHECK_THROWS_AS(apply_dirac(rep3, u, false), std::invalid_argument);
  const auto other = SpectralGrid::make({2, 64, 3.0});
  const ScalarField phi{other, Eigen::VectorXd::Zero(other->size())};
  CHECK_THROWS_AS(gauge_transform(u, phi), std::invalid_argument);
}

TEST_CASE("operator variants") {
  const auto rep = build_clifford(2);
  const auto grid = SpectralGrid::make({2, 64, 3.0});
  const auto pot = std::make_shared<const MagneticPotential>(
      make_magnetic_potential({grid, Eigen::VectorXd::Zero(grid->size())}));
  CHECK(describe(FreeDirac{false}) == "H0");
  CHECK(describe(FreeDirac{true}) == "H");
  CHECK(describe(MagneticDirac{pot, false}) == "H0_A");
  CHECK(describe(MagneticDirac{pot, true}) == "H_A");
  const auto u = make_annulus_bump(grid, 2, {1.0, 2.0}, 2);
  CHECK(apply(rep, MagneticDirac{pot, false}, u).values == apply(rep, FreeDirac{false}, u).values);
}
