#include "hcdirac/conditions.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace hcdirac;

namespace {

// Brute-force minimizer of |tau + n - 2k| over a wide integer window.
PowerWeightCase enumerate(double tau, int n) {
  PowerWeightCase best;
  best.d = std::numeric_limits<double>::infinity();
  for (long k = -200; k <= 200; ++k) {
    const double d = std::abs(tau + n - 2.0 * k);
    if (d < best.d) {
      best.d = d;
      best.k_star = k;
    }
  }
  best.c = best.d * best.d / 4;
  return best;
}

WeightPaird power_half_pair(double s) {
  auto b = RadialWeightd::from_log("r^s", {}, catalogue::log_power(s));
  auto a = RadialWeightd::from_log("r^(s-1/2)", {}, catalogue::log_power(s - 0.5));
  return {a, b, Pairing::half_power, catalogue::log_power(0.5)};
}

}  // namespace

TEST_CASE("matrix criterion reproduces the shifted power constant") {
  const auto radii = log_spaced(1e-2, 1e2, 512);
  for (int n : {2, 3}) {
    const auto rep = build_clifford(n);
    const auto dirs = sample_directions(n, 10, 5);
    for (double tau : {0.5, 1.0, 2.0}) {
      const auto res = matrix_condition_M(rep, catalogue::shifted_power_pair(tau), radii, dirs, false);
      CHECK(res.value == doctest::Approx(2 * tau).epsilon(1e-9));
      CHECK(res.satisfied);
      CHECK(res.r_lo == 1e-2);
      CHECK(res.r_hi == 1e2);
      CHECK(res.samples == radii.size() * dirs.size());
    }
  }
}

TEST_CASE("massive half-power pairs shift the spectrum by one") {
  const auto rep = build_clifford(3);
  const auto radii = log_spaced(0.1, 10.0, 100);
  const auto dirs = sample_directions(3, 10, 1);
  const auto linear = catalogue::radial_phase_pair(catalogue::phi_linear<double>(), 2.0, "r");
  CHECK(matrix_condition_M(rep, linear, radii, dirs, true).value == doctest::Approx(1.0).epsilon(1e-12));
  const auto flat = matrix_condition_M(rep, power_half_pair(1.7), radii, dirs, true);
  CHECK(flat.value == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK_FALSE(flat.satisfied);
}

TEST_CASE("ray-wise finite differences agree with the radial reduction") {
  std::mt19937_64 rng(8);
  std::uniform_real_distribution<double> tau_dist(0.3, 2.0);
  const auto radii = log_spaced(0.3, 5.0, 12);
  for (int n : {2, 3, 4}) {
    const auto rep = build_clifford(n);
    const auto dirs = sample_directions(n, 6, 77);
    for (int trial = 0; trial < 4; ++trial) {
      const double tau = tau_dist(rng);
      for (bool massive : {false, true}) {
        const auto pair = trial % 2 ? catalogue::shifted_power_pair(tau) : catalogue::log_gaussian_pair(tau);
        const double radial = matrix_condition_M(rep, pair, radii, dirs, massive).value;
        const double general = matrix_condition_M(rep, as_field_weight(pair.a), as_field_weight(pair.b), radii, dirs,
                                                  massive)
                                   .value;
        CHECK(general == doctest::Approx(radial).epsilon(1e-6));
      }
    }
  }
}

TEST_CASE("non-radial weight: b = a = exp(tau e.x)") {
  // B = tau alpha.e is constant, so the Hermitian part of alpha_hat tau (alpha.e)
  // is tau (omega.e) and M = tau (omega.e) / r.
  const int n = 3;
  const double tau = 1.3;
  const auto rep = build_clifford(n);
  const Eigen::Vector3d e(0, 0, 1);
  FieldWeight w{"exp(tau x3)", [&](const Eigen::VectorXd& x) { return std::exp(tau * x.dot(e)); },
                [&](const Eigen::VectorXd& x) -> Eigen::VectorXd { return tau * std::exp(tau * x.dot(e)) * e; }};
  const std::vector<double> radii{0.5, 1.0, 2.0};
  const auto dirs = sample_directions(n, 0, 0);  // includes -e
  const auto res = matrix_condition_M(rep, w, w, radii, dirs, false);
  CHECK(res.value == doctest::Approx(-tau / 0.5).epsilon(1e-6));
}

TEST_CASE("matrix criterion errors") {
  const auto rep = build_clifford(2);
  const auto dirs = sample_directions(2, 0, 0);
  CHECK_THROWS_AS(matrix_condition_M(rep, catalogue::hardy_pair(), {}, dirs, false), std::invalid_argument);
  CHECK_THROWS_AS(matrix_condition_M(rep, catalogue::hardy_pair(), {-1.0}, dirs, false), std::invalid_argument);
  FieldWeight neg{"-1", [](const Eigen::VectorXd&) { return -1.0; },
                  [](const Eigen::VectorXd& x) -> Eigen::VectorXd { return Eigen::VectorXd::Zero(x.size()); }};
  CHECK_THROWS_AS(matrix_condition_M(rep, neg, neg, {1.0}, dirs, false), std::domain_error);
}

TEST_CASE("d constant") {
  const auto rep = build_clifford(3);
  const auto radii = log_spaced(0.1, 10.0, 50);
  const auto linear = catalogue::radial_phase_pair(catalogue::phi_linear<double>(), 2.0, "r");
  CHECK(d_constant(rep, linear, radii).value == doctest::Approx(1.0));
  CHECK(d_constant(rep, power_half_pair(0.8), radii).value == doctest::Approx(-1.0));
  CHECK_THROWS_AS(d_constant(rep, catalogue::hardy_pair(), radii), PreconditionError);
  CHECK_THROWS_AS(d_constant(rep, linear, {}), std::invalid_argument);
}

TEST_CASE("scalar criteria wrappers") {
  const auto radii = log_spaced(0.1, 10.0, 512);
  const auto quad = catalogue::radial_phase_pair(catalogue::phi_quadratic<double>(), 1.0, "r^2");
  const auto c = radial_c_condition(quad.b, radii);
  CHECK(c.value == doctest::Approx(-0.6).epsilon(1e-12));
  CHECK_FALSE(c.satisfied);
  const auto g = gamma_condition_result(catalogue::phi_quadratic<double>(), log_spaced(0.5, 10.0, 64));
  CHECK(g.value == doctest::Approx(2.0));
  CHECK(g.satisfied);
  CHECK(std::string(to_string(g.criterion)) == "gamma");
}

TEST_CASE("power weight constant: documented cases") {
  auto p = thm5_constant(0.5, 3);
  CHECK(p.nu == 1.75);
  CHECK(p.k_star == 2);
  CHECK(p.d == 0.5);
  CHECK(p.c == 0.0625);
  CHECK_FALSE(p.degenerate);

  p = thm5_constant(1.0, 2);
  CHECK(p.nu == 1.5);
  CHECK(p.d == 1.0);
  CHECK(p.c == 0.25);
  CHECK(p.tie);
  CHECK(p.k_star == 1);

  p = thm5_constant(-1.0, 3);
  CHECK(p.degenerate);
  CHECK(p.d == 0.0);
  CHECK(p.k_star == 1);
}

TEST_CASE("power weight constant matches brute-force enumeration") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> tau_dist(-20.0, 20.0);
  for (int i = 0; i < 500; ++i) {
    const double tau = tau_dist(rng);
    const int n = 2 + static_cast<int>(rng() % 6);
    const auto p = thm5_constant(tau, n);
    const auto oracle = enumerate(tau, n);
    CHECK(p.d == oracle.d);
    CHECK(p.c == oracle.c);
    CHECK(p.k_star == oracle.k_star);
    CHECK((p.k_star == static_cast<long>(std::floor(p.nu)) || p.k_star == static_cast<long>(std::ceil(p.nu))));
    CHECK(p.d == std::abs(tau + n - 2.0 * p.k_star));
  }
}

TEST_CASE("power weight constant is invariant under tau -> tau + 2") {
  // Dyadic tau keeps tau + 2 exact, so the constant must match bit for bit.
  for (double tau : {0.5, 0.75, -0.375, 1.25, -3.5, 6.0}) {
    for (int n : {2, 3, 5}) {
      const auto p = thm5_constant(tau, n);
      const auto q = thm5_constant(tau + 2, n);
      CHECK(q.c == p.c);
      CHECK(q.k_star == p.k_star + 1);
    }
  }
  for (double tau : {0.7, -0.3, 0.1}) {
    for (int n : {2, 3, 5}) {
      const auto p = thm5_constant(tau, n);
      const auto q = thm5_constant(tau + 2, n);
      CHECK(q.c == doctest::Approx(p.c).epsilon(1e-14));
      CHECK(q.k_star == p.k_star + 1);
      CHECK(q.degenerate == p.degenerate);
    }
  }
}
