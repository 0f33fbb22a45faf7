#include "hcdirac/field.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

namespace hcdirac {

namespace {
constexpr int kModulationDegree = 4;
}

double annulus_profile(double r, double r_min, double r_max) {
  const double s = (r - r_min) / (r_max - r_min);
  if (!(s > 0.0 && s < 1.0)) return 0.0;
  // exp(-1/(s(1-s))) peaks at s = 1/2 with value exp(-4).
  return std::exp(4.0 - 1.0 / (s * (1.0 - s)));
}

void validate_annulus(const GridSpec& spec, const Annulus& annulus) {
  if (!(annulus.r_min > 0.0) || !(annulus.r_max > annulus.r_min) || !(annulus.r_max < spec.box_halfwidth))
    throw std::invalid_argument("annulus: need 0 < r_min < r_max < R (got r_min=" + std::to_string(annulus.r_min) +
                                ", r_max=" + std::to_string(annulus.r_max) +
                                ", R=" + std::to_string(spec.box_halfwidth) + ")");
}

SpinorField make_annulus_bump(const GridPtr& grid, int m, const Annulus& annulus, std::uint64_t seed) {
  if (!grid) throw std::invalid_argument("make_annulus_bump: null grid");
  if (m < 1) throw std::invalid_argument("make_annulus_bump: spinor dimension must be >= 1");
  validate_annulus(grid->spec(), annulus);
  const int n = grid->dim();

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);

  // Per component c and degree q: complex coefficient z and unit axis e.
  std::vector<Eigen::VectorXd> axes;
  std::vector<Complex> coeffs;
  for (int c = 0; c < m; ++c) {
    for (int q = 0; q <= kModulationDegree; ++q) {
      Eigen::VectorXd e(n);
      for (int j = 0; j < n; ++j) e[j] = normal(rng);
      const double len = e.norm();
      if (len > 0) e /= len; else e.setUnit(0);
      axes.push_back(e);
      const double re = uniform(rng);
      const double im = uniform(rng);
      coeffs.emplace_back(re, im);
    }
  }

  SpinorField u{grid, m, Eigen::MatrixXcd::Zero(grid->size(), m), annulus};
  const auto& radius = grid->radius();
  Eigen::VectorXd omega(n);
  for (Eigen::Index p = 0; p < grid->size(); ++p) {
    const double r = radius[p];
    const double profile = annulus_profile(r, annulus.r_min, annulus.r_max);
    if (profile == 0.0) continue;
    for (int j = 0; j < n; ++j) omega[j] = grid->coordinate(j)[p] / r;
    for (int c = 0; c < m; ++c) {
      Complex g = 0;
      for (int q = 0; q <= kModulationDegree; ++q) {
        const auto idx = static_cast<std::size_t>(c * (kModulationDegree + 1) + q);
        g += coeffs[idx] * std::pow(axes[idx].dot(omega), q);
      }
      u.values(p, c) = profile * g;
    }
  }
  const double norm = std::sqrt(u.values.squaredNorm() * grid->cell_volume());
  if (norm > 0) u.values /= norm;
  return u;
}

double support_violation(const SpinorField& u) {
  if (!u.support) return 0.0;
  double worst = 0.0;
  const auto& radius = u.grid->radius();
  for (Eigen::Index p = 0; p < u.values.rows(); ++p)
    if (!u.support->contains(radius[p])) worst = std::max(worst, u.values.row(p).cwiseAbs().maxCoeff());
  return worst;
}

ScalarField gaussian_scalar(const GridPtr& grid, double amplitude, double sigma, const Eigen::VectorXd& center) {
  if (!(sigma > 0)) throw std::invalid_argument("gaussian_scalar: sigma must be positive");
  if (center.size() != grid->dim()) throw std::invalid_argument("gaussian_scalar: center dimension mismatch");
  Eigen::VectorXd d2 = Eigen::VectorXd::Zero(grid->size());
  for (int j = 0; j < grid->dim(); ++j) d2 += (grid->coordinate(j).array() - center[j]).square().matrix();
  return {grid, (amplitude * (-d2.array() / (2 * sigma * sigma)).exp()).matrix()};
}

ScalarField random_gaussian_phase(const GridPtr& grid, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double amplitude = 1.0 + 2.0 * unit(rng);
  const double sigma = 0.38 + 0.06 * unit(rng);
  Eigen::VectorXd center(grid->dim());
  for (int j = 0; j < grid->dim(); ++j) center[j] = 0.2 / std::sqrt(double(grid->dim())) * (2 * unit(rng) - 1);
  return gaussian_scalar(grid, amplitude, sigma, center);
}

double boundary_ratio(const ScalarField& phi) {
  const auto& g = *phi.grid;
  const double peak = phi.values.cwiseAbs().maxCoeff();
  if (peak == 0.0) return 0.0;
  const double edge = g.spec().box_halfwidth - 2.0 * g.spec().spacing() - 1e-12;
  double worst = 0.0;
  for (Eigen::Index p = 0; p < g.size(); ++p) {
    bool outer = false;
    for (int j = 0; j < g.dim(); ++j) outer = outer || std::abs(g.coordinate(j)[p]) >= edge;
    if (outer) worst = std::max(worst, std::abs(phi.values[p]));
  }
  return worst / peak;
}

}  // namespace hcdirac
