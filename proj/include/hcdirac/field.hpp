// Spinor and scalar fields sampled on a SpectralGrid.
#ifndef HCDIRAC_FIELD_HPP
#define HCDIRAC_FIELD_HPP

#include "hcdirac/grid.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <optional>

namespace hcdirac {

/// Closed shell r_min <= |x| <= r_max.
struct Annulus {
  double r_min = 1.0;
  double r_max = 2.0;

  bool contains(double r) const { return r >= r_min && r <= r_max; }
  friend bool operator==(const Annulus&, const Annulus&) = default;
};

/// m-component complex field. values(p, c) is component c at grid point p.
/// When support is set the field vanishes outside the annulus, and operators
/// that preserve support propagate it.
struct SpinorField {
  GridPtr grid;
  int m = 0;
  Eigen::MatrixXcd values;
  std::optional<Annulus> support;
};

struct ScalarField {
  GridPtr grid;
  Eigen::VectorXd values;
};

/// exp(-1/(s(1-s))) with s = (r - r_min)/(r_max - r_min), rescaled so that the
/// maximum (at the annulus midpoint) is 1. Zero outside (r_min, r_max).
double annulus_profile(double r, double r_min, double r_max);

/// Throws unless 0 < r_min < r_max < R.
void validate_annulus(const GridSpec& spec, const Annulus& annulus);

/// Smooth spinor field supported in the annulus: the radial profile above
/// times a seeded angular modulation of degree <= 4 in omega per component,
/// normalized to unit L2 norm. Deterministic in seed.
SpinorField make_annulus_bump(const GridPtr& grid, int m, const Annulus& annulus, std::uint64_t seed);

/// Largest |u| at grid points outside the declared support (0 when unset).
double support_violation(const SpinorField& u);

/// amplitude * exp(-|x - center|^2 / (2 sigma^2)).
ScalarField gaussian_scalar(const GridPtr& grid, double amplitude, double sigma, const Eigen::VectorXd& center);

/// Seeded Gaussian gauge phase: amplitude in [1, 3], sigma in [0.38, 0.44],
/// center within 0.2 of the origin.
ScalarField random_gaussian_phase(const GridPtr& grid, std::uint64_t seed);

/// Largest |phi| on the outermost two grid layers, relative to max |phi|.
/// A resolved periodic scalar field must be small there.
double boundary_ratio(const ScalarField& phi);

}  // namespace hcdirac

#endif  // HCDIRAC_FIELD_HPP
