// Checks of the two reductions behind the pure power weights: the
// one-dimensional Fourier bound in the log-radial variable and the spectrum
// of the angular operator L.
#ifndef HCDIRAC_SPECTRAL_CHECKS_HPP
#define HCDIRAC_SPECTRAL_CHECKS_HPP

#include "hcdirac/clifford.hpp"
#include "hcdirac/field.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <string>
#include <vector>

namespace hcdirac {

struct FourierCheck {
  double lhs = 0;      // s^2 int |f|^2
  double rhs = 0;      // int |f' - s f|^2
  double norm_sq = 0;  // int |f|^2
  double quotient = 0; // rhs / norm_sq
  double tail = 0;     // spectral tail of f
};

/// f sampled at t_i = -halfwidth + i h on a periodic grid, s = nu - k.
/// Throws PreconditionError when the spectral tail of f exceeds tail_limit.
FourierCheck fourier_1d_check(const Eigen::VectorXcd& f, double halfwidth, double shift, double tail_limit = 1e-8);

/// Seeded compactly supported 1D test function: a C-infinity bump with random
/// center, width and complex polynomial modulation, inside [-halfwidth/2, halfwidth/2].
Eigen::VectorXcd random_bump_1d(int points, double halfwidth, std::uint64_t seed);

/// L u = sum_{j<k} alpha_j alpha_k (x_j d_k - x_k d_j) u, derivatives spectral.
SpinorField apply_angular(const CliffordRepd& rep, const SpinorField& u);

/// A real harmonic polynomial of degree l in n variables.
struct HarmonicPolynomial {
  int l = 0;
  std::string label;
  std::vector<std::pair<double, std::vector<int>>> terms;  // coefficient, exponent per axis

  double operator()(const double* x) const;
};

/// Basis of harmonic polynomials of degree l <= 2 in n variables:
/// 1; x_j; x_j x_k (j < k) and x_j^2 - x_{j+1}^2.
std::vector<HarmonicPolynomial> harmonic_basis(int n, int l);

/// P(x) exp(-|x|^2 / (2 sigma^2)) w with a seeded unit spinor w. The angular
/// part is a spherical harmonic of degree l.
SpinorField harmonic_field(const GridPtr& grid, int m, const HarmonicPolynomial& p, double sigma, std::uint64_t seed);

struct AngularSample {
  int l = 0;
  std::string label;
  double eigenvalue = 0;           // l (l + n - 2)
  double residual_stated = 0;      // ||L(L + n - 2) u - eigenvalue u|| / (eigenvalue-scaled ||u||)
  double residual_corrected = 0;   // same with L(L - (n - 2))
  double expectation_stated = 0;   // Re <u, L(L + n - 2) u> / ||u||^2
  double tail = 0;
};

struct AngularReport {
  GridSpec grid;
  double sigma = 0;
  std::vector<AngularSample> samples;
  double worst_stated = 0;
  double worst_corrected = 0;
};

/// Residuals are relative to max(1, eigenvalue) ||u||. Throws
/// PreconditionError when a test field's spectral tail exceeds tail_limit.
AngularReport angular_identity_check(const CliffordRepd& rep, const GridSpec& grid, const std::vector<int>& degrees,
                                     double sigma = 0.4, std::uint64_t seed = 7, double tail_limit = 1e-4);

}  // namespace hcdirac

#endif  // HCDIRAC_SPECTRAL_CHECKS_HPP
