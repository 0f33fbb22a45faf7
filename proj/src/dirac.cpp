#include "hcdirac/dirac.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace hcdirac {

namespace {

void require_compatible(const CliffordRepd& rep, const SpinorField& u, const char* where) {
  if (!u.grid) throw std::invalid_argument(std::string(where) + ": field has no grid");
  if (u.grid->dim() != rep.n)
    throw std::invalid_argument(std::string(where) + ": grid dimension " + std::to_string(u.grid->dim()) +
                                " does not match representation dimension " + std::to_string(rep.n));
  if (u.m != rep.m || u.values.cols() != rep.m)
    throw std::invalid_argument(std::string(where) + ": field has " + std::to_string(u.m) +
                                " components, representation needs " + std::to_string(rep.m));
  if (u.values.rows() != u.grid->size())
    throw std::invalid_argument(std::string(where) + ": sample count does not match grid");
}

void require_same_grid(const SpinorField& u, const ScalarField& phi, const char* where) {
  if (!phi.grid || !(phi.grid->spec() == u.grid->spec()) || phi.values.size() != u.values.rows())
    throw std::invalid_argument(std::string(where) + ": scalar field lives on a different grid");
}

// Row-scales a complex matrix by a real vector.
Eigen::MatrixXcd scale_rows(const Eigen::VectorXd& s, const Eigen::MatrixXcd& m) {
  return (m.array().colwise() * s.cast<Complex>().array()).matrix();
}

}  // namespace

SpinorField apply_dirac(const CliffordRepd& rep, const SpinorField& u, bool include_mass) {
  require_compatible(rep, u, "apply_dirac");
  const auto& grid = *u.grid;
  const Eigen::MatrixXcd hat = grid.forward(u.values);
  // Spinor index acts from the left: (alpha u_p)^T = u_p^T alpha^T.
  Eigen::MatrixXcd out_hat = Eigen::MatrixXcd::Zero(hat.rows(), hat.cols());
  for (int j = 0; j < rep.n; ++j) out_hat += scale_rows(grid.wavenumber(j), hat * rep.alphas[j].transpose());
  SpinorField out{u.grid, u.m, grid.inverse(out_hat), u.support};
  if (include_mass) out.values += u.values * rep.beta.transpose();
  return out;
}

SpinorField momentum(const SpinorField& u, int j) {
  if (j < 0 || j >= u.grid->dim()) throw std::invalid_argument("momentum: axis out of range");
  const auto& grid = *u.grid;
  Eigen::MatrixXcd hat = scale_rows(grid.wavenumber(j), grid.forward(u.values));
  return {u.grid, u.m, grid.inverse(hat), u.support};
}

SpinorField spectral_laplacian(const SpinorField& u) {
  return {u.grid, u.m, u.grid->laplacian(u.values), u.support};
}

MagneticPotential make_magnetic_potential(const ScalarField& phi) {
  if (!phi.grid) throw std::invalid_argument("make_magnetic_potential: scalar field has no grid");
  MagneticPotential pot{phi, {}};
  for (int j = 0; j < phi.grid->dim(); ++j) pot.A.push_back(phi.grid->derivative(phi.values, j));
  return pot;
}

double curl_defect(const MagneticPotential& pot) {
  const auto& grid = *pot.phi.grid;
  double worst = 0.0;
  for (int j = 0; j < grid.dim(); ++j)
    for (int k = j + 1; k < grid.dim(); ++k) {
      const Eigen::VectorXd curl = grid.derivative(pot.A[k], j) - grid.derivative(pot.A[j], k);
      worst = std::max(worst, curl.cwiseAbs().maxCoeff());
    }
  return worst;
}

SpinorField apply_magnetic_dirac(const CliffordRepd& rep, const SpinorField& u, const MagneticPotential& pot,
                                 bool include_mass) {
  require_compatible(rep, u, "apply_magnetic_dirac");
  require_same_grid(u, pot.phi, "apply_magnetic_dirac");
  if (static_cast<int>(pot.A.size()) != rep.n)
    throw std::invalid_argument("apply_magnetic_dirac: potential has wrong number of components");
  SpinorField out = apply_dirac(rep, u, include_mass);
  for (int j = 0; j < rep.n; ++j) out.values -= scale_rows(pot.A[j], u.values * rep.alphas[j].transpose());
  return out;
}

SpinorField gauge_transform(const SpinorField& u, const ScalarField& phi) {
  require_same_grid(u, phi, "gauge_transform");
  const Eigen::ArrayXcd phase = (Complex(0, 1) * phi.values.cast<Complex>().array()).exp();
  return {u.grid, u.m, (u.values.array().colwise() * phase).matrix(), u.support};
}

double apply_commutator_identity(const CliffordRepd& rep, const SpinorField& u, const ScalarField& phi) {
  require_compatible(rep, u, "apply_commutator_identity");
  require_same_grid(u, phi, "apply_commutator_identity");
  const auto& grid = *u.grid;
  SpinorField phi_u{u.grid, u.m, scale_rows(phi.values, u.values), u.support};
  Eigen::MatrixXcd residual = apply_dirac(rep, phi_u, true).values - scale_rows(phi.values, apply_dirac(rep, u, true).values);
  // [H, phi] = -i sum_j alpha_j d_j phi
  for (int j = 0; j < rep.n; ++j) {
    const Eigen::VectorXd dphi = grid.derivative(phi.values, j);
    residual += Complex(0, 1) * scale_rows(dphi, u.values * rep.alphas[j].transpose());
  }
  return std::sqrt(residual.squaredNorm() * grid.cell_volume());
}

double weighted_norm_sq(const SpinorField& u, const RadialWeightd& w) {
  const auto& radius = u.grid->radius();
  double total = 0.0;
  for (Eigen::Index p = 0; p < u.values.rows(); ++p) {
    const double r = radius[p];
    if (u.support && !u.support->contains(r)) continue;
    const double mag = u.values.row(p).squaredNorm();
    if (mag == 0.0) continue;
    const double w2 = std::exp(2.0 * w.log_value(r));
    if (!std::isfinite(w2) || !(w2 > 0.0))
      throw std::domain_error("weighted_norm_sq: weight '" + w.label() + "' undefined at r = " + std::to_string(r));
    total += w2 * mag;
  }
  return total * u.grid->cell_volume();
}

double norm_sq(const SpinorField& u) { return u.values.squaredNorm() * u.grid->cell_volume(); }

double norm(const SpinorField& u) { return std::sqrt(norm_sq(u)); }

Complex inner(const SpinorField& u, const SpinorField& v) {
  if (u.values.rows() != v.values.rows() || u.values.cols() != v.values.cols())
    throw std::invalid_argument("inner: field shapes differ");
  return (u.values.conjugate().cwiseProduct(v.values)).sum() * u.grid->cell_volume();
}

SpinorField apply(const CliffordRepd& rep, const DiracOperator& op, const SpinorField& u) {
  if (const auto* free = std::get_if<FreeDirac>(&op)) return apply_dirac(rep, u, free->include_mass);
  const auto& mag = std::get<MagneticDirac>(op);
  if (!mag.potential) throw std::invalid_argument("apply: magnetic operator without potential");
  return apply_magnetic_dirac(rep, u, *mag.potential, mag.include_mass);
}

std::string describe(const DiracOperator& op) {
  if (const auto* free = std::get_if<FreeDirac>(&op)) return free->include_mass ? "H" : "H0";
  return std::get<MagneticDirac>(op).include_mass ? "H_A" : "H0_A";
}

}  // namespace hcdirac
