// Spectral Dirac operators on periodic grids.
//
//   H0  = sum_j alpha_j D_j,          D_j = -i d/dx_j (Fourier multiplier k_j)
//   H   = H0 + beta
//   H_A = sum_j alpha_j (D_j - A_j) + beta
//
// All operators return fields carrying the input's support annulus: the
// continuum operators are local, so anything the discrete operator produces
// outside the support is resolution error and is excluded from weighted norms.
#ifndef HCDIRAC_DIRAC_HPP
#define HCDIRAC_DIRAC_HPP

#include "hcdirac/clifford.hpp"
#include "hcdirac/field.hpp"
#include "hcdirac/weights.hpp"

#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace hcdirac {

SpinorField apply_dirac(const CliffordRepd& rep, const SpinorField& u, bool include_mass);

/// D_j u = -i du/dx_j.
SpinorField momentum(const SpinorField& u, int j);

SpinorField spectral_laplacian(const SpinorField& u);

/// Vector potential A = grad(phi), gradient taken spectrally.
struct MagneticPotential {
  ScalarField phi;
  std::vector<Eigen::VectorXd> A;
};

MagneticPotential make_magnetic_potential(const ScalarField& phi);

/// max_{j<k} max |d_j A_k - d_k A_j| (spectral derivatives).
double curl_defect(const MagneticPotential& pot);

SpinorField apply_magnetic_dirac(const CliffordRepd& rep, const SpinorField& u, const MagneticPotential& pot,
                                 bool include_mass = true);

/// Pointwise multiplication by exp(i phi).
SpinorField gauge_transform(const SpinorField& u, const ScalarField& phi);

/// || H(phi u) - phi H u + i sum_j alpha_j (d_j phi) u ||  (quadrature L2 norm).
double apply_commutator_identity(const CliffordRepd& rep, const SpinorField& u, const ScalarField& phi);

/// sum_p w(|x_p|)^2 |u_p|^2 dV over the support annulus (all points if unset).
double weighted_norm_sq(const SpinorField& u, const RadialWeightd& w);

double norm_sq(const SpinorField& u);
double norm(const SpinorField& u);
/// <u, v> = sum_p u_p^* v_p dV.
Complex inner(const SpinorField& u, const SpinorField& v);

struct FreeDirac {
  bool include_mass = false;
};

struct MagneticDirac {
  std::shared_ptr<const MagneticPotential> potential;
  bool include_mass = false;
};

using DiracOperator = std::variant<FreeDirac, MagneticDirac>;

SpinorField apply(const CliffordRepd& rep, const DiracOperator& op, const SpinorField& u);

/// "H0", "H", "H0_A" or "H_A".
std::string describe(const DiracOperator& op);

}  // namespace hcdirac

#endif  // HCDIRAC_DIRAC_HPP
