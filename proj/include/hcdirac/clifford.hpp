// Hermitian anticommuting matrix families (Dirac alpha/beta matrices) in
// arbitrary spatial dimension.
//
// Construction: let G_q be an ordered list of 2q+1 mutually anticommuting
// Hermitian involutions of size 2^q.
//
//   G_0 = [ 1 ]
//   G_{q+1} = [ s1 (x) g for g in G_q ] ++ [ s2 (x) I, s3 (x) I ]
//
// where s1, s2, s3 are the Pauli matrices and (x) the Kronecker product with
// the Pauli factor on the left (outer block index). For dimension n we take
// q = ceil(n/2), alphas = first n entries of G_q and beta = last entry.
// For n = 3 this gives alpha_j = [[0, s_j], [s_j, 0]], beta = diag(I, -I).
#ifndef HCDIRAC_CLIFFORD_HPP
#define HCDIRAC_CLIFFORD_HPP

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcdirac {

template <typename Real>
using CMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Real>
using RVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

template <typename Real>
struct CliffordRep {
  int n = 0;  // spatial dimension
  int m = 0;  // spinor dimension
  std::vector<CMatrix<Real>> alphas;
  CMatrix<Real> beta;
};

using CliffordRepd = CliffordRep<double>;

/// Spinor dimension 2^ceil(n/2).
constexpr int spinor_dimension(int n) { return 1 << ((n + 1) / 2); }

namespace detail {

template <typename Real>
CMatrix<Real> pauli(int which) {
  using C = std::complex<Real>;
  CMatrix<Real> s(2, 2);
  switch (which) {
    case 1: s << C(0), C(1), C(1), C(0); break;
    case 2: s << C(0), C(0, -1), C(0, 1), C(0); break;
    case 3: s << C(1), C(0), C(0), C(-1); break;
    default: throw std::logic_error("pauli index must be 1, 2 or 3");
  }
  return s;
}

template <typename Real>
CMatrix<Real> kron(const CMatrix<Real>& a, const CMatrix<Real>& b) {
  CMatrix<Real> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// G_q, see file header.
template <typename Real>
std::vector<CMatrix<Real>> generator_chain(int q) {
  std::vector<CMatrix<Real>> gens{CMatrix<Real>::Identity(1, 1)};
  for (int level = 0; level < q; ++level) {
    const auto dim = gens.front().rows();
    std::vector<CMatrix<Real>> next;
    next.reserve(gens.size() + 2);
    for (const auto& g : gens) next.push_back(kron<Real>(pauli<Real>(1), g));
    next.push_back(kron<Real>(pauli<Real>(2), CMatrix<Real>::Identity(dim, dim)));
    next.push_back(kron<Real>(pauli<Real>(3), CMatrix<Real>::Identity(dim, dim)));
    gens = std::move(next);
  }
  return gens;
}

}  // namespace detail

template <typename Real = double>
CliffordRep<Real> build_clifford(int n) {
  if (n < 1) throw std::invalid_argument("clifford: dimension must be >= 1, got " + std::to_string(n));
  const int q = (n + 1) / 2;
  auto gens = detail::generator_chain<Real>(q);
  CliffordRep<Real> rep;
  rep.n = n;
  rep.m = spinor_dimension(n);
  rep.alphas.assign(gens.begin(), gens.begin() + n);
  rep.beta = gens.back();
  return rep;
}

/// Unit vector omega = x/|x| on S^{n-1}.
template <typename Real>
class UnitDirection {
 public:
  static constexpr Real tolerance = Real(1e-12);

  explicit UnitDirection(RVector<Real> omega) : omega_(std::move(omega)) {
    if (omega_.size() == 0 || std::abs(omega_.norm() - Real(1)) > tolerance)
      throw std::invalid_argument("UnitDirection: vector is not of unit norm");
  }

  /// Normalizes x; x must be nonzero.
  static UnitDirection from_point(const RVector<Real>& x) {
    const Real len = x.norm();
    if (!(len > Real(0))) throw std::invalid_argument("UnitDirection: zero vector has no direction");
    return UnitDirection(RVector<Real>(x / len));
  }

  int dim() const { return static_cast<int>(omega_.size()); }
  const RVector<Real>& vector() const { return omega_; }
  Real operator[](int j) const { return omega_[j]; }

 private:
  RVector<Real> omega_;
};

using UnitDirectiond = UnitDirection<double>;

template <typename Real>
CMatrix<Real> alpha_hat(const CliffordRep<Real>& rep, const UnitDirection<Real>& dir) {
  if (dir.dim() != rep.n)
    throw std::invalid_argument("alpha_hat: direction dimension " + std::to_string(dir.dim()) +
                                " does not match representation dimension " + std::to_string(rep.n));
  CMatrix<Real> out = CMatrix<Real>::Zero(rep.m, rep.m);
  for (int j = 0; j < rep.n; ++j) out += dir[j] * rep.alphas[j];
  return out;
}

/// -i * alpha_hat * beta. Hermitian with spectrum {+1, -1}.
template <typename Real>
CMatrix<Real> minus_i_alphahat_beta(const CliffordRep<Real>& rep, const UnitDirection<Real>& dir) {
  return std::complex<Real>(0, -1) * alpha_hat(rep, dir) * rep.beta;
}

/// Largest entrywise deviation from the anticommutation relations, over all
/// pairs of {alpha_1..alpha_n, beta} (including each element with itself).
template <typename Real>
Real anticommutator_defect(const CliffordRep<Real>& rep) {
  std::vector<const CMatrix<Real>*> gens;
  for (const auto& a : rep.alphas) gens.push_back(&a);
  gens.push_back(&rep.beta);
  const auto id = CMatrix<Real>::Identity(rep.m, rep.m);
  Real worst = 0;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    for (std::size_t k = j; k < gens.size(); ++k) {
      CMatrix<Real> ac = (*gens[j]) * (*gens[k]) + (*gens[k]) * (*gens[j]);
      if (j == k) ac -= Real(2) * id;
      worst = std::max(worst, ac.cwiseAbs().maxCoeff());
    }
  }
  return worst;
}

/// Largest entrywise deviation from Hermiticity over all generators.
template <typename Real>
Real hermiticity_defect(const CliffordRep<Real>& rep) {
  Real worst = (rep.beta - rep.beta.adjoint()).cwiseAbs().maxCoeff();
  for (const auto& a : rep.alphas) worst = std::max(worst, (a - a.adjoint()).cwiseAbs().maxCoeff());
  return worst;
}

}  // namespace hcdirac

#endif  // HCDIRAC_CLIFFORD_HPP
