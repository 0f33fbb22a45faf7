#include "hcdirac/conditions.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace hcdirac {

namespace {

ConditionResult finish(Criterion criterion, const std::vector<double>& radii, std::size_t samples, double value) {
  ConditionResult out;
  out.criterion = criterion;
  out.r_lo = *std::min_element(radii.begin(), radii.end());
  out.r_hi = *std::max_element(radii.begin(), radii.end());
  out.samples = samples;
  out.value = value;
  out.satisfied = value > 0;
  return out;
}

void require_samples(const std::vector<double>& radii, const char* where) {
  if (radii.empty()) throw std::invalid_argument(std::string(where) + ": empty sample list");
  for (double r : radii)
    if (!(r > 0)) throw std::invalid_argument(std::string(where) + ": radii must be positive");
}

double least_eigenvalue(const CMatrix<double>& m) {
  const CMatrix<double> herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMatrix<double>> solver(herm, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

// sum_j alpha_j g_j / b
CMatrix<double> b_matrix(const CliffordRepd& rep, const FieldWeight& b, const Eigen::VectorXd& x) {
  const double bv = b.value(x);
  const Eigen::VectorXd g = b.gradient(x);
  if (!(bv > 0) || !std::isfinite(bv)) throw std::domain_error("matrix_condition_M: weight b not positive at sample");
  if (!g.allFinite()) throw std::domain_error("matrix_condition_M: non-finite gradient sample");
  CMatrix<double> out = CMatrix<double>::Zero(rep.m, rep.m);
  for (int j = 0; j < rep.n; ++j) out += (g[j] / bv) * rep.alphas[j];
  return out;
}

}  // namespace

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::matrix_M: return "matrix_M";
    case Criterion::M0_spectrum_d: return "M0_spectrum_d";
    case Criterion::radial_c: return "radial_c";
    case Criterion::gamma: return "gamma";
  }
  return "unknown";
}

FieldWeight as_field_weight(const RadialWeightd& w) {
  return {w.label(), [w](const Eigen::VectorXd& x) { return w.eval(x.norm()); },
          [w](const Eigen::VectorXd& x) -> Eigen::VectorXd {
            const double r = x.norm();
            return w.d1(r) * x / r;
          }};
}

std::vector<UnitDirectiond> sample_directions(int n, int random_count, std::uint64_t seed) {
  std::vector<UnitDirectiond> out;
  for (int j = 0; j < n; ++j)
    for (double s : {1.0, -1.0}) {
      Eigen::VectorXd e = Eigen::VectorXd::Zero(n);
      e[j] = s;
      out.emplace_back(e);
    }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int i = 0; i < random_count; ++i) {
    Eigen::VectorXd v(n);
    do {
      for (int j = 0; j < n; ++j) v[j] = normal(rng);
    } while (v.norm() < 1e-8);
    out.push_back(UnitDirectiond::from_point(v));
  }
  return out;
}

ConditionResult matrix_condition_M(const CliffordRepd& rep, const WeightPaird& pair, const std::vector<double>& radii,
                                   const std::vector<UnitDirectiond>& directions, bool include_mass) {
  require_samples(radii, "matrix_condition_M");
  if (directions.empty()) throw std::invalid_argument("matrix_condition_M: no directions");
  const auto id = CMatrix<double>::Identity(rep.m, rep.m);
  double best = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    const double m0 = radial_M0(pair.b, r);
    const double scale = std::exp(2.0 * pair.log_b_over_a(r)) / r;
    if (!std::isfinite(m0) || !std::isfinite(scale))
      throw std::domain_error("matrix_condition_M: non-finite sample at r = " + std::to_string(r));
    for (const auto& dir : directions) {
      CMatrix<double> inner = m0 * id;
      if (include_mass) inner += minus_i_alphahat_beta(rep, dir);
      best = std::min(best, least_eigenvalue(scale * inner));
    }
  }
  return finish(Criterion::matrix_M, radii, radii.size() * directions.size(), best);
}

ConditionResult matrix_condition_M(const CliffordRepd& rep, const FieldWeight& a, const FieldWeight& b,
                                   const std::vector<double>& radii, const std::vector<UnitDirectiond>& directions,
                                   bool include_mass, double fd_step) {
  require_samples(radii, "matrix_condition_M");
  if (directions.empty()) throw std::invalid_argument("matrix_condition_M: no directions");
  double best = std::numeric_limits<double>::infinity();
  for (double r : radii) {
    const double h = fd_step * std::max(1.0, r);
    if (r - h <= 0) throw std::domain_error("matrix_condition_M: finite-difference step crosses the origin");
    for (const auto& dir : directions) {
      const Eigen::VectorXd& w = dir.vector();
      const Eigen::VectorXd x = r * w;
      const CMatrix<double> d_Br =
          (b_matrix(rep, b, (r + h) * w) * (r + h) - b_matrix(rep, b, (r - h) * w) * (r - h)) / (2 * h);
      CMatrix<double> inner = alpha_hat(rep, dir) * d_Br;
      if (include_mass) inner += minus_i_alphahat_beta(rep, dir);
      const double av = a.value(x), bv = b.value(x);
      if (!(av > 0) || !(bv > 0)) throw std::domain_error("matrix_condition_M: nonpositive weight at sample");
      const double scale = (bv * bv) / (av * av) / r;
      best = std::min(best, least_eigenvalue(scale * inner));
    }
  }
  return finish(Criterion::matrix_M, radii, radii.size() * directions.size(), best);
}

ConditionResult d_constant(const CliffordRepd&, const WeightPaird& pair, const std::vector<double>& radii) {
  if (pair.pairing != Pairing::half_power)
    throw PreconditionError("d_constant: weight pair must satisfy b = r^{1/2} a (half_power pairing)");
  require_samples(radii, "d_constant");
  double best = std::numeric_limits<double>::infinity();
  for (double r : radii) best = std::min(best, radial_M0(pair.b, r) - 1.0);
  return finish(Criterion::M0_spectrum_d, radii, radii.size(), best);
}

ConditionResult radial_c_condition(const RadialWeightd& b, const std::vector<double>& radii) {
  require_samples(radii, "radial_condition_c");
  return finish(Criterion::radial_c, radii, radii.size(), radial_condition_c(b, radii));
}

ConditionResult gamma_condition_result(const RadialFunction<double>& phi, const std::vector<double>& radii) {
  require_samples(radii, "gamma_condition");
  return finish(Criterion::gamma, radii, radii.size(), gamma_condition(phi, radii));
}

PowerWeightCase thm5_constant(double tau, int n) {
  PowerWeightCase out;
  out.tau = tau;
  out.n = n;
  out.nu = (tau + n) / 2.0;
  const long lo = static_cast<long>(std::floor(out.nu));
  const long hi = static_cast<long>(std::ceil(out.nu));
  const double d_lo = std::abs(tau + n - 2.0 * lo);
  const double d_hi = std::abs(tau + n - 2.0 * hi);
  if (d_hi < d_lo) {
    out.k_star = hi;
    out.d = d_hi;
  } else {
    out.k_star = lo;
    out.d = d_lo;
    out.tie = lo != hi && d_hi == d_lo;
  }
  out.c = out.d * out.d / 4.0;
  out.degenerate = out.d <= 1e-12 * std::max(1.0, std::abs(tau) + n);
  return out;
}

}  // namespace hcdirac
