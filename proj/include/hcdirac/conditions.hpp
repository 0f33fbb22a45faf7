// Sufficient positivity conditions on weight pairs, evaluated on samples.
#ifndef HCDIRAC_CONDITIONS_HPP
#define HCDIRAC_CONDITIONS_HPP

#include "hcdirac/clifford.hpp"
#include "hcdirac/weights.hpp"

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace hcdirac {

/// Violated hypothesis or invalid input parameters (CLI exit code 2).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Criterion { matrix_M, M0_spectrum_d, radial_c, gamma };

const char* to_string(Criterion c);

struct ConditionResult {
  Criterion criterion = Criterion::matrix_M;
  double r_lo = 0;
  double r_hi = 0;
  std::size_t samples = 0;
  double value = 0;
  bool satisfied = false;  // value > 0
};

/// Weight on R^n given by its value and gradient; need not be radial.
struct FieldWeight {
  std::string label;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
};

FieldWeight as_field_weight(const RadialWeightd& w);

/// +-e_j for every axis followed by `random_count` seeded uniform directions.
std::vector<UnitDirectiond> sample_directions(int n, int random_count, std::uint64_t seed);

/// Least eigenvalue over samples of the Hermitian part of
///   M(r, w) = r^{-1} ( -i alpha_hat beta [if include_mass] + alpha_hat d(B(rw) r)/dr ) b^2 a^{-2}
/// with B = b^{-1} sum_j alpha_j d_j b. Radial pairs use the analytic
/// reduction alpha_hat d(Br)/dr = (r b'/b)'.
ConditionResult matrix_condition_M(const CliffordRepd& rep, const WeightPaird& pair, const std::vector<double>& radii,
                                   const std::vector<UnitDirectiond>& directions, bool include_mass);

/// General weights: d(B(rw) r)/dr by centered differences along each ray with
/// step fd_step * max(1, r).
ConditionResult matrix_condition_M(const CliffordRepd& rep, const FieldWeight& a, const FieldWeight& b,
                                   const std::vector<double>& radii, const std::vector<UnitDirectiond>& directions,
                                   bool include_mass, double fd_step = 1e-5);

/// inf over samples of lambda_min(M0) - 1 = (r b'/b)' - 1 for a radial b.
/// Requires the half-power pairing b = r^{1/2} a.
ConditionResult d_constant(const CliffordRepd& rep, const WeightPaird& pair, const std::vector<double>& radii);

ConditionResult radial_c_condition(const RadialWeightd& b, const std::vector<double>& radii);

ConditionResult gamma_condition_result(const RadialFunction<double>& phi, const std::vector<double>& radii);

/// Constant for the pure power pair a = r^{tau/2}, b = r^{(tau+2)/2}.
struct PowerWeightCase {
  double tau = 0;
  int n = 0;
  double nu = 0;       // (tau + n)/2
  long k_star = 0;     // minimizer of |tau + n - 2k|, smaller k on ties
  double d = 0;        // |tau + n - 2 k_star|
  double c = 0;        // d^2 / 4
  bool degenerate = false;  // tau = 2k - n for some integer k
  bool tie = false;         // two minimizing k
};

PowerWeightCase thm5_constant(double tau, int n);

}  // namespace hcdirac

#endif  // HCDIRAC_CONDITIONS_HPP
