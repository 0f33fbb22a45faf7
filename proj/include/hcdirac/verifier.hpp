// Measured Rayleigh quotients against predicted constants for the weight
// catalogue, and the gauge-covariance check for magnetic operators.
#ifndef HCDIRAC_VERIFIER_HPP
#define HCDIRAC_VERIFIER_HPP

#include "hcdirac/conditions.hpp"
#include "hcdirac/dirac.hpp"
#include "hcdirac/field.hpp"
#include "hcdirac/weights.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace hcdirac {

/// ||b Op u||^2 / ||a u||^2 over the support of u. Throws on a zero denominator.
double rayleigh_quotient(const CliffordRepd& rep, const WeightPaird& pair, const SpinorField& u,
                         const DiracOperator& op);

/// Catalogue selection. Unused parameters are ignored; required ones missing
/// raise PreconditionError.
struct CaseRequest {
  std::string id;
  std::optional<double> tau;
  std::optional<double> alpha;
  std::string phi = "linear";  // linear | quadratic | log | power:<p>
  int n = 3;
  Annulus annulus;
  bool massive = false;
};

struct InequalityCase {
  std::string id;
  ParamMap<double> params;
  std::string phi_label;  // empty unless the case is parametrized by a phase
  WeightPaird pair{catalogue::unit_weight(), catalogue::unit_weight(), Pairing::general, std::nullopt};
  bool include_mass = false;
  /// Constant the inequality predicts; unset when the run is empirical.
  std::optional<double> predicted_constant;
  std::optional<PowerWeightCase> power;
  /// Certificate evaluated on the annulus (gamma for the phase family).
  std::optional<ConditionResult> certificate;
};

/// Ids: example_4.1, agmon_4.2, hardy_4.3, example_4.2, treve_4.6, log_4.8,
/// thm3.1, thm5.1.
const std::vector<std::string>& catalogue_ids();

InequalityCase make_case(const CaseRequest& request);

struct VerifyOptions {
  GridSpec grid;
  Annulus annulus;
  int trials = 25;
  std::uint64_t seed = 7;
  double slack = 0.02;
  bool resolution_check = true;
};

/// Seed of trial i, derived from the base seed by splitmix64.
std::uint64_t trial_seed(std::uint64_t base, int i);

struct TrialResult {
  std::uint64_t seed = 0;
  double quotient = 0;
};

/// Extra fields of a gauge-covariance run.
struct MagneticSummary {
  std::vector<double> reference_quotients;  // quotient_H(u) per trial
  std::vector<std::uint64_t> phase_seeds;
  double max_relative_deviation = 0;
  double deviation_tolerance = 1e-8;
  double max_boundary_ratio = 0;
  double max_phase_tail = 0;
  std::string reference_verdict;
  bool verdicts_match = false;
};

struct InequalityReport {
  std::string inequality_id;
  ParamMap<double> params;
  std::string phi_label;
  std::string op;
  std::optional<double> predicted_constant;
  double observed_min_quotient = 0;
  double observed_median_quotient = 0;
  int num_trials = 0;
  GridSpec grid;
  Annulus annulus;
  std::vector<TrialResult> trials;
  double slack = 0;
  std::string verdict;  // pass | fail | empirical
  /// |q(2N) - q(N)| / q(N) for the minimizing trial.
  std::optional<double> resolution_delta;
  std::optional<PowerWeightCase> power;
  std::optional<ConditionResult> certificate;
  std::optional<MagneticSummary> magnetic;
};

/// Verdict rule: pass iff observed >= constant (1 - slack); empirical when no
/// constant is predicted.
std::string verdict_for(std::optional<double> constant, double observed, double slack);

InequalityReport verify_inequality(const CliffordRepd& rep, const InequalityCase& c, const VerifyOptions& opt);

/// Gauge phase for trial i (given its seed).
using PhaseFactory = std::function<ScalarField(const GridPtr&, std::uint64_t)>;

PhaseFactory gaussian_phases();
PhaseFactory zero_phase();

/// For each trial u and phase phi: v = exp(i phi) u, compares quotient_{H_A}(v)
/// with quotient_H(u) and both verdicts. H_A carries the case's mass setting.
/// Throws PreconditionError when phi is not resolved on the grid.
InequalityReport magnetic_reduction_check(const CliffordRepd& rep, const InequalityCase& c, const VerifyOptions& opt,
                                          const PhaseFactory& phases);

}  // namespace hcdirac

#endif  // HCDIRAC_VERIFIER_HPP
