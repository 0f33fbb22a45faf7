// Radial weight functions and the scalar positivity criteria built from them.
//
// A RadialWeight is a positive C^2 function w(r) = exp(l(r)). It is stored
// through its log-profile (l, l', l'') so that quantities like w'/w and
// (r w'/w)' are evaluated without cancellation, even where w itself would
// overflow. Values and plain derivatives are recovered on demand.
#ifndef HCDIRAC_WEIGHTS_HPP
#define HCDIRAC_WEIGHTS_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hcdirac {

template <typename Real>
struct RadialFunction {
  std::function<Real(Real)> value;
  std::function<Real(Real)> d1;
  std::function<Real(Real)> d2;
};

template <typename Real>
using ParamMap = std::map<std::string, Real>;

template <typename Real>
class RadialWeight {
 public:
  /// Builds w = exp(l) from the log-profile l and its two derivatives.
  static RadialWeight from_log(std::string label, ParamMap<Real> params, RadialFunction<Real> log_profile) {
    return RadialWeight(std::move(label), std::move(params), std::move(log_profile));
  }

  /// Builds a weight from w, w', w''. The log-profile is derived pointwise.
  static RadialWeight from_values(std::string label, ParamMap<Real> params, RadialFunction<Real> w) {
    auto checked = [label, value = w.value](Real r) {
      const Real v = value(r);
      if (!(v > Real(0)))
        throw std::domain_error("weight '" + label + "' is not positive at r = " + std::to_string(double(r)));
      return v;
    };
    RadialFunction<Real> lp;
    lp.value = [checked](Real r) { return std::log(checked(r)); };
    lp.d1 = [checked, d1 = w.d1](Real r) { return d1(r) / checked(r); };
    lp.d2 = [checked, d1 = w.d1, d2 = w.d2](Real r) {
      const Real v = checked(r);
      const Real g = d1(r) / v;
      return d2(r) / v - g * g;
    };
    return RadialWeight(std::move(label), std::move(params), std::move(lp));
  }

  Real eval(Real r) const { return std::exp(log_.value(r)); }
  Real d1(Real r) const { return log_.d1(r) * eval(r); }
  Real d2(Real r) const {
    const Real g = log_.d1(r);
    return (log_.d2(r) + g * g) * eval(r);
  }

  Real log_value(Real r) const { return log_.value(r); }
  /// w'/w
  Real log_d1(Real r) const { return log_.d1(r); }
  /// (w'/w)'
  Real log_d2(Real r) const { return log_.d2(r); }

  const std::string& label() const { return label_; }
  const ParamMap<Real>& params() const { return params_; }
  const RadialFunction<Real>& log_profile() const { return log_; }

 private:
  RadialWeight(std::string label, ParamMap<Real> params, RadialFunction<Real> lp)
      : label_(std::move(label)), params_(std::move(params)), log_(std::move(lp)) {}

  std::string label_;
  ParamMap<Real> params_;
  RadialFunction<Real> log_;
};

using RadialWeightd = RadialWeight<double>;

enum class Pairing { general, half_power };

inline const char* to_string(Pairing p) { return p == Pairing::half_power ? "half_power" : "general"; }

/// Weights (a, b) of an inequality c*||a u||^2 <= ||b H u||^2.
/// half_power asserts b = r^{1/2} a.
template <typename Real>
struct WeightPair {
  RadialWeight<Real> a;
  RadialWeight<Real> b;
  Pairing pairing = Pairing::general;
  /// Closed form of log(b/a) when known; avoids cancellation between two
  /// large log-profiles.
  std::optional<RadialFunction<Real>> log_ratio;

  Real log_b_over_a(Real r) const { return log_ratio ? log_ratio->value(r) : b.log_value(r) - a.log_value(r); }
};

using WeightPaird = WeightPair<double>;

/// Worst |b - r^{1/2} a| / b over the samples.
template <typename Real>
Real half_power_defect(const WeightPair<Real>& pair, const std::vector<Real>& r_samples) {
  Real worst = 0;
  for (Real r : r_samples) {
    const Real rel = std::expm1(pair.a.log_value(r) + Real(0.5) * std::log(r) - pair.b.log_value(r));
    worst = std::max(worst, std::abs(rel));
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Sample grids

template <typename Real = double>
std::vector<Real> log_spaced(Real lo, Real hi, int count) {
  if (!(lo > 0) || !(hi > lo) || count < 2)
    throw std::invalid_argument("log_spaced: need 0 < lo < hi and count >= 2");
  std::vector<Real> out(static_cast<std::size_t>(count));
  const Real llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < count; ++i) out[i] = std::exp(llo + (lhi - llo) * Real(i) / Real(count - 1));
  out.front() = lo;
  out.back() = hi;
  return out;
}

template <typename Real = double>
std::vector<Real> log_spaced_per_decade(Real lo, Real hi, int per_decade) {
  if (per_decade < 1) throw std::invalid_argument("log_spaced_per_decade: per_decade must be >= 1");
  if (!(lo > 0) || !(hi > lo)) throw std::invalid_argument("log_spaced_per_decade: need 0 < lo < hi");
  const Real decades = std::log10(hi / lo);
  const int count = std::max(2, static_cast<int>(std::ceil(decades * per_decade)) + 1);
  return log_spaced<Real>(lo, hi, count);
}

// ---------------------------------------------------------------------------
// Scalar radial reductions

namespace detail {
template <typename Real>
void require_positive_radius(Real r, const char* where) {
  if (!(r > 0)) throw std::domain_error(std::string(where) + ": radius must be positive");
}

template <typename Real>
Real checked_log_d1(const RadialWeight<Real>& w, Real r, const char* where) {
  require_positive_radius(r, where);
  if (!std::isfinite(w.log_value(r)))
    throw std::domain_error(std::string(where) + ": weight '" + w.label() + "' is not positive/finite at r = " +
                            std::to_string(double(r)));
  return w.log_d1(r);
}
}  // namespace detail

/// b'/b: the scalar coefficient of alpha_hat in B(r) for radial b.
template <typename Real>
Real radial_B_coefficient(const RadialWeight<Real>& b, Real r) {
  return detail::checked_log_d1(b, r, "radial_B_coefficient");
}

/// (r b'/b)'
template <typename Real>
Real radial_M0(const RadialWeight<Real>& b, Real r) {
  const Real g = detail::checked_log_d1(b, r, "radial_M0");
  return g + r * b.log_d2(r);
}

/// r^{-1} (r b'/b)' b^2 a^{-2}
template <typename Real>
Real radial_M(const WeightPair<Real>& pair, Real r) {
  const Real m0 = radial_M0(pair.b, r);
  if (!std::isfinite(pair.a.log_value(r)))
    throw std::domain_error("radial_M: weight '" + pair.a.label() + "' is not positive/finite at r = " +
                            std::to_string(double(r)));
  return m0 / r * std::exp(Real(2) * pair.log_b_over_a(r));
}

/// min over samples of (r b'/b)' - 1.
template <typename Real>
Real radial_condition_c(const RadialWeight<Real>& b, const std::vector<Real>& r_samples) {
  if (r_samples.empty()) throw std::invalid_argument("radial_condition_c: empty sample list");
  Real best = std::numeric_limits<Real>::infinity();
  for (Real r : r_samples) best = std::min(best, radial_M0(b, r) - Real(1));
  return best;
}

/// min over samples of phi''(r) r + phi'(r).
template <typename Real>
Real gamma_condition(const RadialFunction<Real>& phi, const std::vector<Real>& r_samples) {
  if (r_samples.empty()) throw std::invalid_argument("gamma_condition: empty sample list");
  Real best = std::numeric_limits<Real>::infinity();
  for (Real r : r_samples) {
    detail::require_positive_radius(r, "gamma_condition");
    best = std::min(best, phi.d2(r) * r + phi.d1(r));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Finite-difference consistency gate for supplied derivatives.
//
// Checks l' against a centered difference of l, and l'' against a centered
// difference of l', with step h = 1e-5 max(1, r). Errors are relative to
// max(|analytic|, 1/r) for l' and max(|analytic|, 1/r^2) for l'', the natural
// scales of log-derivatives (l = s log r has l' = s/r).

/// Smallest radius the gate samples: the centered difference with this step
/// carries truncation error (h/r)^2, which must stay well below tolerance.
inline constexpr double kDerivativeGateMinRadius = 0.1;

template <typename Real>
struct DerivativeCheck {
  Real worst_d1 = 0;
  Real worst_d2 = 0;
  Real worst_r_d1 = 0;
  Real worst_r_d2 = 0;

  bool passes(Real tol = Real(1e-6)) const { return worst_d1 <= tol && worst_d2 <= tol; }
};

template <typename Real>
DerivativeCheck<Real> check_derivatives(const RadialFunction<Real>& f, const std::vector<Real>& r_samples) {
  DerivativeCheck<Real> out;
  for (Real r : r_samples) {
    const Real h = Real(1e-5) * std::max(Real(1), r);
    if (r - h <= 0) continue;
    const Real fd1 = (f.value(r + h) - f.value(r - h)) / (2 * h);
    const Real fd2 = (f.d1(r + h) - f.d1(r - h)) / (2 * h);
    const Real a1 = f.d1(r), a2 = f.d2(r);
    const Real e1 = std::abs(fd1 - a1) / std::max(std::abs(a1), 1 / r);
    const Real e2 = std::abs(fd2 - a2) / std::max(std::abs(a2), 1 / (r * r));
    if (!(e1 <= out.worst_d1)) {
      out.worst_d1 = std::isnan(e1) ? std::numeric_limits<Real>::infinity() : e1;
      out.worst_r_d1 = r;
    }
    if (!(e2 <= out.worst_d2)) {
      out.worst_d2 = std::isnan(e2) ? std::numeric_limits<Real>::infinity() : e2;
      out.worst_r_d2 = r;
    }
  }
  return out;
}

template <typename Real>
DerivativeCheck<Real> check_derivatives(const RadialWeight<Real>& w, const std::vector<Real>& r_samples) {
  return check_derivatives(w.log_profile(), r_samples);
}

// ---------------------------------------------------------------------------
// Catalogue

namespace catalogue {

template <typename Real = double>
RadialFunction<Real> log_power(Real s) {  // log of r^s
  return {[s](Real r) { return s * std::log(r); }, [s](Real r) { return s / r; },
          [s](Real r) { return -s / (r * r); }};
}

template <typename Real = double>
RadialFunction<Real> log_one_plus_r2(Real s) {  // log of (1 + r^2)^s
  return {[s](Real r) { return s * std::log1p(r * r); }, [s](Real r) { return 2 * s * r / (1 + r * r); },
          [s](Real r) {
            const Real q = 1 + r * r;
            return 2 * s * (1 - r * r) / (q * q);
          }};
}

template <typename Real>
RadialFunction<Real> sum(RadialFunction<Real> f, RadialFunction<Real> g) {
  return {[f, g](Real r) { return f.value(r) + g.value(r); }, [f, g](Real r) { return f.d1(r) + g.d1(r); },
          [f, g](Real r) { return f.d2(r) + g.d2(r); }};
}

template <typename Real>
RadialFunction<Real> scaled(RadialFunction<Real> f, Real c) {
  return {[f, c](Real r) { return c * f.value(r); }, [f, c](Real r) { return c * f.d1(r); },
          [f, c](Real r) { return c * f.d2(r); }};
}

// Radial phase functions for the exp(tau phi) family.

template <typename Real = double>
RadialFunction<Real> phi_power(Real p) {
  return {[p](Real r) { return std::pow(r, p); }, [p](Real r) { return p * std::pow(r, p - 1); },
          [p](Real r) { return p * (p - 1) * std::pow(r, p - 2); }};
}

template <typename Real = double>
RadialFunction<Real> phi_linear() {
  return {[](Real r) { return r; }, [](Real) { return Real(1); }, [](Real) { return Real(0); }};
}

template <typename Real = double>
RadialFunction<Real> phi_quadratic() {
  return {[](Real r) { return r * r; }, [](Real r) { return 2 * r; }, [](Real) { return Real(2); }};
}

template <typename Real = double>
RadialFunction<Real> phi_log() {
  return log_power<Real>(Real(1));
}

/// b = (1+r^2)^{tau/2}, a = (1+r^2)^{(tau-2)/2};  M(r) = 2 tau.
template <typename Real = double>
WeightPair<Real> shifted_power_pair(Real tau) {
  ParamMap<Real> p{{"tau", tau}};
  auto b = RadialWeight<Real>::from_log("(1+r^2)^(tau/2)", p, log_one_plus_r2<Real>(tau / 2));
  auto a = RadialWeight<Real>::from_log("(1+r^2)^((tau-2)/2)", p, log_one_plus_r2<Real>((tau - 2) / 2));
  return {a, b, Pairing::general, log_one_plus_r2<Real>(Real(1))};
}

template <typename Real = double>
WeightPair<Real> agmon_pair() {
  return shifted_power_pair<Real>(Real(1));
}

template <typename Real = double>
WeightPair<Real> hardy_pair() {
  return shifted_power_pair<Real>(Real(2));
}

/// b = exp(tau r^alpha / 2), a = r^{(alpha-2)/2} exp(tau r^alpha / 2);  M(r) = tau alpha^2 / 2.
template <typename Real = double>
WeightPair<Real> stretched_exponential_pair(Real tau, Real alpha) {
  if (alpha == 0) throw std::invalid_argument("stretched_exponential_pair: alpha must be nonzero");
  ParamMap<Real> p{{"alpha", alpha}, {"tau", tau}};
  auto expo = scaled(phi_power<Real>(alpha), tau / 2);
  auto b = RadialWeight<Real>::from_log("exp(tau r^alpha/2)", p, expo);
  auto a = RadialWeight<Real>::from_log("r^((alpha-2)/2) exp(tau r^alpha/2)", p,
                                        sum(log_power<Real>((alpha - 2) / 2), expo));
  return {a, b, Pairing::general, log_power<Real>((2 - alpha) / 2)};
}

template <typename Real = double>
WeightPair<Real> treve_pair(Real tau) {
  return stretched_exponential_pair<Real>(tau, Real(2));
}

/// b = exp(tau (log r)^2 / 2), a = r^{-1} b;  M(r) = tau.
template <typename Real = double>
WeightPair<Real> log_gaussian_pair(Real tau) {
  ParamMap<Real> p{{"tau", tau}};
  RadialFunction<Real> lg{[tau](Real r) {
                            const Real l = std::log(r);
                            return tau * l * l / 2;
                          },
                          [tau](Real r) { return tau * std::log(r) / r; },
                          [tau](Real r) { return tau * (1 - std::log(r)) / (r * r); }};
  auto b = RadialWeight<Real>::from_log("exp(tau (log r)^2/2)", p, lg);
  auto a = RadialWeight<Real>::from_log("r^-1 exp(tau (log r)^2/2)", p, sum(log_power<Real>(-1), lg));
  return {a, b, Pairing::general, log_power<Real>(Real(1))};
}

/// b = exp(tau phi), a = r^{-1/2} exp(tau phi); half-power pairing.
template <typename Real = double>
WeightPair<Real> radial_phase_pair(const RadialFunction<Real>& phi, Real tau, const std::string& phi_label) {
  ParamMap<Real> p{{"tau", tau}};
  auto expo = scaled(phi, tau);
  auto b = RadialWeight<Real>::from_log("exp(tau " + phi_label + ")", p, expo);
  auto a = RadialWeight<Real>::from_log("r^-1/2 exp(tau " + phi_label + ")", p,
                                        sum(log_power<Real>(Real(-0.5)), expo));
  return {a, b, Pairing::half_power, log_power<Real>(Real(0.5))};
}

/// a = r^{tau/2}, b = r^{(tau+2)/2}. M vanishes identically.
template <typename Real = double>
WeightPair<Real> pure_power_pair(Real tau) {
  ParamMap<Real> p{{"tau", tau}};
  auto a = RadialWeight<Real>::from_log("r^(tau/2)", p, log_power<Real>(tau / 2));
  auto b = RadialWeight<Real>::from_log("r^((tau+2)/2)", p, log_power<Real>((tau + 2) / 2));
  return {a, b, Pairing::general, log_power<Real>(Real(1))};
}

/// Constant weight 1.
template <typename Real = double>
RadialWeight<Real> unit_weight() {
  return RadialWeight<Real>::from_log("1", {}, log_power<Real>(Real(0)));
}

}  // namespace catalogue
}  // namespace hcdirac

#endif  // HCDIRAC_WEIGHTS_HPP
