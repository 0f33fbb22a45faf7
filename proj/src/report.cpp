#include "hcdirac/report.hpp"

#include <charconv>
#include <ostream>

namespace hcdirac {

namespace {

std::string fmt(double v) {
  char buf[32];
  auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json optional_number(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const GridSpec& g) {
  return Json{{"n", g.n}, {"points_per_axis", g.points_per_axis}, {"box_halfwidth", g.box_halfwidth}};
}

Json to_json(const ConditionResult& c) {
  return Json{{"criterion", to_string(c.criterion)},
              {"sampled_interval", Json::array({c.r_lo, c.r_hi})},
              {"samples", c.samples},
              {"value", c.value},
              {"satisfied", c.satisfied}};
}

Json to_json(const PowerWeightCase& p) {
  return Json{{"tau", p.tau}, {"n", p.n},     {"nu", p.nu},   {"k_star", p.k_star},
              {"d", p.d},     {"c", p.c},     {"tie", p.tie}, {"degenerate", p.degenerate}};
}

Json to_json(const InequalityReport& r) {
  Json j;
  j["inequality_id"] = r.inequality_id;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["phi"] = r.phi_label.empty() ? Json(nullptr) : Json(r.phi_label);
  j["operator"] = r.op;
  j["paper_constant"] = optional_number(r.predicted_constant);
  j["observed_min_quotient"] = r.observed_min_quotient;
  j["observed_median_quotient"] = r.observed_median_quotient;
  j["num_trials"] = r.num_trials;
  Json seeds = Json::array();
  Json quotients = Json::array();
  for (const auto& t : r.trials) {
    seeds.push_back(t.seed);
    quotients.push_back(t.quotient);
  }
  j["seeds"] = seeds;
  j["quotients"] = quotients;
  j["grid"] = to_json(r.grid);
  j["annulus"] = Json{{"r_min", r.annulus.r_min}, {"r_max", r.annulus.r_max}};
  j["slack"] = r.slack;
  j["verdict"] = r.verdict;
  j["resolution_delta"] = optional_number(r.resolution_delta);
  j["power_case"] = r.power ? to_json(*r.power) : Json(nullptr);
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  if (r.magnetic) {
    const auto& m = *r.magnetic;
    j["magnetic"] = Json{{"reference_quotients", m.reference_quotients},
                         {"phase_seeds", m.phase_seeds},
                         {"max_relative_deviation", m.max_relative_deviation},
                         {"deviation_tolerance", m.deviation_tolerance},
                         {"max_boundary_ratio", m.max_boundary_ratio},
                         {"max_phase_tail", m.max_phase_tail},
                         {"reference_verdict", m.reference_verdict},
                         {"verdicts_match", m.verdicts_match}};
  } else {
    j["magnetic"] = nullptr;
  }
  j["note"] = "minimum over a sampled test family; an upper bound on the true infimum";
  return j;
}

Json to_json(const AngularReport& r) {
  Json samples = Json::array();
  for (const auto& s : r.samples)
    samples.push_back(Json{{"l", s.l},
                           {"label", s.label},
                           {"eigenvalue", s.eigenvalue},
                           {"residual_stated", s.residual_stated},
                           {"residual_corrected", s.residual_corrected},
                           {"expectation_stated", s.expectation_stated},
                           {"tail", s.tail}});
  return Json{{"grid", to_json(r.grid)},
              {"envelope_sigma", r.sigma},
              {"worst_residual_stated", r.worst_stated},
              {"worst_residual_corrected", r.worst_corrected},
              {"samples", samples}};
}

Json to_json(const FourierCheck& f) {
  return Json{{"lhs", f.lhs}, {"rhs", f.rhs}, {"norm_sq", f.norm_sq}, {"quotient", f.quotient}, {"tail", f.tail}};
}

std::string render(const Json& j) { return j.dump(2) + "\n"; }

void write_trials_csv(std::ostream& os, const InequalityReport& r) {
  os << "trial,seed,quotient";
  if (r.magnetic) os << ",reference_quotient,phase_seed";
  os << '\n';
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    os << i << ',' << r.trials[i].seed << ',' << fmt(r.trials[i].quotient);
    if (r.magnetic) os << ',' << fmt(r.magnetic->reference_quotients[i]) << ',' << r.magnetic->phase_seeds[i];
    os << '\n';
  }
}

void write_radial_csv(std::ostream& os, const WeightPaird& pair, const std::vector<double>& radii) {
  os << "r,M,M0,log_b_over_a\n";
  for (double r : radii)
    os << fmt(r) << ',' << fmt(radial_M(pair, r)) << ',' << fmt(radial_M0(pair.b, r)) << ','
       << fmt(pair.log_b_over_a(r)) << '\n';
}

void write_angular_csv(std::ostream& os, const AngularReport& r) {
  os << "l,label,eigenvalue,residual_stated,residual_corrected,expectation_stated,tail\n";
  for (const auto& s : r.samples)
    os << s.l << ',' << s.label << ',' << fmt(s.eigenvalue) << ',' << fmt(s.residual_stated) << ','
       << fmt(s.residual_corrected) << ',' << fmt(s.expectation_stated) << ',' << fmt(s.tail) << '\n';
}

}  // namespace hcdirac
