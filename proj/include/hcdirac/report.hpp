// JSON and CSV emission. Key order is fixed, so identical inputs give
// byte-identical output.
//
// Inequality report keys, in order:
//   inequality_id, params, phi, operator, paper_constant (null when empirical),
//   observed_min_quotient, observed_median_quotient, num_trials, seeds, grid
//   {n, points_per_axis, box_halfwidth}, annulus {r_min, r_max}, slack,
//   verdict, resolution_delta, power_case, certificate, magnetic, note.
// Trial CSV columns: trial,seed,quotient (plus reference_quotient,phase_seed
// for gauge runs). Radial CSV columns: r,M,M0,log_b_over_a.
#ifndef HCDIRAC_REPORT_HPP
#define HCDIRAC_REPORT_HPP

#include "hcdirac/conditions.hpp"
#include "hcdirac/spectral_checks.hpp"
#include "hcdirac/verifier.hpp"

#include <json.hpp>

#include <iosfwd>
#include <vector>

namespace hcdirac {

using Json = nlohmann::ordered_json;

Json to_json(const GridSpec& g);
Json to_json(const ConditionResult& c);
Json to_json(const PowerWeightCase& p);
Json to_json(const InequalityReport& r);
Json to_json(const AngularReport& r);
Json to_json(const FourierCheck& f);

/// dump(2) plus trailing newline.
std::string render(const Json& j);

void write_trials_csv(std::ostream& os, const InequalityReport& r);
void write_radial_csv(std::ostream& os, const WeightPaird& pair, const std::vector<double>& radii);
void write_angular_csv(std::ostream& os, const AngularReport& r);

}  // namespace hcdirac

#endif  // HCDIRAC_REPORT_HPP
