#pragma once
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "thinshield/functionals.hpp"
#include "thinshield/geometry.hpp"
#include "thinshield/optimizer.hpp"

#include <json.hpp>

namespace thinshield {

// One row of the thin-cookie study at fixed perimeter: the mass sits on the
// flat (H = 0) faces, and the excess over the zero-order bound shrinks with
// the edge radius r. G_opt carries the optimizer value when the cookie is in
// the first-order regime, NaN otherwise.
struct CookieSweepRow {
  double r = 0.0;
  double R = 0.0;
  double G_eps = 0.0;
  double gap = 0.0;
  double G_opt = 0.0;
  std::string regime;
};
std::vector<CookieSweepRow> cookie_sweep(double P_target, const PhysicsParams& params,
                                         std::span<const double> r_list, std::size_t N = 4096);

// Optimal energy of the shape against the circle of equal perimeter. The
// inequality is only claimed under the perimeter hypotheses P >= 3*pi*eps/beta
// or P <= pi*eps/beta.
struct BallCompareReport {
  double G_shape = 0.0;
  double G_ball = 0.0;
  std::string hypothesis_status;
  bool hypothesis_met = false;
  bool satisfied = false;
  bool comparison_done = false;
  std::string detail;
};
BallCompareReport ball_compare(const BoundaryMesh& mesh, const PhysicsParams& params);

struct ProfilePoint {
  double H = 0.0;
  double mu = 0.0;
};
// (H, mu) pairs of the optimal layer sorted by curvature, with the count of
// active pairs violating "smaller curvature gets more insulator".
struct ConcentrationProfile {
  std::vector<ProfilePoint> points;
  std::size_t violations = 0;
  bool anti_monotone = false;
  OptimalLayer layer;
};
ConcentrationProfile concentration_profile(const BoundaryMesh& mesh, const PhysicsParams& params);

void write_cookie_sweep_csv(std::span<const CookieSweepRow> rows, std::ostream& os);
nlohmann::json cookie_sweep_json(std::span<const CookieSweepRow> rows);
nlohmann::json ball_compare_json(const BallCompareReport& rep);
void write_profile_csv(const ConcentrationProfile& profile, std::ostream& os);

}  // namespace thinshield
