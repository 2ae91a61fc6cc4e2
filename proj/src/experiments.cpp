#include "thinshield/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>

#include "thinshield/numerics.hpp"

namespace thinshield {

using std::numbers::pi;

std::vector<CookieSweepRow> cookie_sweep(double P_target, const PhysicsParams& params,
                                         std::span<const double> r_list, std::size_t N) {
  params.validate();
  if (r_list.empty()) throw std::invalid_argument("cookie_sweep: empty r list");
  for (std::size_t i = 1; i < r_list.size(); ++i)
    if (!(r_list[i] < r_list[i - 1]))
      throw std::invalid_argument("cookie_sweep: r list must be strictly decreasing");

  const double baseline =
      params.beta * P_target * P_target / (P_target + params.beta * params.mass);
  std::vector<CookieSweepRow> rows;
  rows.reserve(r_list.size());
  for (double r : r_list) {
    CookieSweepRow row;
    row.r = r;
    row.R = solve_cookie_R(P_target, r, 2);
    const BoundaryMesh mesh = cookie_boundary({r, row.R, 2}, N);

    // The theorem's construction: all the mass on the flat faces, none on the
    // rounded edge.
    std::vector<double> flat_w;
    for (const auto& s : mesh.samples)
      if (s.H == 0.0) flat_w.push_back(s.weight);
    const double flat_measure = num::pairwise_sum(flat_w);
    std::vector<double> values(mesh.size(), 0.0);
    for (std::size_t i = 0; i < mesh.size(); ++i)
      if (mesh.samples[i].H == 0.0) values[i] = params.mass / flat_measure;
    const ThicknessField h = make_field(mesh, std::move(values));

    row.G_eps = eval_Geps(mesh, h, params.beta, params.eps);
    row.gap = row.G_eps - baseline;
    row.G_opt = std::numeric_limits<double>::quiet_NaN();
    try {
      const OptimalLayer opt = optimize(mesh, params);
      row.G_opt = opt.value;
      row.regime = regime_name(opt.regime);
    } catch (const RegimeError&) {
      row.regime = "outside-theory";
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BallCompareReport ball_compare(const BoundaryMesh& mesh, const PhysicsParams& params) {
  params.validate();
  if (mesh.dim != 2) throw std::invalid_argument("ball_compare: planar meshes only");
  BallCompareReport rep;
  const double P = mesh.perimeter();
  const double ratio = pi * params.eps / params.beta;
  if (P >= 3.0 * ratio) {
    rep.hypothesis_met = true;
    rep.hypothesis_status = "P >= 3*pi*eps/beta";
  } else if (P <= ratio) {
    rep.hypothesis_met = true;
    rep.hypothesis_status = "P <= pi*eps/beta";
  } else {
    rep.hypothesis_status = "not met";
  }

  const BoundaryMesh ball = make_circle(P / (2.0 * pi), mesh.size());
  try {
    const OptimalLayer shape_opt = optimize(mesh, params);
    const OptimalLayer ball_opt = optimize(ball, params);
    rep.G_shape = shape_opt.value;
    rep.G_ball = ball_opt.value;
    rep.comparison_done = true;
    rep.satisfied = rep.G_shape <= rep.G_ball + 1e-10;
    rep.detail = std::string("shape ") + regime_name(shape_opt.regime) + ", ball " +
                 regime_name(ball_opt.regime);
  } catch (const RegimeError& e) {
    rep.comparison_done = false;
    rep.satisfied = false;
    rep.detail = std::string("comparison skipped: ") + e.what();
  }
  return rep;
}

ConcentrationProfile concentration_profile(const BoundaryMesh& mesh, const PhysicsParams& params) {
  ConcentrationProfile prof;
  prof.layer = optimize(mesh, params);
  prof.points.reserve(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i)
    prof.points.push_back({mesh.samples[i].H, prof.layer.mu.values[i]});
  std::sort(prof.points.begin(), prof.points.end(),
            [](const ProfilePoint& a, const ProfilePoint& b) { return a.H < b.H; });

  // mu must strictly decrease across strictly increasing H on the active set.
  // Curvatures of symmetric samples agree only to rounding, so gaps below
  // 1e-12 relative are ties; the scan keeps the running minimum of mu over
  // all clusters of strictly smaller H.
  const auto tied = [](double a, double b) {
    return b - a <= 1e-12 * std::max({1.0, std::abs(a), std::abs(b)});
  };
  double min_mu = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  while (i < prof.points.size()) {
    std::size_t j = i;
    double cluster_min = std::numeric_limits<double>::infinity();
    while (j < prof.points.size() && tied(prof.points[i].H, prof.points[j].H)) {
      if (prof.points[j].mu > 0.0) {
        if (prof.points[j].mu >= min_mu) ++prof.violations;
        cluster_min = std::min(cluster_min, prof.points[j].mu);
      }
      ++j;
    }
    min_mu = std::min(min_mu, cluster_min);
    i = j;
  }
  prof.anti_monotone = prof.violations == 0;
  return prof;
}

void write_cookie_sweep_csv(std::span<const CookieSweepRow> rows, std::ostream& os) {
  char buf[256];
  os << "r,R,G_eps,gap,G_opt,regime\n";
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g,", row.r, row.R, row.G_eps,
                  row.gap, row.G_opt);
    os << buf << row.regime << "\n";
  }
}

nlohmann::json cookie_sweep_json(std::span<const CookieSweepRow> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& row : rows) {
    nlohmann::json j;
    j["r"] = row.r;
    j["R"] = row.R;
    j["G_eps"] = row.G_eps;
    j["gap"] = row.gap;
    if (std::isnan(row.G_opt))
      j["G_opt"] = nullptr;
    else
      j["G_opt"] = row.G_opt;
    j["regime"] = row.regime;
    arr.push_back(std::move(j));
  }
  return arr;
}

nlohmann::json ball_compare_json(const BallCompareReport& rep) {
  nlohmann::json j;
  j["G_shape"] = rep.G_shape;
  j["G_ball"] = rep.G_ball;
  j["hypothesis_status"] = rep.hypothesis_status;
  j["hypothesis_met"] = rep.hypothesis_met;
  j["satisfied"] = rep.satisfied;
  j["comparison_done"] = rep.comparison_done;
  j["detail"] = rep.detail;
  return j;
}

void write_profile_csv(const ConcentrationProfile& profile, std::ostream& os) {
  char buf[128];
  os << "H,mu\n";
  for (const auto& p : profile.points) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.H, p.mu);
    os << buf;
  }
}

}  // namespace thinshield
