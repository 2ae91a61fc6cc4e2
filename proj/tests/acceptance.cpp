// Acceptance suite: one line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "test_helpers.hpp"
#include "thinshield/experiments.hpp"
#include "thinshield/functionals.hpp"
#include "thinshield/geometry.hpp"
#include "thinshield/optimizer.hpp"
#include "thinshield/oracle.hpp"

using namespace thinshield;
using std::numbers::pi;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

// 1. Exact Robin annulus expansion in the plane.
Check criterion_1() {
  Check c;
  const double F1 = 0.75 * pi;
  const double F_eps = radial_exact_energy({2, 1.0, 1.0, 1e-3, 1.0});
  const double slope_dev = std::abs((F_eps - pi) / 1e-3 - F1);
  c.require(slope_dev <= 0.01 * F1, "slope deviation " + num(slope_dev));

  std::vector<double> ratios;
  for (double e : {1e-2, 1e-3, 1e-4})
    ratios.push_back((radial_exact_energy({2, 1.0, 1.0, e, 1.0}) - pi - e * F1) / (e * e));
  double lo = std::abs(ratios[0]), hi = std::abs(ratios[0]);
  for (double r : ratios) {
    lo = std::min(lo, std::abs(r));
    hi = std::max(hi, std::abs(r));
  }
  c.require(hi <= 2.0 * lo, "remainder ratios span " + num(lo) + ".." + num(hi));
  c.note("slope_dev=" + num(slope_dev) + " ratio_span=[" + num(lo) + "," + num(hi) + "]");
  return c;
}

// 2. Exact Robin shell expansion in space, fitted coefficients.
Check criterion_2() {
  Check c;
  const std::vector<double> eps{1e-2, 1e-3, 1e-4};
  const auto rep = radial_expansion_check(3, 1.0, 1.0, 1.0, eps);
  c.require(std::abs(rep.fitted_F0 - 2.0 * pi) <= 1e-6,
            "fitted F0 off by " + num(std::abs(rep.fitted_F0 - 2.0 * pi)));
  c.require(std::abs(rep.fitted_F1 - 3.0 * pi) <= 0.01 * 3.0 * pi,
            "fitted F1 off by " + num(std::abs(rep.fitted_F1 - 3.0 * pi)));
  c.note("F0_err=" + num(std::abs(rep.fitted_F0 - 2.0 * pi)) +
         " F1_rel_err=" + num(std::abs(rep.fitted_F1 - 3.0 * pi) / (3.0 * pi)));
  return c;
}

// 3. Fiber oracle consistency on the ellipse over random smooth fields.
Check criterion_3() {
  Check c;
  const auto mesh = make_ellipse(2.0, 1.0, 512);
  const auto fields = test_helpers::random_feasible_fields(mesh, mesh.perimeter(), 20);
  double worst3 = 0.0, worst4 = 0.0;
  for (const auto& h : fields) {
    const double F0 = eval_F0(mesh, h, 1.0);
    const double F1 = eval_F1(mesh, h, 1.0);
    const double d3 = std::abs((fiber_energy(mesh, h, 1.0, 1e-3) - F0) / 1e-3 - F1) / std::abs(F1);
    const double d4 = std::abs((fiber_energy(mesh, h, 1.0, 1e-4) - F0) / 1e-4 - F1) / std::abs(F1);
    worst3 = std::max(worst3, d3);
    worst4 = std::max(worst4, d4);
  }
  c.require(worst3 <= 0.05, "slope deviation " + num(worst3) + " at eps=1e-3");
  c.require(worst4 <= 0.005, "slope deviation " + num(worst4) + " at eps=1e-4");
  c.note("worst_dev=" + num(worst3) + " @1e-3, " + num(worst4) + " @1e-4");
  return c;
}

// 4. Constant-curvature optima are the uniform layer.
Check criterion_4() {
  Check c;
  struct Case {
    BoundaryMesh mesh;
    PhysicsParams params;
  };
  const std::vector<Case> cases = {
      {make_circle(1.0, 256), {1.0, 0.3, 2.0 * pi}},
      {make_circle(2.0, 512), {2.0, 0.5, 3.0}},
      {discretize_sphere(1.0, 1000), {1.0, 0.25, 4.0 * pi * 0.7}},
      {discretize_sphere(0.5, 500), {3.0, 0.2, 1.0}},
  };
  for (const auto& [mesh, params] : cases) {
    if (!(params.eps * mesh.max_H() / params.beta <= 2.0 / 3.0)) {
      c.require(false, "case not in the first-order regime");
      continue;
    }
    const auto layer = optimize(mesh, params);
    const double P = mesh.perimeter();
    const double h0 = params.mass / P;
    double mu_dev = 0.0;
    for (double v : layer.mu.values) mu_dev = std::max(mu_dev, std::abs(v - h0));
    c.require(mu_dev <= 1e-10, "mu deviates from m/P by " + num(mu_dev));
    const double target = params.beta * P * P / (P + params.beta * params.mass) +
                          params.eps * eval_F1(mesh, uniform_field(mesh, h0), params.beta);
    c.require(std::abs(layer.value - target) <= 1e-10,
              "value off by " + num(std::abs(layer.value - target)));
  }
  c.note(std::to_string(cases.size()) + " constant-curvature cases");
  return c;
}

// 5. Optimality, EL constant, mass residual and brackets on the ellipse.
Check criterion_5() {
  Check c;
  const auto mesh = make_ellipse(2.0, 1.0, 512);
  const PhysicsParams params{1.0, 0.05, 1.0};
  const auto layer = optimize(mesh, params);

  std::size_t violations = 0;
  for (const auto& h : test_helpers::random_feasible_fields(mesh, params.mass, 100))
    if (!(layer.value <= eval_Geps(mesh, h, params.beta, params.eps) + 1e-10)) ++violations;
  c.require(violations == 0, std::to_string(violations) + " optimality violations");

  c.require(layer.el.c_variance <= 1e-12 * layer.el.c_mean * layer.el.c_mean,
            "EL variance " + num(layer.el.c_variance));
  c.require(layer.mass_residual <= 1e-8 * params.mass,
            "mass residual " + num(layer.mass_residual));

  const double lower = std::max(1.0, 1.0 / std::sqrt(3.0 * layer.k_m));
  const double a0 = params.eps * mesh.min_H() / params.beta;
  const double z_k = static_cast<double>(test_helpers::cubic_root_oracle(layer.k_m, a0));
  std::size_t bracket_breaks = 0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (!(layer.mu.values[i] > 0.0)) continue;
    const double y = 1.0 + params.beta * layer.mu.values[i];
    if (!(y >= lower * (1.0 - 1e-13) && y <= z_k * (1.0 + 1e-13))) ++bracket_breaks;
  }
  c.require(bracket_breaks == 0, std::to_string(bracket_breaks) + " bracket violations");
  c.note("k_m=" + num(layer.k_m) + " active=" + std::to_string(layer.el.active_count));
  return c;
}

// 6. Regime dispatch.
Check criterion_6() {
  Check c;
  const auto sphere = discretize_sphere(0.1, 500);  // eps*H/beta = 4
  const auto layer = optimize(sphere, {1.0, 0.2, 1.0});
  bool all_zero = layer.regime == Regime::zero_layer;
  for (double v : layer.mu.values) all_zero = all_zero && v == 0.0;
  c.require(all_zero, "zero-layer regime not reached");
  c.require(layer.value == sphere.perimeter(), "value != beta*P exactly");

  bool refused = false;
  try {
    optimize(make_circle(1.0, 256), {1.0, 1.0, 1.0});  // sup eps*H/beta = 1
  } catch (const RegimeError&) {
    refused = true;
  }
  c.require(refused, "band sup eps*H/beta in (2/3,2) was not refused");
  return c;
}

// 7. Thin cookies close the gap to the zero-order bound.
Check criterion_7() {
  Check c;
  const double P = 4.0 + 2.0 * pi;
  const std::vector<double> r_list{0.5, 0.1, 0.01, 0.001};
  const auto rows = cookie_sweep(P, {1.0, 1e-4, 1.0}, r_list);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    c.require(rows[i].gap > 0.0, "gap not positive at r=" + num(rows[i].r));
    if (i > 0)
      c.require(rows[i].gap < rows[i - 1].gap, "gap not decreasing at r=" + num(rows[i].r));
  }
  for (std::size_t i = rows.size() - 2; i < rows.size(); ++i)
    c.require(rows[i].gap <= 2.0 * pi * rows[i].r + 1e-8,
              "gap exceeds 2*beta*pi*r at r=" + num(rows[i].r));
  c.note("gaps " + num(rows.front().gap) + " .. " + num(rows.back().gap));
  return c;
}

// 8. Concentration: anti-monotone thickness on every ellipse optimum.
Check criterion_8() {
  Check c;
  std::size_t checked = 0;
  for (const auto& [a, b, eps, m] :
       std::vector<std::tuple<double, double, double, double>>{{2.0, 1.0, 0.05, 1.0},
                                                               {2.0, 1.0, 0.2, 3.0},
                                                               {4.0, 1.0, 0.1, 1.0},
                                                               {1.5, 1.0, 0.3, 0.5}}) {
    const auto mesh = make_ellipse(a, b, 512);
    const PhysicsParams params{1.0, eps, m};
    if (!(params.eps * mesh.max_H() / params.beta <= 2.0 / 3.0)) {
      c.require(false, "case outside the first-order regime");
      continue;
    }
    const auto prof = concentration_profile(mesh, params);
    c.require(prof.violations == 0,
              std::to_string(prof.violations) + " violations on a=" + num(a) + " eps=" + num(eps));
    ++checked;
  }
  c.note(std::to_string(checked) + " ellipse optima");
  return c;
}

// 9. The equal-perimeter circle is never better insulated.
Check criterion_9() {
  Check c;
  for (double aspect : {1.2, 2.0, 4.0}) {
    for (double eps : {0.05, 0.15}) {
      const auto mesh = make_ellipse(aspect, 1.0, 512);
      const PhysicsParams params{1.0, eps, 1.0};
      if (!(mesh.perimeter() >= 3.0 * pi * eps / params.beta)) {
        c.require(false, "hypothesis unexpectedly unmet");
        continue;
      }
      const auto rep = ball_compare(mesh, params);
      c.require(rep.comparison_done && rep.satisfied,
                "ellipse aspect " + num(aspect) + " eps " + num(eps) + " not satisfied");
      c.require(rep.G_shape <= rep.G_ball + 1e-10, "inequality margin violated");
    }
  }
  const auto self = ball_compare(make_circle(1.7, 512), {1.0, 0.05, 1.0});
  c.require(std::abs(self.G_shape - self.G_ball) <= 1e-12,
            "circle self-comparison gap " + num(std::abs(self.G_shape - self.G_ball)));
  return c;
}

// 10. Convex geometry: Gauss-Bonnet and Alexandrov-Fenchel.
Check criterion_10() {
  Check c;
  const std::vector<BoundaryMesh> planar = {
      make_circle(1.0, 512),           make_circle(2.5, 512),
      make_ellipse(1.2, 1.0, 1024),    make_ellipse(2.0, 1.0, 1024),
      make_ellipse(4.0, 1.0, 1024),    cookie_boundary({1.0, 1.0, 2}, 1024),
      cookie_boundary({0.5, 2.0, 2}, 1024)};
  for (const auto& mesh : planar) {
    double total = 0.0;
    for (const auto& s : mesh.samples) total += s.weight * s.H;
    c.require(std::abs(total - 2.0 * pi) <= 1e-6,
              mesh.shape_tag + ": total curvature off by " + num(std::abs(total - 2.0 * pi)));
  }

  for (const auto& mesh : {discretize_sphere(1.0, 1000), discretize_sphere(3.0, 1000),
                           make_spheroid(1.0, 1.0, 128, 64)}) {
    const auto rep = alexandrov_fenchel_check(mesh);
    c.require(rep.satisfied && std::abs(rep.equality_gap) < 1e-8,
              "sphere gap " + num(rep.equality_gap));
  }
  for (const auto& mesh : {make_spheroid(1.0, 2.0, 256, 64), make_spheroid(2.0, 1.0, 256, 64)}) {
    const auto rep = alexandrov_fenchel_check(mesh);
    c.require(rep.satisfied, "spheroid inequality violated");
    c.require(rep.equality_gap >= 1e-8, "non-ball gap below 1e-8: " + num(rep.equality_gap));
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* label;
    std::function<Check()> run;
    double time_limit_s;  // 0 = unlimited
  };
  const std::vector<Criterion> criteria = {
      {1, "radial expansion n=2", criterion_1, 1.0},
      {2, "radial expansion n=3", criterion_2, 1.0},
      {3, "fiber-oracle consistency", criterion_3, 10.0},
      {4, "constant-curvature optimum", criterion_4, 0.0},
      {5, "optimality property suite", criterion_5, 0.0},
      {6, "regime dispatch", criterion_6, 0.0},
      {7, "cookie sweep", criterion_7, 5.0},
      {8, "concentration", criterion_8, 0.0},
      {9, "ball comparison n=2", criterion_9, 0.0},
      {10, "convex geometry", criterion_10, 0.0},
  };

  int failures = 0;
  for (const auto& crit : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = crit.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (crit.time_limit_s > 0.0 && secs >= crit.time_limit_s) {
      c.ok = false;
      c.detail += (c.detail.empty() ? "" : "; ") + std::string("runtime ") + num(secs) +
                  "s >= " + num(crit.time_limit_s) + "s";
    }
    if (!c.ok) ++failures;
    std::printf("[%s] criterion %2d: %-28s %s(%.2fs)\n", c.ok ? "PASS" : "FAIL", crit.id,
                crit.label, c.detail.empty() ? "" : (c.detail + " ").c_str(), secs);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures;
}
