#include "thinshield/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "thinshield/numerics.hpp"

namespace thinshield {

const char* regime_name(Regime r) {
  return r == Regime::first_order ? "first-order" : "zero-layer";
}

double cubic_root_yk(double k, double a) {
  if (!(k > 0.0)) throw std::invalid_argument("cubic_root_yk: k must be positive");
  if (a > 1.0 - k)
    throw std::domain_error("cubic_root_yk: inactive point (eps*H/beta > 1 - k)");
  if (a == 1.0 - k) return 1.0;  // boundary of activity

  const auto poly = [k, a](double y) { return (k * y * y * y - y) + a; };
  // The polynomial decreases up to 1/sqrt(3k) and increases beyond; the root
  // past 1 lies in the increasing branch.
  const double stationary = 1.0 / std::sqrt(3.0 * k);
  double lo = std::max(1.0, stationary);
  double hi = std::max(lo, 1.0 / std::sqrt(k));
  while (poly(hi) < 0.0) hi *= 2.0;

  // Bisect to ~1e-6, then polish with bracketed Newton.
  while (hi - lo > 1e-6 * hi) {
    const double mid = 0.5 * (lo + hi);
    (poly(mid) < 0.0 ? lo : hi) = mid;
  }
  double y = 0.5 * (lo + hi);
  for (int iter = 0; iter < 100; ++iter) {
    const double p = poly(y);
    const double tol = 1e-15 * std::max(1.0, k * y * y * y);
    if (std::abs(p) <= tol) break;
    (p < 0.0 ? lo : hi) = y;
    const double dp = 3.0 * k * y * y - 1.0;
    double next = (dp > 0.0) ? y - p / dp : 0.5 * (lo + hi);
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    if (next == y) break;
    y = next;
  }
  return std::max(y, 1.0);
}

double multiplier_upper_bound(const BoundaryMesh& mesh, const PhysicsParams& params) {
  if (mesh.samples.empty()) throw std::invalid_argument("multiplier_upper_bound: empty mesh");
  return 1.0 - params.eps * mesh.min_H() / params.beta;
}

MultiplierState multiplier_state(const BoundaryMesh& mesh, const PhysicsParams& params, double k) {
  const double k0 = multiplier_upper_bound(mesh, params);
  if (!(k > 0.0 && k < k0))
    throw std::invalid_argument("multiplier_state: k outside (0, k0)");
  MultiplierState st;
  st.k = k;
  st.k0 = k0;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double a = params.eps * mesh.samples[i].H / params.beta;
    if (a < 1.0 - k) st.active.push_back(static_cast<std::uint32_t>(i));
  }
  return st;
}

ThicknessField mu_of_k(const BoundaryMesh& mesh, const PhysicsParams& params, double k) {
  const double k0 = multiplier_upper_bound(mesh, params);
  if (!(k > 0.0 && k < k0)) throw std::invalid_argument("mu_of_k: k outside (0, k0)");
  std::vector<double> values(mesh.size(), 0.0);
  num::parallel_for(mesh.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double a = params.eps * mesh.samples[i].H / params.beta;
      if (a < 1.0 - k) values[i] = (cubic_root_yk(k, a) - 1.0) / params.beta;
    }
  });
  return make_field(mesh, std::move(values));
}

double mass_of_k(const BoundaryMesh& mesh, const PhysicsParams& params, double k) {
  return mu_of_k(mesh, params, k).mass;
}

double solve_k_m(const BoundaryMesh& mesh, const PhysicsParams& params) {
  params.validate();
  const double sup_a = params.eps * mesh.max_H() / params.beta;
  if (sup_a > 2.0 / 3.0)
    throw RegimeError("solve_k_m: sup eps*H/beta = " + std::to_string(sup_a) +
                      " violates the small-curvature assumption (<= 2/3)");
  const double k0 = multiplier_upper_bound(mesh, params);
  const double m = params.mass;

  double lo = k0 * 1e-9;
  double hi = k0 * (1.0 - 1e-9);
  double m_lo = mass_of_k(mesh, params, lo);
  double m_hi = mass_of_k(mesh, params, hi);
  if (!(m_lo >= m && m_hi <= m))
    throw std::runtime_error("solve_k_m: mass " + std::to_string(m) +
                             " not bracketed by M(k) on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "] = [" + std::to_string(m_hi) + ", " +
                             std::to_string(m_lo) + "]");

  // M(k) is continuous and strictly decreasing; bisect to the rounding floor
  // so constant-curvature optima recover m/P well past the 1e-8 contract.
  double best_k = lo, best_err = std::abs(m_lo - m);
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double mm = mass_of_k(mesh, params, mid);
    if (std::abs(mm - m) < best_err) {
      best_err = std::abs(mm - m);
      best_k = mid;
    }
    if (mm == m) break;
    (mm > m ? lo : hi) = mid;
  }
  if (best_err > 1e-8 * m)
    throw std::runtime_error("solve_k_m: bisection stalled with |M(k)-m| = " +
                             std::to_string(best_err) + " on bracket [" + std::to_string(lo) +
                             ", " + std::to_string(hi) + "]");
  return best_k;
}

ELReport el_residual(const BoundaryMesh& mesh, const PhysicsParams& params,
                     const ThicknessField& mu) {
  if (mu.values.size() != mesh.size())
    throw std::invalid_argument("el_residual: field not aligned with the mesh");
  std::vector<double> c;
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    if (!(mu.values[i] > 0.0)) continue;
    const double y = 1.0 + params.beta * mu.values[i];
    const double a = params.eps * mesh.samples[i].H / params.beta;
    c.push_back(params.beta * (y - a) / (y * y * y));
    idx.push_back(i);
  }
  if (c.empty()) throw std::runtime_error("el_residual: empty active set");

  ELReport rep;
  rep.active_count = c.size();
  rep.c_mean = num::pairwise_sum(c) / static_cast<double>(c.size());
  std::vector<double> dev(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) dev[i] = (c[i] - rep.c_mean) * (c[i] - rep.c_mean);
  rep.c_variance = num::pairwise_sum(dev) / static_cast<double>(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double y = 1.0 + params.beta * mu.values[idx[i]];
    const double a = params.eps * mesh.samples[idx[i]].H / params.beta;
    const double resid = std::abs((rep.c_mean / params.beta) * y * y * y - y + a);
    rep.max_pointwise_residual = std::max(rep.max_pointwise_residual, resid);
  }
  return rep;
}

OptimalLayer optimize(const BoundaryMesh& mesh, const PhysicsParams& params) {
  params.validate();
  if (mesh.samples.empty()) throw std::invalid_argument("optimize: empty mesh");
  const double sup_a = params.eps * mesh.max_H() / params.beta;
  const double inf_a = params.eps * mesh.min_H() / params.beta;

  OptimalLayer out;
  if (sup_a <= 2.0 / 3.0) {
    out.regime = Regime::first_order;
    out.k_m = solve_k_m(mesh, params);
    out.mu = mu_of_k(mesh, params, out.k_m);
    out.value = eval_Geps(mesh, out.mu, params.beta, params.eps);
    out.mass_residual = std::abs(out.mu.mass - params.mass);
    out.el = el_residual(mesh, params, out.mu);
    return out;
  }
  if (inf_a >= 2.0) {
    out.regime = Regime::zero_layer;
    out.k_m = std::numeric_limits<double>::quiet_NaN();
    out.mu = uniform_field(mesh, 0.0);
    out.value = eval_Geps(mesh, out.mu, params.beta, params.eps);  // beta * P
    out.mass_residual = 0.0;
    return out;
  }
  throw RegimeError("optimize: eps*H/beta spans [" + std::to_string(inf_a) + ", " +
                    std::to_string(sup_a) +
                    "], outside both covered regimes (sup <= 2/3 or inf >= 2)");
}

nlohmann::json optimizer_report_json(const OptimalLayer& layer) {
  nlohmann::json j;
  if (std::isnan(layer.k_m))
    j["k_m"] = nullptr;
  else
    j["k_m"] = layer.k_m;
  j["value"] = layer.value;
  j["mass_residual"] = layer.mass_residual;
  j["el"] = {{"c_mean", layer.el.c_mean},
             {"c_variance", layer.el.c_variance},
             {"max_pointwise_residual", layer.el.max_pointwise_residual},
             {"active_count", layer.el.active_count}};
  j["regime"] = regime_name(layer.regime);
  return j;
}

}  // namespace thinshield
