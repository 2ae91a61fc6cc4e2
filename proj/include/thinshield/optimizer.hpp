#pragma once
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "thinshield/functionals.hpp"
#include "thinshield/geometry.hpp"

#include <json.hpp>

namespace thinshield {

// Dispatch of the minimization by the size of eps*H/beta:
//   first_order  sup eps*H/beta <= 2/3, thickness from the multiplier cubic;
//   zero_layer   inf eps*H/beta >= 2, the optimum is no insulation at all.
// Anything in between is refused with RegimeError.
enum class Regime { first_order, zero_layer };
const char* regime_name(Regime r);

struct RegimeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unique root in [1, +inf) of k y^3 - y + a, for a <= 1 - k. The boundary
// a = 1 - k returns 1; a past it throws (the point is inactive and the caller
// sets mu = 0). Bisection on the monotone bracket, then Newton polish.
double cubic_root_yk(double k, double a);

// Largest admissible multiplier k0 = 1 - eps*inf(H)/beta.
double multiplier_upper_bound(const BoundaryMesh& mesh, const PhysicsParams& params);

struct MultiplierState {
  double k = 0.0;
  double k0 = 0.0;
  std::vector<std::uint32_t> active;  // indices with eps*H_i/beta < 1 - k
};
MultiplierState multiplier_state(const BoundaryMesh& mesh, const PhysicsParams& params, double k);

// mu_k = (y_k - 1)/beta on the active set, 0 elsewhere.
ThicknessField mu_of_k(const BoundaryMesh& mesh, const PhysicsParams& params, double k);
// M(k), the quadrature mass of mu_k; continuous and decreasing in k.
double mass_of_k(const BoundaryMesh& mesh, const PhysicsParams& params, double k);
// The unique k in (0, k0) with M(k) = mass, by bisection.
double solve_k_m(const BoundaryMesh& mesh, const PhysicsParams& params);

// Spread of the implied Euler-Lagrange constant c_i = beta (1 + beta mu_i -
// eps H_i / beta) / (1 + beta mu_i)^3 over the active set {mu > 0}; at an
// optimum every c_i equals beta k_m.
struct ELReport {
  double c_mean = 0.0;
  double c_variance = 0.0;
  double max_pointwise_residual = 0.0;
  std::size_t active_count = 0;
};
ELReport el_residual(const BoundaryMesh& mesh, const PhysicsParams& params,
                     const ThicknessField& mu);

struct OptimalLayer {
  double k_m = 0.0;  // NaN in the zero_layer regime
  ThicknessField mu;
  double value = 0.0;
  double mass_residual = 0.0;
  ELReport el;
  Regime regime = Regime::first_order;
};
OptimalLayer optimize(const BoundaryMesh& mesh, const PhysicsParams& params);

nlohmann::json optimizer_report_json(const OptimalLayer& layer);

}  // namespace thinshield
