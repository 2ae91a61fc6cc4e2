#pragma once
#include <iosfwd>
#include <span>
#include <vector>

#include "thinshield/functionals.hpp"
#include "thinshield/geometry.hpp"

#include <json.hpp>

namespace thinshield {

// Ball of radius R wearing a constant layer of thickness eps*h; the exact
// Robin energy on the resulting annulus/shell is available in closed form.
struct RadialProblem {
  int n = 2;  // ambient dimension >= 2
  double R = 1.0;
  double beta = 1.0;
  double eps = 0.1;
  double h = 1.0;  // constant thickness, may be zero
};

double radial_exact_energy(const RadialProblem& p);

struct ExpansionReport {
  std::vector<double> eps_list;
  std::vector<double> exact_energies;
  std::vector<double> remainder_ratios;  // (F_eps - F0 - eps F1) / eps^2
  double fitted_F0 = 0.0;                // finite-difference fit at the two smallest eps
  double fitted_F1 = 0.0;
  double analytic_F0 = 0.0;  // closed-form zero/first order coefficients
  double analytic_F1 = 0.0;
};

// Exact energies over a decreasing eps list (>= 3 entries), with the affine
// model fitted from the two smallest entries.
ExpansionReport radial_expansion_check(int n, double R, double beta, double h,
                                       std::span<const double> eps_list);

// First-order exact stand-in for the full layer energy: per boundary sample,
// the 1-D fiber problem with Jacobian weight (1 + t H) is minimized in closed
// form and the results are summed with the quadrature weights. Requires
// eps * h_i * min(H_i, 0) > -1 at every sample.
double fiber_energy(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps);

// Layer energy of the explicit recovery profiles through the same fiber
// quadrature; order 1 is the linear profile, order 2 adds the curvature
// correction. Both are admissible fibers, so neither can beat fiber_energy.
double recovery_energy(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps,
                       int order);

nlohmann::json expansion_json(const ExpansionReport& rep);
// Columns: eps,exact,model,remainder_ratio with model = F0 + eps*F1.
void write_expansion_csv(const ExpansionReport& rep, std::ostream& os);

}  // namespace thinshield
