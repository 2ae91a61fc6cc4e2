#pragma once
#include <iosfwd>
#include <vector>

#include "thinshield/geometry.hpp"

namespace thinshield {

struct PhysicsParams {
  double beta = 1.0;  // heat-transfer coefficient, 1/length
  double eps = 0.1;   // layer-scale parameter
  double mass = 1.0;  // insulator budget
  void validate() const;  // all strictly positive
};

// Per-sample layer thickness aligned with a BoundaryMesh, with cached mass.
struct ThicknessField {
  std::vector<double> values;
  double mass = 0.0;  // sum of weight_i * h_i
};

ThicknessField make_field(const BoundaryMesh& mesh, std::vector<double> values);
ThicknessField uniform_field(const BoundaryMesh& mesh, double h);
// Rescales h uniformly when the quadrature mass exceeds budget*(1 + 1e-10).
ThicknessField enforce_mass_budget(const BoundaryMesh& mesh, ThicknessField field, double budget);

// Zero-order energy: beta * sum w_i / (1 + beta h_i).
double eval_F0(const BoundaryMesh& mesh, const ThicknessField& h, double beta);
// First-order energy: beta * sum w_i H_i h_i (2 + beta h_i) / (2 (1 + beta h_i)^2).
double eval_F1(const BoundaryMesh& mesh, const ThicknessField& h, double beta);
// eval_F0 + eps * eval_F1, with the same reduction order as the parts.
double eval_Geps(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps);

// Uniform distribution h0 = m/P, the unique zero-order minimizer; its value
// is beta P^2 / (P + beta m).
struct UniformBaseline {
  ThicknessField h0;
  double value = 0.0;
};
UniformBaseline uniform_baseline(const BoundaryMesh& mesh, const PhysicsParams& params);

// Single column "h", one row per mesh sample, in sample order.
void write_field_csv(const ThicknessField& field, std::ostream& os);
ThicknessField read_field_csv(const BoundaryMesh& mesh, std::istream& is);

}  // namespace thinshield
