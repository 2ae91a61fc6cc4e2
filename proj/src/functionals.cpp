#include "thinshield/functionals.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include "thinshield/numerics.hpp"

namespace thinshield {

void PhysicsParams::validate() const {
  if (!(beta > 0.0) || !(eps > 0.0) || !(mass > 0.0))
    throw std::invalid_argument("PhysicsParams: beta, eps and mass must all be positive");
}

namespace {

void check_aligned(const BoundaryMesh& mesh, const ThicknessField& h) {
  if (h.values.size() != mesh.size())
    throw std::invalid_argument("thickness field is not aligned with the mesh");
}

double field_mass(const BoundaryMesh& mesh, const std::vector<double>& values) {
  std::vector<double> terms(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) terms[i] = mesh.samples[i].weight * values[i];
  return num::pairwise_sum(terms);
}

}  // namespace

ThicknessField make_field(const BoundaryMesh& mesh, std::vector<double> values) {
  if (values.size() != mesh.size())
    throw std::invalid_argument("make_field: value count does not match the mesh");
  for (double v : values)
    if (!(v >= 0.0)) throw std::invalid_argument("make_field: thickness must be nonnegative");
  ThicknessField f;
  f.mass = field_mass(mesh, values);
  f.values = std::move(values);
  return f;
}

ThicknessField uniform_field(const BoundaryMesh& mesh, double h) {
  return make_field(mesh, std::vector<double>(mesh.size(), h));
}

ThicknessField enforce_mass_budget(const BoundaryMesh& mesh, ThicknessField field, double budget) {
  check_aligned(mesh, field);
  if (!(budget > 0.0)) throw std::invalid_argument("enforce_mass_budget: budget must be positive");
  if (field.mass <= budget * (1.0 + 1e-10)) return field;
  const double scale = budget / field.mass;
  for (double& v : field.values) v *= scale;
  field.mass = field_mass(mesh, field.values);
  return field;
}

double eval_F0(const BoundaryMesh& mesh, const ThicknessField& h, double beta) {
  check_aligned(mesh, h);
  std::vector<double> terms(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i)
    terms[i] = mesh.samples[i].weight / (1.0 + beta * h.values[i]);
  return beta * num::pairwise_sum(terms);
}

double eval_F1(const BoundaryMesh& mesh, const ThicknessField& h, double beta) {
  check_aligned(mesh, h);
  std::vector<double> terms(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i) {
    const double hv = h.values[i];
    const double d = 1.0 + beta * hv;
    terms[i] = mesh.samples[i].weight * mesh.samples[i].H * hv * (2.0 + beta * hv) / (2.0 * d * d);
  }
  return beta * num::pairwise_sum(terms);
}

double eval_Geps(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps) {
  return eval_F0(mesh, h, beta) + eps * eval_F1(mesh, h, beta);
}

UniformBaseline uniform_baseline(const BoundaryMesh& mesh, const PhysicsParams& params) {
  if (!(params.mass > 0.0)) throw std::invalid_argument("uniform_baseline: mass must be positive");
  const double P = mesh.perimeter();
  UniformBaseline out;
  out.h0 = uniform_field(mesh, params.mass / P);
  out.value = params.beta * P * P / (P + params.beta * params.mass);
  return out;
}

void write_field_csv(const ThicknessField& field, std::ostream& os) {
  char buf[64];
  os << "h\n";
  for (double v : field.values) {
    std::snprintf(buf, sizeof buf, "%.17g\n", v);
    os << buf;
  }
}

ThicknessField read_field_csv(const BoundaryMesh& mesh, std::istream& is) {
  std::vector<double> values;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (values.empty() && line.find_first_not_of("0123456789+-.eE \t\r") != std::string::npos)
      continue;  // header
    values.push_back(std::stod(line));
  }
  return make_field(mesh, std::move(values));
}

}  // namespace thinshield
