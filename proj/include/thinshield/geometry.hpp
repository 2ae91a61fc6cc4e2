#pragma once
#include <array>
#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace thinshield {

// One quadrature sample of a boundary discretization. H is the sum of the
// principal curvatures: 1/R on a circle, 2/R on a sphere in R^3.
struct Sample {
  std::array<double, 3> pos{};  // pos[2] unused when dim == 2
  double weight = 0.0;          // positive length/area measure
  double H = 0.0;
};

struct BoundaryMesh {
  int dim = 2;  // ambient dimension, 2 or 3
  std::vector<Sample> samples;
  std::string shape_tag;

  std::size_t size() const { return samples.size(); }
  double perimeter() const;  // pairwise sum of the weights
  double min_H() const;
  double max_H() const;
};

// Closed curve in R^2 parametrized over t in [0, 2*pi), positively oriented
// (counterclockwise), so that a circle gets H = +1/R.
struct ParametricCurve {
  std::function<std::array<double, 2>(double)> point;
  std::function<std::array<double, 2>(double)> velocity;
  std::function<std::array<double, 2>(double)> acceleration;
};

// Profile f(z) > 0 of a surface of revolution around the z axis. The surface
// closes smoothly when f vanishes at both ends of the range; end caps are not
// meshed.
struct RevolutionProfile {
  std::function<double(double)> f;
  std::function<double(double)> df;
  std::function<double(double)> ddf;
  double z_lo = -1.0;
  double z_hi = 1.0;
};

// Flat disk of radius R thickened by a radius-r rounded edge.
struct CookieSpec {
  double r = 1.0;
  double R = 1.0;
  int dim = 2;
};

BoundaryMesh discretize_parametric_curve(const ParametricCurve& curve, std::size_t N,
                                         std::string_view tag = "curve");
BoundaryMesh discretize_sphere(double R, std::size_t N);
BoundaryMesh discretize_surface_of_revolution(const RevolutionProfile& profile, std::size_t N_z,
                                              std::size_t N_theta,
                                              std::string_view tag = "revolution");
// Planar cookie boundary: two flat segments (H = 0) and two semicircular caps
// (H = 1/r), with exact per-piece weights. Only dim == 2 is meshed.
BoundaryMesh cookie_boundary(const CookieSpec& spec, std::size_t N);

// Perimeter of the cookie shape in R^n, n >= 2. Accepts r = 0 as the
// degenerate (two-disk) limit.
double cookie_perimeter(const CookieSpec& spec);
// Inverts cookie_perimeter in R at fixed r by bisection.
double solve_cookie_R(double P_target, double r, int dim);

// W_1 = P/n and W_2 = (1/(n(n-1))) * sum w_i H_i; other orders unsupported.
double quermassintegral(const BoundaryMesh& mesh, int j);

struct AFReport {
  double lhs = 0.0;           // (W_1/omega_n)^(1/(n-1))
  double rhs = 0.0;           // (W_2/omega_n)^(1/(n-2))
  double equality_gap = 0.0;  // rhs - lhs, zero exactly for balls
  bool satisfied = false;
  bool convex = false;  // false: negative-H sample found, check skipped
};
AFReport alexandrov_fenchel_check(const BoundaryMesh& mesh);

BoundaryMesh make_circle(double R, std::size_t N);
BoundaryMesh make_ellipse(double a, double b, std::size_t N);
// Spheroid with semi-axes (a, a, c); tagged "sphere" when a == c.
BoundaryMesh make_spheroid(double a, double c, std::size_t N_z, std::size_t N_theta);

// Columns: x,y[,z],weight,H
void write_mesh_csv(const BoundaryMesh& mesh, std::ostream& os);

}  // namespace thinshield
