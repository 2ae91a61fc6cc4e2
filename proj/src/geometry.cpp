#include "thinshield/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "thinshield/numerics.hpp"

namespace thinshield {

using std::numbers::pi;

double BoundaryMesh::perimeter() const {
  std::vector<double> w(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) w[i] = samples[i].weight;
  return num::pairwise_sum(w);
}

double BoundaryMesh::min_H() const {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& s : samples) m = std::min(m, s.H);
  return m;
}

double BoundaryMesh::max_H() const {
  double m = -std::numeric_limits<double>::infinity();
  for (const auto& s : samples) m = std::max(m, s.H);
  return m;
}

BoundaryMesh discretize_parametric_curve(const ParametricCurve& curve, std::size_t N,
                                         std::string_view tag) {
  if (N < 16) throw std::invalid_argument("discretize_parametric_curve: N must be >= 16");
  BoundaryMesh mesh;
  mesh.dim = 2;
  mesh.shape_tag = std::string(tag);
  mesh.samples.resize(N);
  const double dt = 2.0 * pi / static_cast<double>(N);
  for (std::size_t i = 0; i < N; ++i) {
    const double t = dt * static_cast<double>(i);
    const auto p = curve.point(t);
    const auto v = curve.velocity(t);
    const auto a = curve.acceleration(t);
    const double speed = std::sqrt(v[0] * v[0] + v[1] * v[1]);
    if (speed < 1e-12)
      throw std::invalid_argument("discretize_parametric_curve: degenerate tangent at t = " +
                                  std::to_string(t));
    Sample& s = mesh.samples[i];
    s.pos = {p[0], p[1], 0.0};
    // Uniform-parameter trapezoid rule: spectrally accurate on smooth closed curves.
    s.weight = speed * dt;
    s.H = (v[0] * a[1] - v[1] * a[0]) / (speed * speed * speed);
  }
  return mesh;
}

BoundaryMesh discretize_sphere(double R, std::size_t N) {
  if (!(R > 0.0)) throw std::invalid_argument("discretize_sphere: R must be positive");
  if (N < 1) throw std::invalid_argument("discretize_sphere: N must be positive");
  BoundaryMesh mesh;
  mesh.dim = 3;
  mesh.shape_tag = "sphere";
  mesh.samples.resize(N);
  // Fibonacci lattice with equal weights; total weight is 4*pi*R^2 by construction.
  const double w = 4.0 * pi * R * R / static_cast<double>(N);
  const double golden = pi * (3.0 - std::sqrt(5.0));
  for (std::size_t i = 0; i < N; ++i) {
    const double z = 1.0 - (2.0 * static_cast<double>(i) + 1.0) / static_cast<double>(N);
    const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden * static_cast<double>(i);
    Sample& s = mesh.samples[i];
    s.pos = {R * rho * std::cos(phi), R * rho * std::sin(phi), R * z};
    s.weight = w;
    s.H = 2.0 / R;
  }
  return mesh;
}

BoundaryMesh discretize_surface_of_revolution(const RevolutionProfile& profile, std::size_t N_z,
                                              std::size_t N_theta, std::string_view tag) {
  if (N_z < 16) throw std::invalid_argument("discretize_surface_of_revolution: N_z must be >= 16");
  if (N_theta < 4)
    throw std::invalid_argument("discretize_surface_of_revolution: N_theta must be >= 4");
  if (!(profile.z_hi > profile.z_lo))
    throw std::invalid_argument("discretize_surface_of_revolution: empty z-range");

  constexpr int q = 16;
  const std::size_t panels = std::max<std::size_t>(1, (N_z + q - 1) / q);
  const auto& rule = num::gauss_legendre(q);

  BoundaryMesh mesh;
  mesh.dim = 3;
  mesh.shape_tag = std::string(tag);
  mesh.samples.reserve(panels * q * N_theta);
  const double dz = (profile.z_hi - profile.z_lo) / static_cast<double>(panels);
  const double dtheta = 2.0 * pi / static_cast<double>(N_theta);
  for (std::size_t p = 0; p < panels; ++p) {
    const double za = profile.z_lo + dz * static_cast<double>(p);
    for (int i = 0; i < q; ++i) {
      const double z = za + 0.5 * dz * (rule.nodes[i] + 1.0);
      const double wz = 0.5 * dz * rule.weights[i];
      const double f = profile.f(z);
      if (!(f > 0.0))
        throw std::invalid_argument(
            "discretize_surface_of_revolution: profile touches zero inside the range");
      const double df = profile.df(z);
      const double ddf = profile.ddf(z);
      const double slope = 1.0 + df * df;
      // Area element f*sqrt(1+f'^2), computed as sqrt(f^2 + (f f')^2) to stay
      // finite when f' blows up at a smooth closure.
      const double area = std::sqrt(f * f + (f * df) * (f * df));
      const double k_meridian = -ddf / (slope * std::sqrt(slope));
      const double k_parallel = 1.0 / (f * std::sqrt(slope));
      for (std::size_t j = 0; j < N_theta; ++j) {
        const double theta = dtheta * static_cast<double>(j);
        Sample s;
        s.pos = {f * std::cos(theta), f * std::sin(theta), z};
        s.weight = area * wz * dtheta;
        s.H = k_meridian + k_parallel;
        mesh.samples.push_back(s);
      }
    }
  }
  return mesh;
}

BoundaryMesh cookie_boundary(const CookieSpec& spec, std::size_t N) {
  if (spec.dim != 2)
    throw std::invalid_argument("cookie_boundary: only the planar cookie is meshed");
  if (!(spec.r > 0.0) || !(spec.R > 0.0))
    throw std::invalid_argument("cookie_boundary: r and R must be positive");
  if (N < 16) throw std::invalid_argument("cookie_boundary: N must be >= 16");

  const double r = spec.r, R = spec.R;
  const double P = 4.0 * R + 2.0 * pi * r;
  const auto piece_count = [&](double len) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(
                                        std::lround(static_cast<double>(N) * len / P)));
  };
  const std::size_t n_flat = piece_count(2.0 * R);
  const std::size_t n_cap = piece_count(pi * r);

  BoundaryMesh mesh;
  mesh.dim = 2;
  mesh.shape_tag = "cookie";
  mesh.samples.reserve(2 * n_flat + 2 * n_cap);

  // Counterclockwise: right cap, top flat, left cap, bottom flat.
  const auto add_cap = [&](double cx, double theta0) {
    const double w = pi * r / static_cast<double>(n_cap);
    for (std::size_t i = 0; i < n_cap; ++i) {
      const double theta = theta0 + pi * (static_cast<double>(i) + 0.5) / static_cast<double>(n_cap);
      Sample s;
      s.pos = {cx + r * std::cos(theta), r * std::sin(theta), 0.0};
      s.weight = w;
      s.H = 1.0 / r;
      mesh.samples.push_back(s);
    }
  };
  const auto add_flat = [&](double y, double x0, double x1) {
    const double w = 2.0 * R / static_cast<double>(n_flat);
    for (std::size_t i = 0; i < n_flat; ++i) {
      const double x =
          x0 + (x1 - x0) * (static_cast<double>(i) + 0.5) / static_cast<double>(n_flat);
      Sample s;
      s.pos = {x, y, 0.0};
      s.weight = w;
      s.H = 0.0;
      mesh.samples.push_back(s);
    }
  };
  add_cap(R, -0.5 * pi);
  add_flat(r, R, -R);
  add_cap(-R, 0.5 * pi);
  add_flat(-r, -R, R);
  return mesh;
}

double cookie_perimeter(const CookieSpec& spec) {
  const int n = spec.dim;
  if (n < 2) throw std::invalid_argument("cookie_perimeter: dimension must be >= 2");
  if (spec.r < 0.0 || !(spec.R > 0.0))
    throw std::invalid_argument("cookie_perimeter: need r >= 0 and R > 0");
  const double om = num::unit_ball_volume(n - 1);
  if (spec.r == 0.0) return 2.0 * om * std::pow(spec.R, n - 1);
  // Edge integral with rho = sin(theta), which removes the 1/sqrt(1-rho^2)
  // endpoint singularity exactly.
  const double integral = num::adaptive_simpson(
      [&](double theta) { return std::pow(spec.r * std::sin(theta) + spec.R, n - 2); }, 0.0,
      0.5 * pi, 1e-13);
  return 2.0 * om * (std::pow(spec.R, n - 1) + (n - 1) * spec.r * integral);
}

double solve_cookie_R(double P_target, double r, int dim) {
  if (!(P_target > 0.0)) throw std::invalid_argument("solve_cookie_R: P_target must be positive");
  const double P_min = (r > 0.0)
                           ? 2.0 * num::unit_ball_volume(dim - 1) * (dim - 1) * r *
                                 num::adaptive_simpson(
                                     [&](double theta) {
                                       return std::pow(r * std::sin(theta), dim - 2);
                                     },
                                     0.0, 0.5 * pi, 1e-13)
                           : 0.0;
  if (!(P_target > P_min))
    throw std::invalid_argument("solve_cookie_R: perimeter target infeasible for this r");

  const auto perim = [&](double R) { return cookie_perimeter({r, R, dim}); };
  double hi = std::max(r, 1.0);
  while (perim(hi) < P_target) hi *= 2.0;
  double lo = 0.0;
  double mid = hi;
  for (int iter = 0; iter < 200; ++iter) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    const double P = perim(mid);
    if (std::abs(P - P_target) <= 1e-11 * P_target) return mid;
    (P < P_target ? lo : hi) = mid;
  }
  if (std::abs(perim(mid) - P_target) > 1e-10 * P_target)
    throw std::runtime_error("solve_cookie_R: bisection failed to reach tolerance");
  return mid;
}

double quermassintegral(const BoundaryMesh& mesh, int j) {
  if (mesh.samples.empty()) throw std::invalid_argument("quermassintegral: empty mesh");
  const int n = mesh.dim;
  if (j == 1) return mesh.perimeter() / n;
  if (j == 2) {
    std::vector<double> terms(mesh.size());
    for (std::size_t i = 0; i < mesh.size(); ++i)
      terms[i] = mesh.samples[i].weight * mesh.samples[i].H;
    return num::pairwise_sum(terms) / (n * (n - 1));
  }
  throw std::invalid_argument("quermassintegral: only j = 1, 2 are computed from meshes");
}

AFReport alexandrov_fenchel_check(const BoundaryMesh& mesh) {
  if (mesh.dim != 3)
    throw std::invalid_argument("alexandrov_fenchel_check: requires an n = 3 mesh");
  AFReport rep;
  rep.convex = mesh.min_H() >= 0.0;
  const double om = num::unit_ball_volume(3);
  rep.lhs = std::sqrt(quermassintegral(mesh, 1) / om);
  rep.rhs = quermassintegral(mesh, 2) / om;
  rep.equality_gap = rep.rhs - rep.lhs;
  rep.satisfied = rep.convex && rep.lhs <= rep.rhs + 1e-10;
  return rep;
}

BoundaryMesh make_circle(double R, std::size_t N) {
  if (!(R > 0.0)) throw std::invalid_argument("make_circle: R must be positive");
  ParametricCurve c;
  c.point = [R](double t) { return std::array<double, 2>{R * std::cos(t), R * std::sin(t)}; };
  c.velocity = [R](double t) { return std::array<double, 2>{-R * std::sin(t), R * std::cos(t)}; };
  c.acceleration = [R](double t) {
    return std::array<double, 2>{-R * std::cos(t), -R * std::sin(t)};
  };
  return discretize_parametric_curve(c, N, "circle");
}

BoundaryMesh make_ellipse(double a, double b, std::size_t N) {
  if (!(a > 0.0) || !(b > 0.0))
    throw std::invalid_argument("make_ellipse: semi-axes must be positive");
  ParametricCurve c;
  c.point = [a, b](double t) { return std::array<double, 2>{a * std::cos(t), b * std::sin(t)}; };
  c.velocity = [a, b](double t) {
    return std::array<double, 2>{-a * std::sin(t), b * std::cos(t)};
  };
  c.acceleration = [a, b](double t) {
    return std::array<double, 2>{-a * std::cos(t), -b * std::sin(t)};
  };
  return discretize_parametric_curve(c, N, a == b ? "circle" : "ellipse");
}

BoundaryMesh make_spheroid(double a, double c, std::size_t N_z, std::size_t N_theta) {
  if (!(a > 0.0) || !(c > 0.0))
    throw std::invalid_argument("make_spheroid: semi-axes must be positive");
  RevolutionProfile prof;
  prof.f = [a, c](double z) { return a * std::sqrt(1.0 - (z / c) * (z / c)); };
  prof.df = [a, c](double z) {
    return -a * z / (c * c * std::sqrt(1.0 - (z / c) * (z / c)));
  };
  prof.ddf = [a, c](double z) {
    const double g = std::sqrt(1.0 - (z / c) * (z / c));
    return -a / (c * c * g) - a * z * z / (c * c * c * c * g * g * g);
  };
  prof.z_lo = -c;
  prof.z_hi = c;
  return discretize_surface_of_revolution(prof, N_z, N_theta, a == c ? "sphere" : "spheroid");
}

void write_mesh_csv(const BoundaryMesh& mesh, std::ostream& os) {
  char buf[512];
  os << (mesh.dim == 3 ? "x,y,z,weight,H\n" : "x,y,weight,H\n");
  for (const auto& s : mesh.samples) {
    if (mesh.dim == 3)
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.pos[0], s.pos[1],
                    s.pos[2], s.weight, s.H);
    else
      std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", s.pos[0], s.pos[1], s.weight,
                    s.H);
    os << buf;
  }
}

}  // namespace thinshield
