#include "thinshield/oracle.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

#include "thinshield/numerics.hpp"

namespace thinshield {

using std::numbers::pi;

namespace {

double sphere_measure(int n, double r) {  // H^{n-1} measure of the radius-r sphere
  return n * num::unit_ball_volume(n) * std::pow(r, n - 1);
}

// Minimum of eps*int_0^T u'^2 (1+tH) dt + beta u(T)^2 (1+TH) over u(0) = 1;
// the minimizer has u' = c/(1+tH). Per unit boundary measure.
double fiber_density(double T, double H, double beta, double eps) {
  if (T == 0.0) return beta;
  const double x = T * H;
  if (!(1.0 + x > 0.0))
    throw std::invalid_argument("fiber density: nonpositive Jacobian 1 + eps*h*H");
  // lnr = ln(1+TH)/H; series for small TH keeps the flat (H = 0) limit exact.
  const double lnr = (std::abs(x) < 1e-6)
                         ? T * (1.0 - x * (0.5 - x * (1.0 / 3.0 - x * 0.25)))
                         : std::log1p(x) / H;
  const double c = -beta / (eps / (1.0 + x) + beta * lnr);
  const double u_T = 1.0 + c * lnr;
  return eps * c * c * lnr + beta * u_T * u_T * (1.0 + x);
}

// Energy of the order-1/2 recovery profile on one fiber, with the t-integrals
// carried out exactly.
double recovery_density(double h, double H, double beta, double eps, int order) {
  const double T = eps * h;
  if (T == 0.0) return beta;
  const double x = T * H;
  if (!(1.0 + x > 0.0))
    throw std::invalid_argument("recovery density: nonpositive Jacobian 1 + eps*h*H");
  const double d = 1.0 + beta * h;
  const double A = beta / (eps * d);  // -phi'(0)
  if (order == 1) {
    const double grad = eps * A * A * (T + 0.5 * T * T * H);
    const double u_T = 1.0 - A * T;
    return grad + beta * u_T * u_T * (1.0 + x);
  }
  if (order == 2) {
    const double B = H / d;
    // phi'(t)^2 = A^2 (1 + Bt)^2; integrate against (1 + tH).
    const double grad =
        eps * A * A *
        (T + 0.5 * T * T * (2.0 * B + H) + T * T * T * (B * B + 2.0 * B * H) / 3.0 +
         0.25 * T * T * T * T * B * B * H);
    const double u_T = 1.0 - A * T - 0.5 * A * B * T * T;
    return grad + beta * u_T * u_T * (1.0 + x);
  }
  throw std::invalid_argument("recovery_energy: order must be 1 or 2");
}

}  // namespace

double radial_exact_energy(const RadialProblem& p) {
  if (p.n < 2) throw std::invalid_argument("radial_exact_energy: n must be >= 2");
  if (!(p.R > 0.0) || !(p.beta > 0.0) || !(p.eps > 0.0))
    throw std::invalid_argument("radial_exact_energy: R, beta, eps must be positive");
  if (!(p.h >= 0.0)) throw std::invalid_argument("radial_exact_energy: h must be nonnegative");
  const double surf = sphere_measure(p.n, p.R);
  if (p.eps * p.h == 0.0) return p.beta * surf;  // bare boundary, u = 1

  const double rho = p.R + p.eps * p.h;
  if (p.n == 2) {
    const double L = std::log(rho / p.R);
    const double c = -p.beta / (p.eps / rho + p.beta * L);
    const double u = 1.0 + c * L;
    return p.eps * 2.0 * pi * c * c * L + p.beta * 2.0 * pi * rho * u * u;
  }
  const int n = p.n;
  const double G = (std::pow(p.R, 2 - n) - std::pow(rho, 2 - n)) / (n - 2);
  const double c = -p.beta / (p.eps * std::pow(rho, 1 - n) + p.beta * G);
  const double u = 1.0 + c * G;
  const double s = n * num::unit_ball_volume(n);
  return p.eps * c * c * s * G + p.beta * s * std::pow(rho, n - 1) * u * u;
}

ExpansionReport radial_expansion_check(int n, double R, double beta, double h,
                                       std::span<const double> eps_list) {
  if (eps_list.size() < 3)
    throw std::invalid_argument("radial_expansion_check: need at least 3 eps values");
  for (std::size_t i = 1; i < eps_list.size(); ++i)
    if (!(eps_list[i] < eps_list[i - 1]))
      throw std::invalid_argument("radial_expansion_check: eps list must be decreasing");
  for (double e : eps_list)
    if (!(e * h < R))
      throw std::invalid_argument(
          "radial_expansion_check: eps*h >= R breaks the thin-layer geometry");

  ExpansionReport rep;
  rep.eps_list.assign(eps_list.begin(), eps_list.end());
  const double surf = sphere_measure(n, R);
  const double H = (n - 1) / R;
  const double d = 1.0 + beta * h;
  rep.analytic_F0 = beta * surf / d;
  rep.analytic_F1 = beta * surf * H * h * (2.0 + beta * h) / (2.0 * d * d);
  for (double e : eps_list)
    rep.exact_energies.push_back(radial_exact_energy({n, R, beta, e, h}));
  for (std::size_t i = 0; i < rep.eps_list.size(); ++i) {
    const double e = rep.eps_list[i];
    rep.remainder_ratios.push_back(
        (rep.exact_energies[i] - rep.analytic_F0 - e * rep.analytic_F1) / (e * e));
  }
  const std::size_t last = rep.eps_list.size() - 1;
  const double e1 = rep.eps_list[last - 1], e2 = rep.eps_list[last];
  const double F1 = rep.exact_energies[last - 1], F2 = rep.exact_energies[last];
  rep.fitted_F1 = (F1 - F2) / (e1 - e2);
  rep.fitted_F0 = F2 - e2 * rep.fitted_F1;
  return rep;
}

double fiber_energy(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps) {
  if (h.values.size() != mesh.size())
    throw std::invalid_argument("fiber_energy: field not aligned with the mesh");
  // Validate before the parallel region; worker threads must not throw.
  for (std::size_t i = 0; i < mesh.size(); ++i)
    if (!(1.0 + eps * h.values[i] * mesh.samples[i].H > 0.0))
      throw std::invalid_argument("fiber_energy: nonpositive Jacobian 1 + eps*h*H at sample " +
                                  std::to_string(i));
  std::vector<double> terms(mesh.size());
  num::parallel_for(mesh.size(), [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i)
      terms[i] =
          mesh.samples[i].weight * fiber_density(eps * h.values[i], mesh.samples[i].H, beta, eps);
  });
  return num::pairwise_sum(terms);
}

double recovery_energy(const BoundaryMesh& mesh, const ThicknessField& h, double beta, double eps,
                       int order) {
  if (h.values.size() != mesh.size())
    throw std::invalid_argument("recovery_energy: field not aligned with the mesh");
  std::vector<double> terms(mesh.size());
  for (std::size_t i = 0; i < mesh.size(); ++i)
    terms[i] =
        mesh.samples[i].weight * recovery_density(h.values[i], mesh.samples[i].H, beta, eps, order);
  return num::pairwise_sum(terms);
}

nlohmann::json expansion_json(const ExpansionReport& rep) {
  nlohmann::json j;
  j["eps_list"] = rep.eps_list;
  j["exact_energies"] = rep.exact_energies;
  j["remainder_ratios"] = rep.remainder_ratios;
  j["fitted_F0"] = rep.fitted_F0;
  j["fitted_F1"] = rep.fitted_F1;
  j["analytic_F0"] = rep.analytic_F0;
  j["analytic_F1"] = rep.analytic_F1;
  return j;
}

void write_expansion_csv(const ExpansionReport& rep, std::ostream& os) {
  char buf[256];
  os << "eps,exact,model,remainder_ratio\n";
  for (std::size_t i = 0; i < rep.eps_list.size(); ++i) {
    const double model = rep.analytic_F0 + rep.eps_list[i] * rep.analytic_F1;
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g\n", rep.eps_list[i],
                  rep.exact_energies[i], model, rep.remainder_ratios[i]);
    os << buf;
  }
}

}  // namespace thinshield
