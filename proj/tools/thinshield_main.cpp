// Batch front end: every operation is exposed as a subcommand reading flags
// and/or a JSON config, writing CSV/JSON artifacts into --out.
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thinshield/experiments.hpp"
#include "thinshield/functionals.hpp"
#include "thinshield/geometry.hpp"
#include "thinshield/numerics.hpp"
#include "thinshield/optimizer.hpp"
#include "thinshield/oracle.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace thinshield;

namespace {

std::string fmt17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

struct ShapeConfig {
  std::string family = "circle";
  double radius = 1.0;
  double a = 2.0, b = 1.0;  // ellipse semi-axes
  double c = 2.0;           // spheroid polar semi-axis (equatorial = a)
  double r = 1.0, R = 1.0;  // cookie radii
  std::size_t N = 1024;
  std::size_t N_theta = 64;
};

BoundaryMesh build_shape(const ShapeConfig& s) {
  if (s.family == "circle") return make_circle(s.radius, s.N);
  if (s.family == "ellipse") return make_ellipse(s.a, s.b, s.N);
  if (s.family == "sphere") return discretize_sphere(s.radius, s.N);
  if (s.family == "spheroid") return make_spheroid(s.a, s.c, s.N, s.N_theta);
  if (s.family == "cookie") return cookie_boundary({s.r, s.R, 2}, s.N);
  throw std::invalid_argument("unknown shape family: " + s.family);
}

json shape_json(const ShapeConfig& s) {
  json p;
  if (s.family == "circle" || s.family == "sphere") p["radius"] = s.radius;
  if (s.family == "ellipse") p = {{"a", s.a}, {"b", s.b}};
  if (s.family == "spheroid") p = {{"a", s.a}, {"c", s.c}};
  if (s.family == "cookie") p = {{"r", s.r}, {"R", s.R}};
  json j = {{"family", s.family}, {"params", p}, {"N", s.N}};
  if (s.family == "spheroid") j["N_theta"] = s.N_theta;
  return j;
}

void load_shape(const json& cfg, ShapeConfig& s) {
  if (!cfg.contains("shape")) return;
  const json& sh = cfg.at("shape");
  if (sh.contains("family")) s.family = sh.at("family").get<std::string>();
  if (sh.contains("N")) s.N = sh.at("N").get<std::size_t>();
  if (sh.contains("N_theta")) s.N_theta = sh.at("N_theta").get<std::size_t>();
  if (sh.contains("params")) {
    const json& p = sh.at("params");
    if (p.contains("radius")) s.radius = p.at("radius").get<double>();
    if (p.contains("a")) s.a = p.at("a").get<double>();
    if (p.contains("b")) s.b = p.at("b").get<double>();
    if (p.contains("c")) s.c = p.at("c").get<double>();
    if (p.contains("r")) s.r = p.at("r").get<double>();
    if (p.contains("R")) s.R = p.at("R").get<double>();
  }
}

void load_physics(const json& cfg, double& beta, double& eps, double& mass) {
  if (!cfg.contains("physics")) return;
  const json& ph = cfg.at("physics");
  if (ph.contains("beta")) beta = ph.at("beta").get<double>();
  if (ph.contains("eps")) eps = ph.at("eps").get<double>();
  if (ph.contains("mass")) mass = ph.at("mass").get<double>();
}

json load_config(const std::string& path, const std::string& command) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  json cfg = json::parse(in);
  if (!cfg.is_object()) throw std::invalid_argument("config must be a JSON object: " + path);
  if (cfg.contains("command") && cfg.at("command").get<std::string>() != command)
    throw std::invalid_argument("config command '" + cfg.at("command").get<std::string>() +
                                "' does not match subcommand '" + command + "'");
  return cfg;
}

std::string config_hash(const json& j) {
  const std::string s = j.dump();
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016" PRIx64, h);
  return buf;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

template <typename Fn>
void write_stream(const fs::path& path, Fn&& fn) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  fn(out);
}

ThicknessField load_field(const BoundaryMesh& mesh, double h_const, const std::string& h_csv) {
  if (h_csv.empty()) return uniform_field(mesh, h_const);
  std::ifstream in(h_csv);
  if (!in) throw std::invalid_argument("cannot open thickness CSV: " + h_csv);
  return read_field_csv(mesh, in);
}

struct Common {
  std::string config_path;
  std::string out_dir = ".";
  ShapeConfig shape;
  double beta = 1.0;
  double eps = 0.1;
  double mass = 1.0;

  // The same flag storage backs every subcommand; only the parsed subcommand
  // can have nonzero counts, so presence is the OR over registered options.
  using Opts = std::vector<CLI::Option*>;
  Opts o_family, o_radius, o_a, o_b, o_c, o_r, o_R, o_N, o_Nth, o_beta, o_eps, o_mass, o_out;

  ShapeConfig flag_shape;
  double flag_beta = 1.0, flag_eps = 0.1, flag_mass = 1.0;
  std::string flag_out;

  static bool given(const Opts& opts) {
    for (const auto* o : opts)
      if (o->count() > 0) return true;
    return false;
  }

  void add_shape(CLI::App* cmd) {
    o_family.push_back(cmd->add_option("--shape", flag_shape.family,
                                       "shape family: circle|ellipse|sphere|spheroid|cookie"));
    o_radius.push_back(cmd->add_option("--radius", flag_shape.radius, "circle/sphere radius"));
    o_a.push_back(cmd->add_option("--a", flag_shape.a, "ellipse/spheroid equatorial semi-axis"));
    o_b.push_back(cmd->add_option("--b", flag_shape.b, "ellipse second semi-axis"));
    o_c.push_back(cmd->add_option("--c", flag_shape.c, "spheroid polar semi-axis"));
    o_r.push_back(cmd->add_option("--r", flag_shape.r, "cookie edge radius"));
    o_R.push_back(cmd->add_option("--R", flag_shape.R, "cookie flat radius"));
    o_N.push_back(cmd->add_option("--samples", flag_shape.N, "boundary sample count"));
    o_Nth.push_back(cmd->add_option("--ntheta", flag_shape.N_theta, "angular samples (spheroid)"));
  }
  void add_physics(CLI::App* cmd, bool with_mass) {
    o_beta.push_back(cmd->add_option("--beta", flag_beta, "heat-transfer coefficient"));
    o_eps.push_back(cmd->add_option("--eps", flag_eps, "layer-scale parameter"));
    if (with_mass)
      o_mass.push_back(cmd->add_option("--mass", flag_mass, "insulator mass budget"));
  }
  void add_io(CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config; flags override its fields");
    o_out.push_back(cmd->add_option("--out", flag_out, "output directory (default .)"));
  }

  // defaults -> config file -> flags that were actually given
  json resolve(const std::string& command) {
    const json cfg = load_config(config_path, command);
    load_shape(cfg, shape);
    load_physics(cfg, beta, eps, mass);
    if (cfg.contains("out")) out_dir = cfg.at("out").get<std::string>();

    if (given(o_family)) shape.family = flag_shape.family;
    if (given(o_radius)) shape.radius = flag_shape.radius;
    if (given(o_a)) shape.a = flag_shape.a;
    if (given(o_b)) shape.b = flag_shape.b;
    if (given(o_c)) shape.c = flag_shape.c;
    if (given(o_r)) shape.r = flag_shape.r;
    if (given(o_R)) shape.R = flag_shape.R;
    if (given(o_N)) shape.N = flag_shape.N;
    if (given(o_Nth)) shape.N_theta = flag_shape.N_theta;
    if (given(o_beta)) beta = flag_beta;
    if (given(o_eps)) eps = flag_eps;
    if (given(o_mass)) mass = flag_mass;
    if (given(o_out)) out_dir = flag_out;
    fs::create_directories(out_dir);
    return cfg;
  }
};

int run_evaluate(Common& c, double h_const, const std::string& h_csv, bool eps_given) {
  c.resolve("evaluate");
  const BoundaryMesh mesh = build_shape(c.shape);
  const ThicknessField h = load_field(mesh, h_const, h_csv);
  const double eps = eps_given ? c.eps : 0.0;  // pure F0 unless asked otherwise
  const double F0 = eval_F0(mesh, h, c.beta);
  const double F1 = eval_F1(mesh, h, c.beta);
  const double value = eval_Geps(mesh, h, c.beta, eps);
  json j = {{"command", "evaluate"}, {"shape", shape_json(c.shape)},
            {"beta", c.beta},        {"eps", eps},
            {"F0", F0},              {"F1", F1},
            {"value", value},        {"field_mass", h.mass}};
  write_text(fs::path(c.out_dir) / "evaluate.json", j.dump(2) + "\n");
  write_stream(fs::path(c.out_dir) / "mesh.csv", [&](std::ostream& os) { write_mesh_csv(mesh, os); });
  std::cout << "value=" << fmt17(value) << " F0=" << fmt17(F0) << " F1=" << fmt17(F1) << "\n";
  return 0;
}

int run_optimize(Common& c) {
  c.resolve("optimize");
  const BoundaryMesh mesh = build_shape(c.shape);
  const PhysicsParams params{c.beta, c.eps, c.mass};
  const OptimalLayer layer = optimize(mesh, params);
  json j = optimizer_report_json(layer);
  j["command"] = "optimize";
  j["shape"] = shape_json(c.shape);
  j["physics"] = {{"beta", c.beta}, {"eps", c.eps}, {"mass", c.mass}};
  write_text(fs::path(c.out_dir) / "optimize.json", j.dump(2) + "\n");
  write_stream(fs::path(c.out_dir) / "mu.csv",
               [&](std::ostream& os) { write_field_csv(layer.mu, os); });
  write_stream(fs::path(c.out_dir) / "mesh.csv", [&](std::ostream& os) { write_mesh_csv(mesh, os); });
  std::cout << "value=" << fmt17(layer.value) << " k_m=" << fmt17(layer.k_m)
            << " mass_residual=" << fmt17(layer.mass_residual)
            << " regime=" << regime_name(layer.regime) << "\n";
  return 0;
}

int run_verify_radial(Common& c, int n, double h, std::vector<double>& eps_list) {
  const json cfg = load_config(c.config_path, "verify-radial");
  if (cfg.contains("radial")) {
    const json& r = cfg.at("radial");
    if (r.contains("n")) n = r.at("n").get<int>();
    if (r.contains("radius")) c.shape.radius = r.at("radius").get<double>();
    if (r.contains("h")) h = r.at("h").get<double>();
  }
  load_physics(cfg, c.beta, c.eps, c.mass);
  if (cfg.contains("sweep") && cfg.at("sweep").contains("eps_list") && eps_list.empty())
    eps_list = cfg.at("sweep").at("eps_list").get<std::vector<double>>();
  if (cfg.contains("out")) c.out_dir = cfg.at("out").get<std::string>();
  if (Common::given(c.o_radius)) c.shape.radius = c.flag_shape.radius;
  if (Common::given(c.o_beta)) c.beta = c.flag_beta;
  if (Common::given(c.o_out)) c.out_dir = c.flag_out;
  fs::create_directories(c.out_dir);
  if (eps_list.empty()) eps_list = {1e-1, 1e-2, 1e-3};

  const ExpansionReport rep = radial_expansion_check(n, c.shape.radius, c.beta, h, eps_list);
  json j = expansion_json(rep);
  j["command"] = "verify-radial";
  j["radial"] = {{"n", n}, {"radius", c.shape.radius}, {"h", h}, {"beta", c.beta}};
  write_text(fs::path(c.out_dir) / "expansion.json", j.dump(2) + "\n");
  write_stream(fs::path(c.out_dir) / "expansion.csv",
               [&](std::ostream& os) { write_expansion_csv(rep, os); });
  double max_ratio = 0.0;
  for (double r : rep.remainder_ratios) max_ratio = std::max(max_ratio, std::abs(r));
  std::cout << "fitted_F0=" << fmt17(rep.fitted_F0) << " fitted_F1=" << fmt17(rep.fitted_F1)
            << " analytic_F0=" << fmt17(rep.analytic_F0)
            << " analytic_F1=" << fmt17(rep.analytic_F1)
            << " max_abs_remainder_ratio=" << fmt17(max_ratio) << "\n";
  return 0;
}

int run_verify_fiber(Common& c, double h_const, const std::string& h_csv,
                     std::vector<double>& eps_list) {
  const json cfg = c.resolve("verify-fiber");
  if (cfg.contains("sweep") && cfg.at("sweep").contains("eps_list") && eps_list.empty())
    eps_list = cfg.at("sweep").at("eps_list").get<std::vector<double>>();
  if (eps_list.empty()) eps_list = {1e-2, 1e-3, 1e-4};

  const BoundaryMesh mesh = build_shape(c.shape);
  const ThicknessField h = load_field(mesh, h_const, h_csv);
  const double F0 = eval_F0(mesh, h, c.beta);
  const double F1 = eval_F1(mesh, h, c.beta);
  json rows = json::array();
  std::string csv = "eps,fiber,model,remainder_ratio\n";
  double slope_dev = 0.0;
  for (double e : eps_list) {
    const double fib = fiber_energy(mesh, h, c.beta, e);
    const double model = F0 + e * F1;
    const double ratio = (fib - model) / (e * e);
    rows.push_back({{"eps", e}, {"fiber", fib}, {"model", model}, {"remainder_ratio", ratio}});
    csv += fmt17(e) + "," + fmt17(fib) + "," + fmt17(model) + "," + fmt17(ratio) + "\n";
    slope_dev = std::abs((fib - F0) / e - F1);
  }
  json j = {{"command", "verify-fiber"}, {"shape", shape_json(c.shape)},
            {"beta", c.beta},            {"F0", F0},
            {"F1", F1},                  {"rows", rows}};
  write_text(fs::path(c.out_dir) / "fiber.json", j.dump(2) + "\n");
  write_text(fs::path(c.out_dir) / "fiber.csv", csv);
  const double rel = std::abs(F1) > 0 ? slope_dev / std::abs(F1) : slope_dev;
  std::cout << "F0=" << fmt17(F0) << " F1=" << fmt17(F1)
            << " slope_dev_at_smallest_eps=" << fmt17(rel) << "\n";
  return 0;
}

int run_cookie_sweep(Common& c, double perimeter, std::vector<double>& r_list) {
  const json cfg = c.resolve("cookie-sweep");
  if (cfg.contains("sweep")) {
    const json& sw = cfg.at("sweep");
    if (sw.contains("perimeter") && perimeter == 0.0)
      perimeter = sw.at("perimeter").get<double>();
    if (sw.contains("r_list") && r_list.empty())
      r_list = sw.at("r_list").get<std::vector<double>>();
  }
  if (perimeter == 0.0) perimeter = 4.0 + 2.0 * std::numbers::pi;
  if (r_list.empty()) r_list = {0.5, 0.1, 0.01, 0.001};

  const PhysicsParams params{c.beta, c.eps, c.mass};
  const auto rows = cookie_sweep(perimeter, params, r_list, c.shape.N);
  json id = {{"command", "cookie-sweep"},
             {"perimeter", perimeter},
             {"r_list", r_list},
             {"physics", {{"beta", c.beta}, {"eps", c.eps}, {"mass", c.mass}}},
             {"N", c.shape.N}};
  const std::string tag = config_hash(id);
  json j = id;
  j["rows"] = cookie_sweep_json(rows);
  write_text(fs::path(c.out_dir) / ("cookie_sweep_" + tag + ".json"), j.dump(2) + "\n");
  write_stream(fs::path(c.out_dir) / ("cookie_sweep_" + tag + ".csv"),
               [&](std::ostream& os) { write_cookie_sweep_csv(rows, os); });
  bool decreasing = true;
  for (std::size_t i = 1; i < rows.size(); ++i)
    decreasing = decreasing && rows[i].gap < rows[i - 1].gap;
  std::cout << "rows=" << rows.size() << " gap_first=" << fmt17(rows.front().gap)
            << " gap_last=" << fmt17(rows.back().gap)
            << " decreasing=" << (decreasing ? "true" : "false") << "\n";
  return 0;
}

int run_ball_compare(Common& c) {
  const json cfg = c.resolve("ball-compare");
  (void)cfg;
  const BoundaryMesh mesh = build_shape(c.shape);
  const PhysicsParams params{c.beta, c.eps, c.mass};
  const BallCompareReport rep = ball_compare(mesh, params);
  json id = {{"command", "ball-compare"},
             {"shape", shape_json(c.shape)},
             {"physics", {{"beta", c.beta}, {"eps", c.eps}, {"mass", c.mass}}}};
  json j = ball_compare_json(rep);
  j["config"] = id;
  write_text(fs::path(c.out_dir) / ("ball_compare_" + config_hash(id) + ".json"),
             j.dump(2) + "\n");
  std::cout << "G_shape=" << fmt17(rep.G_shape) << " G_ball=" << fmt17(rep.G_ball)
            << " hypothesis=\"" << rep.hypothesis_status << "\""
            << " satisfied=" << (rep.satisfied ? "true" : "false") << "\n";
  if (!rep.comparison_done) {
    std::cerr << rep.detail << "\n";
    return 2;
  }
  return 0;
}

int run_af_check(Common& c) {
  c.resolve("af-check");
  const BoundaryMesh mesh = build_shape(c.shape);
  const AFReport rep = alexandrov_fenchel_check(mesh);
  json j = {{"command", "af-check"},
            {"shape", shape_json(c.shape)},
            {"lhs", rep.lhs},
            {"rhs", rep.rhs},
            {"equality_gap", rep.equality_gap},
            {"satisfied", rep.satisfied},
            {"convex", rep.convex}};
  write_text(fs::path(c.out_dir) / "af_check.json", j.dump(2) + "\n");
  std::cout << "lhs=" << fmt17(rep.lhs) << " rhs=" << fmt17(rep.rhs)
            << " gap=" << fmt17(rep.equality_gap)
            << " satisfied=" << (rep.satisfied ? "true" : "false") << "\n";
  if (!rep.convex) {
    std::cerr << "nonconvex mesh (negative curvature sample): inequality check skipped\n";
    return 2;
  }
  return 0;
}

int run_concentration(Common& c) {
  const json cfg = c.resolve("concentration");
  (void)cfg;
  const BoundaryMesh mesh = build_shape(c.shape);
  const PhysicsParams params{c.beta, c.eps, c.mass};
  const ConcentrationProfile prof = concentration_profile(mesh, params);
  json id = {{"command", "concentration"},
             {"shape", shape_json(c.shape)},
             {"physics", {{"beta", c.beta}, {"eps", c.eps}, {"mass", c.mass}}}};
  const std::string tag = config_hash(id);
  json j = {{"config", id},
            {"violations", prof.violations},
            {"anti_monotone", prof.anti_monotone},
            {"regime", regime_name(prof.layer.regime)},
            {"k_m", prof.layer.k_m},
            {"value", prof.layer.value}};
  write_text(fs::path(c.out_dir) / ("concentration_" + tag + ".json"), j.dump(2) + "\n");
  write_stream(fs::path(c.out_dir) / ("concentration_" + tag + ".csv"),
               [&](std::ostream& os) { write_profile_csv(prof, os); });
  std::cout << "active=" << prof.layer.el.active_count << " violations=" << prof.violations
            << " anti_monotone=" << (prof.anti_monotone ? "true" : "false")
            << " regime=" << regime_name(prof.layer.regime) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* env = std::getenv("THINSHIELD_THREADS"))
    thinshield::num::set_max_threads(static_cast<unsigned>(std::strtoul(env, nullptr, 10)));

  CLI::App app{
      "thinshield: optimal thin insulating layers on boundary meshes.\n"
      "CSV contracts: mesh.csv x,y[,z],weight,H; mu.csv single column h in\n"
      "mesh sample order; expansion/fiber CSV eps,exact|fiber,model,\n"
      "remainder_ratio; cookie sweep r,R,G_eps,gap,G_opt,regime; profile H,mu."};
  app.require_subcommand(1);

  Common c;
  double h_const = 0.0;
  std::string h_csv;
  int radial_n = 2;
  double radial_h = 1.0;
  std::vector<double> eps_list;
  std::vector<double> r_list;
  double sweep_perimeter = 0.0;

  auto* cmd_eval = app.add_subcommand("evaluate", "evaluate F0, F1 and G_eps for a given field");
  c.add_shape(cmd_eval);
  c.add_physics(cmd_eval, false);
  c.add_io(cmd_eval);
  cmd_eval->add_option("--h-const", h_const, "constant thickness");
  cmd_eval->add_option("--h-csv", h_csv, "thickness CSV aligned with mesh order");

  auto* cmd_opt = app.add_subcommand("optimize", "mass-constrained optimal layer");
  c.add_shape(cmd_opt);
  c.add_physics(cmd_opt, true);
  c.add_io(cmd_opt);

  auto* cmd_vr = app.add_subcommand("verify-radial", "exact Robin annulus/shell expansion check");
  cmd_vr->set_help_flag("--help", "print help");  // frees -h for the thickness flag
  cmd_vr->add_option("--n", radial_n, "ambient dimension (>= 2)");
  c.o_radius.push_back(cmd_vr->add_option("--radius", c.flag_shape.radius, "ball radius"));
  cmd_vr->add_option("--h", radial_h, "constant layer thickness");
  c.o_beta.push_back(cmd_vr->add_option("--beta", c.flag_beta, "heat-transfer coefficient"));
  cmd_vr->add_option("--eps", eps_list, "decreasing eps list")->delimiter(',');
  cmd_vr->add_option("--config", c.config_path, "JSON config");
  c.o_out.push_back(cmd_vr->add_option("--out", c.flag_out, "output directory"));

  auto* cmd_vf = app.add_subcommand("verify-fiber", "fiber oracle vs F0 + eps*F1");
  c.add_shape(cmd_vf);
  c.add_physics(cmd_vf, false);
  c.add_io(cmd_vf);
  cmd_vf->add_option("--h-const", h_const, "constant thickness");
  cmd_vf->add_option("--h-csv", h_csv, "thickness CSV aligned with mesh order");
  cmd_vf->add_option("--eps-list", eps_list, "decreasing eps list")->delimiter(',');

  auto* cmd_cs = app.add_subcommand("cookie-sweep", "thin cookie shapes at fixed perimeter");
  c.add_physics(cmd_cs, true);
  c.add_io(cmd_cs);
  cmd_cs->add_option("--perimeter", sweep_perimeter, "target perimeter");
  cmd_cs->add_option("--r-list", r_list, "decreasing edge radii")->delimiter(',');
  c.o_N.push_back(cmd_cs->add_option("--samples", c.flag_shape.N, "cookie mesh sample count"));

  auto* cmd_bc = app.add_subcommand("ball-compare", "shape vs equal-perimeter circle");
  c.add_shape(cmd_bc);
  c.add_physics(cmd_bc, true);
  c.add_io(cmd_bc);

  auto* cmd_af = app.add_subcommand("af-check", "Alexandrov-Fenchel inequality on a 3-D mesh");
  c.add_shape(cmd_af);
  c.add_io(cmd_af);

  auto* cmd_cn = app.add_subcommand("concentration", "curvature vs thickness profile");
  c.add_shape(cmd_cn);
  c.add_physics(cmd_cn, true);
  c.add_io(cmd_cn);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad flags are validation errors
  }

  try {
    if (cmd_eval->parsed()) return run_evaluate(c, h_const, h_csv, Common::given(c.o_eps));
    if (cmd_opt->parsed()) return run_optimize(c);
    if (cmd_vr->parsed()) return run_verify_radial(c, radial_n, radial_h, eps_list);
    if (cmd_vf->parsed()) return run_verify_fiber(c, h_const, h_csv, eps_list);
    if (cmd_cs->parsed()) return run_cookie_sweep(c, sweep_perimeter, r_list);
    if (cmd_bc->parsed()) return run_ball_compare(c);
    if (cmd_af->parsed()) return run_af_check(c);
    if (cmd_cn->parsed()) return run_concentration(c);
  } catch (const RegimeError& e) {
    std::cerr << "regime error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
