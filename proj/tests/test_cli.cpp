#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using std::numbers::pi;

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args, bool raw = false) {
  const std::string cmd =
      (raw ? args : std::string(THINSHIELD_CLI_PATH) + " " + args) + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult res;
  char buf[4096];
  while (fgets(buf, sizeof buf, pipe)) res.out += buf;
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

double grab(const std::string& out, const std::string& key) {
  const auto pos = out.find(key + "=");
  REQUIRE(pos != std::string::npos);
  return std::stod(out.substr(pos + key.size() + 1));
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const fs::path kTmp = fs::temp_directory_path() / "thinshield_cli_test";

}  // namespace

TEST_CASE("optimize subcommand") {
  const auto dir = kTmp / "opt";
  fs::remove_all(dir);
  const auto res = run("optimize --shape circle --radius 1 --beta 1 --eps 0.1 "
                       "--mass 6.2831853 --samples 256 --out " + dir.string());
  CHECK(res.exit_code == 0);
  CHECK(grab(res.out, "value") == doctest::Approx(pi + 0.075 * pi).epsilon(1e-6));
  CHECK(res.out.find("regime=first-order") != std::string::npos);
  CHECK(fs::exists(dir / "mu.csv"));
  CHECK(fs::exists(dir / "optimize.json"));
  CHECK(fs::exists(dir / "mesh.csv"));
}

TEST_CASE("evaluate subcommand: bare boundary") {
  const auto dir = kTmp / "eval";
  const auto res = run("evaluate --shape circle --radius 1 --beta 1 --h-const 0 --out " +
                       dir.string());
  CHECK(res.exit_code == 0);
  CHECK(grab(res.out, "value") == doctest::Approx(2.0 * pi).epsilon(1e-12));
}

TEST_CASE("verify-radial subcommand") {
  const auto dir = kTmp / "radial";
  const auto res = run("verify-radial --n 2 --radius 1 --beta 1 --h 1 --eps 1e-1,1e-2,1e-3 --out " +
                       dir.string());
  CHECK(res.exit_code == 0);
  CHECK(std::abs(grab(res.out, "fitted_F1") - 0.75 * pi) <= 0.01 * 0.75 * pi);
  CHECK(fs::exists(dir / "expansion.csv"));
  const std::string csv = slurp(dir / "expansion.csv");
  CHECK(csv.rfind("eps,exact,model,remainder_ratio\n", 0) == 0);
}

TEST_CASE("verify-fiber subcommand") {
  const auto dir = kTmp / "fiber";
  const auto res = run("verify-fiber --shape ellipse --a 2 --b 1 --samples 512 --beta 1 "
                       "--h-const 0.7 --eps-list 1e-2,1e-3,1e-4 --out " + dir.string());
  CHECK(res.exit_code == 0);
  CHECK(grab(res.out, "slope_dev_at_smallest_eps") < 0.005);
}

TEST_CASE("cookie-sweep and concentration emit hashed artifacts") {
  const auto dir = kTmp / "sweep";
  fs::remove_all(dir);
  const auto res = run("cookie-sweep --beta 1 --eps 1e-4 --mass 1 --perimeter 10.2831853 "
                       "--r-list 0.5,0.1,0.01 --out " + dir.string());
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("decreasing=true") != std::string::npos);
  bool found_csv = false;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().filename().string().rfind("cookie_sweep_", 0) == 0 &&
        e.path().extension() == ".csv")
      found_csv = true;
  CHECK(found_csv);

  const auto conc = run("concentration --shape ellipse --a 2 --b 1 --samples 256 --beta 1 "
                        "--eps 0.05 --mass 1 --out " + (kTmp / "conc").string());
  CHECK(conc.exit_code == 0);
  CHECK(conc.out.find("anti_monotone=true") != std::string::npos);
}

TEST_CASE("ball-compare and af-check subcommands") {
  const auto bc = run("ball-compare --shape ellipse --a 2 --b 1 --samples 256 --beta 1 "
                      "--eps 0.01 --mass 1 --out " + (kTmp / "bc").string());
  CHECK(bc.exit_code == 0);
  CHECK(bc.out.find("satisfied=true") != std::string::npos);

  const auto af = run("af-check --shape sphere --radius 1 --samples 500 --out " +
                      (kTmp / "af").string());
  CHECK(af.exit_code == 0);
  CHECK(af.out.find("satisfied=true") != std::string::npos);
}

TEST_CASE("regime and validation errors exit with code 2") {
  CHECK(run("optimize --shape circle --radius 1 --beta 1 --eps 1 --mass 1").exit_code == 2);
  CHECK(run("optimize --shape hypercube --mass 1").exit_code == 2);
  CHECK(run("evaluate --shape circle --radius -3").exit_code == 2);
}

TEST_CASE("identical configs give bit-identical outputs, at any thread count") {
  const auto d1 = kTmp / "rep1";
  const auto d2 = kTmp / "rep2";
  const auto d3 = kTmp / "rep3";
  fs::remove_all(d1);
  fs::remove_all(d2);
  fs::remove_all(d3);
  const std::string args = "optimize --shape ellipse --a 2 --b 1 --samples 512 --beta 1 "
                           "--eps 0.05 --mass 1 --out ";
  CHECK(run(args + d1.string()).exit_code == 0);
  CHECK(run(args + d2.string()).exit_code == 0);
  CHECK(run("env THINSHIELD_THREADS=8 " + std::string(THINSHIELD_CLI_PATH) + " " + args +
            d3.string(), true).exit_code == 0);
  CHECK(slurp(d1 / "mu.csv") == slurp(d2 / "mu.csv"));
  CHECK(slurp(d1 / "optimize.json") == slurp(d2 / "optimize.json"));
  CHECK(slurp(d1 / "mu.csv") == slurp(d3 / "mu.csv"));
}

TEST_CASE("config file with flag overrides") {
  const auto dir = kTmp / "cfg";
  fs::create_directories(dir);
  const auto cfg_path = dir / "config.json";
  {
    std::ofstream cfg(cfg_path);
    cfg << R"({"command":"optimize",
               "shape":{"family":"circle","params":{"radius":1.0},"N":256},
               "physics":{"beta":1.0,"eps":0.1,"mass":6.2831853},
               "out":")" << (dir / "out_a").string() << R"("})";
  }
  const auto base = run("optimize --config " + cfg_path.string());
  CHECK(base.exit_code == 0);
  const double v_base = grab(base.out, "value");
  CHECK(v_base == doctest::Approx(pi + 0.075 * pi).epsilon(1e-6));

  // --eps overrides the config value
  const auto over = run("optimize --config " + cfg_path.string() + " --eps 0.2 --out " +
                        (dir / "out_b").string());
  CHECK(over.exit_code == 0);
  CHECK(grab(over.out, "value") == doctest::Approx(pi + 0.15 * pi).epsilon(1e-6));

  // mismatched command field is a validation error
  const auto bad = run("evaluate --config " + cfg_path.string());
  CHECK(bad.exit_code == 2);
}
