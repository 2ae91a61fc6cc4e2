#include "thinshield/numerics.hpp"

#include <atomic>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace thinshield::num {

double pairwise_sum(std::span<const double> v) {
  const std::size_t n = v.size();
  if (n <= 8) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(v.first(half)) + pairwise_sum(v.subspan(half));
}

const Quadrature& gauss_legendre(int q) {
  if (q < 2 || q > 128) throw std::invalid_argument("gauss_legendre: order out of range");
  static std::map<int, Quadrature> cache;
  static std::mutex mtx;
  std::lock_guard lock(mtx);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;

  Quadrature rule;
  rule.nodes.resize(q);
  rule.weights.resize(q);
  const int m = (q + 1) / 2;
  for (int i = 0; i < m; ++i) {
    // Newton iteration on P_q from the Chebyshev initial guess.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (q + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 64; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int j = 2; j <= q; ++j) {
        const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = q * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    rule.nodes[i] = -x;
    rule.nodes[q - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.weights[i] = w;
    rule.weights[q - 1 - i] = w;
  }
  return cache.emplace(q, std::move(rule)).first->second;
}

namespace {

double simpson(double fa, double fm, double fb, double a, double b) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_step(const std::function<double(double)>& f, double a, double b, double fa,
                     double fm, double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  const double flm = f(lm), frm = f(rm);
  const double left = simpson(fa, flm, fm, a, m);
  const double right = simpson(fm, frm, fb, m, b);
  const double err = left + right - whole;
  if (depth <= 0 || std::abs(err) <= 15.0 * tol) return left + right + err / 15.0;
  return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

}  // namespace

double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double rtol,
                        int max_depth) {
  const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  const double whole = simpson(fa, fm, fb, a, b);
  const double tol = rtol * std::max(std::abs(whole), 1e-300) + 1e-300;
  return adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth);
}

double unit_ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: n must be positive");
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

namespace {
std::atomic<unsigned> g_max_threads{1};
}

void set_max_threads(unsigned t) { g_max_threads.store(t); }

unsigned max_threads() {
  unsigned t = g_max_threads.load();
  if (t == 0) {
    t = std::thread::hardware_concurrency();
    if (t == 0) t = 1;
  }
  return t;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn) {
  const unsigned threads = max_threads();
  constexpr std::size_t grain = 1024;
  if (threads <= 1 || n < 2 * grain) {
    fn(0, n);
    return;
  }
  const std::size_t blocks = std::min<std::size_t>(threads, (n + grain - 1) / grain);
  const std::size_t chunk = (n + blocks - 1) / blocks;
  std::vector<std::thread> pool;
  pool.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b) {
    const std::size_t lo = b * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(fn, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace thinshield::num
