#pragma once
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace thinshield::num {

// Fixed-order pairwise reduction; bit-reproducible for a given input order,
// regardless of how the values were produced (serially or in parallel).
double pairwise_sum(std::span<const double> v);

// Nodes and weights of the q-point Gauss-Legendre rule on [-1, 1].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
};
const Quadrature& gauss_legendre(int q);

// Adaptive Simpson quadrature of f on [a, b] to relative tolerance rtol.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                        double rtol, int max_depth = 48);

// Volume omega_n of the unit ball in R^n.
double unit_ball_volume(int n);

// Thread cap for parallel_for. 0 selects hardware concurrency.
void set_max_threads(unsigned t);
unsigned max_threads();

// Runs fn(begin, end) over a block partition of [0, n). Callers must write
// results by index so the partition cannot affect the output.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace thinshield::num
