#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace growthlab::quad {

using Complex = std::complex<double>;

/// Circle contour for (1/2*pi*i) closed integrals: center, radius, starting node count.
struct ContourSpec {
  Complex center{0.0, 0.0};
  double radius = 0.4;
  int nodes = 64;
};

/// Shared quadrature settings. r0/r1 are the radii of the circles about 0
/// and 1 used by the finite-time kernel; disjointness requires r0 + r1 < 1.
struct QuadConfig {
  double rel_tol = 1e-10;
  int max_nodes = 1 << 16;
  double r0 = 0.4;
  double r1 = 0.4;
  int start_nodes = 64;

  void validate() const {
    if (rel_tol < 1e-14) throw std::invalid_argument("rel_tol below 1e-14");
    if (r0 <= 0 || r1 <= 0) throw std::invalid_argument("contour radius must be positive");
    if (r0 + r1 >= 1.0) throw std::invalid_argument("contours overlap: r0 + r1 >= 1");
    if (start_nodes < 8) throw std::invalid_argument("start_nodes < 8");
    if (max_nodes < start_nodes) throw std::invalid_argument("max_nodes < start_nodes");
  }
};

struct QuadResult {
  Complex value;
  int nodes_used = 0;
};

/// Raised when node doubling hits max_nodes without meeting rel_tol.
/// Carries the last two iterates for diagnosis.
class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(Complex prev, Complex last, int nodes)
      : std::runtime_error("quadrature did not converge at " + std::to_string(nodes) +
                           " nodes; last two values (" + std::to_string(prev.real()) + "," +
                           std::to_string(prev.imag()) + ") and (" + std::to_string(last.real()) +
                           "," + std::to_string(last.imag()) + ")"),
        prev_value(prev),
        last_value(last),
        nodes(nodes) {}
  Complex prev_value;
  Complex last_value;
  int nodes;
};

/// Integer power by repeated squaring; handles negative exponents.
template <typename T>
T ipow(T base, int e) {
  if (e < 0) return T(1.0) / ipow(base, -e);
  T r(1.0);
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

inline bool quad_converged(Complex prev, Complex cur, double rel_tol) {
  return std::abs(cur - prev) <= rel_tol * std::max(1.0, std::abs(cur));
}

/// Fixed-node trapezoid value of (1/2*pi*i) * closed circle integral of f.
template <typename F>
Complex circle_sum(F&& f, Complex center, double radius, int nodes) {
  Complex acc{0.0, 0.0};
  const double step = 2.0 * std::numbers::pi / nodes;
  for (int k = 0; k < nodes; ++k) {
    const double th = step * k;
    const Complex dir{radius * std::cos(th), radius * std::sin(th)};
    acc += f(center + dir) * dir;
  }
  return acc / static_cast<double>(nodes);
}

/// (1/2*pi*i) closed circle integral with node doubling until rel_tol.
template <typename F>
QuadResult circle_quadrature(F&& f, const ContourSpec& c, double rel_tol, int max_nodes) {
  int m = c.nodes;
  Complex prev = circle_sum(f, c.center, c.radius, m);
  while (2 * m <= max_nodes) {
    m *= 2;
    const Complex cur = circle_sum(f, c.center, c.radius, m);
    if (quad_converged(prev, cur, rel_tol)) return {cur, m};
    prev = cur;
  }
  throw QuadratureError(prev, circle_sum(f, c.center, c.radius, std::min(2 * m, max_nodes)), m);
}

/// Gauss-Legendre nodes/weights on [-1,1]; cached per order.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int order);

/// Integral of f over [a,b] by Gauss-Legendre with order doubling.
template <typename F>
QuadResult line_quadrature(F&& f, double a, double b, double rel_tol, int max_nodes,
                           int start_nodes = 32) {
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  auto at_order = [&](int m) {
    const auto& [xs, ws] = gauss_legendre(m);
    Complex acc{0.0, 0.0};
    for (int k = 0; k < m; ++k) acc += f(mid + half * xs[k]) * ws[k];
    return acc * half;
  };
  int m = start_nodes;
  Complex prev = at_order(m);
  while (2 * m <= max_nodes) {
    m *= 2;
    const Complex cur = at_order(m);
    if (quad_converged(prev, cur, rel_tol)) return {cur, m};
    prev = cur;
  }
  throw QuadratureError(prev, at_order(std::min(2 * m, max_nodes)), m);
}

}  // namespace growthlab::quad
