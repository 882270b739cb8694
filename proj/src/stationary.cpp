#include "growthlab/stationary.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace growthlab::stationary {

namespace {
constexpr double kPi = std::numbers::pi;
}

Slope Slope::make(double pa, double pb, double pc) {
  if (pa < 0 || pb < 0 || pc < 0) throw std::invalid_argument("slope proportions must be >= 0");
  const double sum = pa + pb + pc;
  if (std::abs(sum - 1.0) > 1e-9) throw std::invalid_argument("slope proportions must sum to 1");
  return Slope{pa / sum, pb / sum, pc / sum};
}

double Slope::theta_a() const { return kPi * p_a; }
double Slope::theta_b() const { return kPi * p_b; }
double Slope::theta_c() const { return kPi * p_c; }

Weights Weights::make(double a, double b, double c) {
  if (a <= 0 || b <= 0 || c <= 0) throw std::invalid_argument("weights must be positive");
  return Weights{a, b, c};
}

bool Weights::triangle() const { return a + b > c && b + c > a && c + a > b; }

Weights slope_to_weights(const Slope& s) {
  if (!s.rough()) throw std::invalid_argument("slope_to_weights: frozen slope");
  return Weights{std::sin(s.theta_a()), std::sin(s.theta_b()), std::sin(s.theta_c())};
}

Slope weights_to_slope(const Weights& w) {
  if (!w.triangle()) throw std::invalid_argument("weights_to_slope: degenerate triangle");
  const double ca = (w.b * w.b + w.c * w.c - w.a * w.a) / (2.0 * w.b * w.c);
  const double cb = (w.a * w.a + w.c * w.c - w.b * w.b) / (2.0 * w.a * w.c);
  const double ta = std::acos(ca), tb = std::acos(cb);
  return Slope{ta / kPi, tb / kPi, (kPi - ta - tb) / kPi};
}

OmegaPoint slope_to_omega(const Slope& s) {
  if (!s.rough()) {
    const double sa = std::sin(s.theta_a());
    const double r = sa > 0 ? std::sin(s.theta_c()) / sa : 0.0;
    return OmegaPoint{{r * std::cos(s.theta_b()), 0.0}, true};
  }
  const double r = std::sin(s.theta_c()) / std::sin(s.theta_a());
  return OmegaPoint{{r * std::cos(s.theta_b()), r * std::sin(s.theta_b())}, false};
}

double speed(const Slope& s) {
  if (!s.rough()) return 0.0;
  return std::sin(s.theta_b()) * std::sin(s.theta_c()) / (kPi * std::sin(s.theta_a()));
}

double asymmetric_speed(const Slope& s, double p, double q) {
  if (p < 0 || q < 0) throw std::invalid_argument("asymmetric rates must be >= 0");
  return (p - q) * speed(s);
}

}  // namespace growthlab::stationary
