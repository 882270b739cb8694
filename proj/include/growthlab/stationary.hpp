#pragma once

#include <complex>

namespace growthlab::stationary {

/// Lozenge proportions (p_a, p_b, p_c), nonnegative, summing to 1.
/// Rough phase means all three strictly positive.
struct Slope {
  double p_a = 0, p_b = 0, p_c = 0;

  static Slope make(double pa, double pb, double pc);
  bool rough() const { return p_a > 0 && p_b > 0 && p_c > 0; }
  double theta_a() const;
  double theta_b() const;
  double theta_c() const;
  Slope swapped_bc() const { return Slope{p_a, p_c, p_b}; }
};

/// Edge weights (a, b, c), positive; meaningful up to common scale.
struct Weights {
  double a = 1, b = 1, c = 1;

  static Weights make(double a, double b, double c);
  bool triangle() const;  // strict triangle inequality = rough phase
};

/// The complex point Omega_abc; frozen marks a boundary (real-axis) slope.
struct OmegaPoint {
  std::complex<double> value{0, 0};
  bool frozen = false;
};

/// (a, b, c) = (sin th_a, sin th_b, sin th_c); throws on a frozen slope.
Weights slope_to_weights(const Slope& s);

/// Law-of-cosines angles from side lengths; throws on a degenerate triangle.
Slope weights_to_slope(const Weights& w);

/// Omega = (c/a) e^{i th_b}: |0 Omega| = c/a, |1 Omega| = b/a.
OmegaPoint slope_to_omega(const Slope& s);

/// Im(Omega)/pi = sin(th_b) sin(th_c) / (pi sin(th_a)); 0 on frozen slopes.
double speed(const Slope& s);

/// (p - q) * speed for the two-rate asymmetric dynamics.
double asymmetric_speed(const Slope& s, double p, double q);

}  // namespace growthlab::stationary
