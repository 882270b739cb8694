#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_map>
#include <utility>

#include "growthlab/quadrature.hpp"
#include "growthlab/stationary.hpp"

namespace growthlab::kernel {

using quad::Complex;
using quad::QuadConfig;

struct SpaceTimePoint {
  int x = 0;
  int n = 1;
  double t = 0.0;
};

/// Space-like partial order of Theorem 2.3's single-integral term:
/// (n1,t1) < (n2,t2) iff n1 <= n2, t1 >= t2 and the pairs differ.
bool precedes(std::pair<int, double> a, std::pair<int, double> b);

struct EvalResult {
  Complex value;
  int nodes_used = 0;
};

/// Two-time correlation kernel K(x1,n1,t1; x2,n2,t2): single-integral term
/// over the circle about 0 (present iff (n1,t1) < (n2,t2)) plus the double
/// contour integral over the circles about 0 and 1.
EvalResult eval_K(const SpaceTimePoint& p1, const SpaceTimePoint& p2, const QuadConfig& q);

/// Equal-time kernel K_t(x1,n1; x2,n2) with caching. Entries feed
/// probabilities, so a non-vanishing imaginary part (>10*rel_tol) aborts.
class EqualTimeKernel {
 public:
  explicit EqualTimeKernel(QuadConfig q = {});

  double operator()(int x1, int n1, int x2, int n2, double t) const;
  const QuadConfig& config() const { return q_; }

 private:
  QuadConfig q_;
  mutable std::mutex mu_;
  mutable std::map<double, std::map<std::array<int, 4>, double>> cache_;
};

/// Stationary kernel K^-1_nu(x,n; x',n') with dx = x-x', dn = n-n', evaluated
/// by the single integral over the arc of |w| = c/a between conj(Omega) and
/// Omega: crossing R+ for dn >= 0, crossing R- (with orientation flip) for
/// dn < 0. The value is real; the real part is returned after a tolerance
/// check on the imaginary part.
double eval_Kinv_nu_single(int dx, int dn, const stationary::Slope& s, const QuadConfig& q);

/// Stationary kernel K^-1_abc by the double integral over |z| = |w| = 1 of
/// z^dn w^{-dn-dx-1} / (a + bz + cw): the z integral is done exactly by
/// residue, the w integral over the arc where the residue contributes.
/// Requires the strict triangle inequality (rough phase).
double eval_Kinv_abc_double(int dx, int dn, const stationary::Weights& w, const QuadConfig& q);

/// K^-1_nu from the abc route: prefactor b (a/c)^dx (b/c)^dn.
double nu_from_abc(int dx, int dn, const stationary::Weights& w, const QuadConfig& q);

/// Memoized K^-1_nu entries at a fixed slope, keyed by (dx, dn).
class StationaryKernelTable {
 public:
  StationaryKernelTable(stationary::Slope s, QuadConfig q = {});

  double operator()(int dx, int dn) const;
  const stationary::Slope& slope() const { return slope_; }
  const QuadConfig& config() const { return q_; }

 private:
  stationary::Slope slope_;
  QuadConfig q_;
  mutable std::mutex mu_;
  mutable std::map<std::pair<int, int>, double> cache_;
};

}  // namespace growthlab::kernel
