#ifndef TREENV_PHASE_HPP
#define TREENV_PHASE_HPP

#include <cmath>
#include <cstdint>

#include "treenv/spectral_param.hpp"

namespace treenv {

// Double-double helpers for phase-accurate evaluation of sin_q(t*r) at large
// radii. With theta = t/tau the identity sin_q(t*r) = sin(2*pi*frac(theta*r))
// reduces the argument exactly modulo the period before the single trig call.
struct DoubleDouble {
  double hi = 0.0;
  double lo = 0.0;
};

inline DoubleDouble two_sum(double a, double b) {
  double s = a + b;
  double bb = s - a;
  double err = (a - (s - bb)) + (b - bb);
  return {s, err};
}

inline DoubleDouble two_prod(double a, double b) {
  double p = a * b;
  double err = std::fma(a, b, -p);
  return {p, err};
}

// Quotient a/b to roughly 2^-105.
inline DoubleDouble dd_div(double a, double b) {
  double q1 = a / b;
  double r = std::fma(-q1, b, a);
  double q2 = r / b;
  return {q1, q2};
}

// frac nearest: r*theta reduced to [-1/2, 1/2].
inline double phase_fraction(const DoubleDouble& theta, std::int64_t r) {
  double rd = static_cast<double>(r);  // exact for r < 2^53
  DoubleDouble p = two_prod(rd, theta.hi);
  double low = p.lo + rd * theta.lo;
  double k = std::nearbyint(p.hi);
  double y = (p.hi - k) + low;
  if (y > 0.5) y -= 1.0;
  if (y < -0.5) y += 1.0;
  return y;
}

// Evaluator for the scaled indicator transform of a principal parameter,
//   f(r) = (sin_q(t(r+1)) + q^(-1/2) sin_q(t r)) / sin_q(t),
// at scan-scale radii. Plain double arithmetic up to kPlainRadiusCap, the
// compensated reduction beyond.
class PrincipalPhase {
 public:
  static constexpr std::int64_t kPlainRadiusCap = 1000000;

  PrincipalPhase(const SpectralParam& p);

  double indicator_factor(std::int64_t r) const;

 private:
  double sin_q_of_r(std::int64_t r) const;

  DoubleDouble theta_;   // t / tau
  double theta_plain_;
  double inv_sin_lambda_;
  double inv_sqrt_q_;
};

}  // namespace treenv

#endif
