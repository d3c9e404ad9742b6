#include "treenv/phase.hpp"

#include "treenv/errors.hpp"
#include "treenv/spherical.hpp"

namespace treenv {

PrincipalPhase::PrincipalPhase(const SpectralParam& p) {
  if (p.branch != Branch::principal) {
    fail(errc::wrong_branch, "phase evaluation needs a principal parameter");
  }
  const TreeGeometry geo(p.q);
  theta_ = dd_div(p.value, geo.tau);
  theta_plain_ = theta_.hi;
  inv_sin_lambda_ = 1.0 / geo.sin_q(p.value);
  inv_sqrt_q_ = 1.0 / std::sqrt(static_cast<double>(p.q));
}

double PrincipalPhase::sin_q_of_r(std::int64_t r) const {
  double y;
  if (r <= kPlainRadiusCap) {
    double x = theta_plain_ * static_cast<double>(r);
    y = x - std::nearbyint(x);
  } else {
    y = phase_fraction(theta_, r);
  }
  return std::sin(2.0 * M_PI * y);
}

double PrincipalPhase::indicator_factor(std::int64_t r) const {
  return (sin_q_of_r(r + 1) + inv_sqrt_q_ * sin_q_of_r(r)) * inv_sin_lambda_;
}

}  // namespace treenv
