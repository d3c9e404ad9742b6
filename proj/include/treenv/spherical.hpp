#ifndef TREENV_SPHERICAL_HPP
#define TREENV_SPHERICAL_HPP

#include <cmath>
#include <cstdint>
#include <span>

#include "treenv/spectral_param.hpp"

namespace treenv {

// Geometry constants of the (q+1)-regular tree. tau = 2*pi/log(q) is the
// period of the subscript-q trigonometric functions cos_q(x) = cos(log(q)*x).
struct TreeGeometry {
  int q;
  double log_q;
  double tau;

  explicit TreeGeometry(int q_);

  double cos_q(double x) const { return std::cos(log_q * x); }
  double sin_q(double x) const { return std::sin(log_q * x); }
  double cosh_q(double x) const { return std::cosh(log_q * x); }
  double sinh_q(double x) const { return std::sinh(log_q * x); }
  double tanh_q(double x) const { return std::tanh(log_q * x); }
};

// |B_r| = (q+1)/(q-1)*q^r - 2/(q-1) exactly; throws errc::overflow when the
// value no longer fits in 64 bits (callers switch to ball_volume_d).
std::int64_t ball_volume(int r, int q);
double ball_volume_d(int r, int q);

// |dB_n| = 1 for n = 0 and (q+1)*q^(n-1) for n >= 1.
double sphere_size_d(int n, int q);

// Spherical function omega_lambda at distance n, evaluated branch by branch
// as a real expression. omega(0) = 1, omega(1) = alpha/(q+1).
double spherical_function(const SpectralParam& p, int n);

// Three-term recursion q*w(k+1) = alpha*w(k) - w(k-1) seeded by w(0) = 1,
// w(1) = alpha/(q+1). Independent oracle for spherical_function.
double spherical_function_recursive(double alpha, int n, int q);

// |c_q(lambda)|^2 = (sinh_q^2(1/2) + sin_q^2(t)) / (4 cosh_q^2(1/2) sin_q^2(t)),
// principal branch only.
double c_function_sq(const SpectralParam& p);

// Spherical transform of the ball indicator chi_{B_r}.
double ball_transform(const SpectralParam& p, int r);

// ball_transform divided by q^(r/2); bounded on the principal branch and
// overflow-safe on the complementary branches (saturates to +-inf).
double ball_transform_scaled(const SpectralParam& p, int r);

// Sum_n values[n] * omega_lambda(n) * |dB_n| for a finitely supported radial
// table (values[n] is the value at distance n). Oracle for ball_transform.
double spherical_transform_radial(std::span<const double> values,
                                  const SpectralParam& p);

// Plancherel density w.r.t. Lebesgue dlambda on (0, tau/2):
//   (sqrt(q)/(2 cosh_q(1/2))) * (1/tau) * |c_q(lambda)|^-2.
double plancherel_density(const SpectralParam& p);

// Kesten-McKay density ((q+1)/2pi) * sqrt(4q - a^2)/((q+1)^2 - a^2) on
// [-2 sqrt(q), 2 sqrt(q)]; zero at the endpoints, error outside.
double kesten_mckay_density(double alpha, int q);

}  // namespace treenv

#endif
