#include "treenv/spherical.hpp"

#include <cmath>

#include "treenv/errors.hpp"

namespace treenv {

TreeGeometry::TreeGeometry(int q_) : q(q_) {
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
  log_q = std::log(static_cast<double>(q));
  tau = 2.0 * M_PI / log_q;
}

std::int64_t ball_volume(int r, int q) {
  if (r < 0) fail(errc::bad_params, "radius must be >= 0");
  // 1 + (q+1) * (q^0 + q^1 + ... + q^(r-1)), accumulated with overflow checks.
  std::int64_t total = 1;
  std::int64_t shell = q + 1;  // |dB_n|, n = 1, 2, ...
  for (int n = 1; n <= r; ++n) {
    if (__builtin_add_overflow(total, shell, &total)) {
      fail(errc::overflow, "ball volume exceeds 64 bits at radius " +
                               std::to_string(n) + " (q=" + std::to_string(q) +
                               ")");
    }
    if (n < r && __builtin_mul_overflow(shell, q, &shell)) {
      fail(errc::overflow, "ball volume exceeds 64 bits at radius " +
                               std::to_string(n + 1) +
                               " (q=" + std::to_string(q) + ")");
    }
  }
  return total;
}

double ball_volume_d(int r, int q) {
  if (r < 0) fail(errc::bad_params, "radius must be >= 0");
  if (r == 0) return 1.0;
  double qr = std::pow(static_cast<double>(q), r);
  return ((q + 1.0) * qr - 2.0) / (q - 1.0);
}

double sphere_size_d(int n, int q) {
  if (n < 0) fail(errc::bad_params, "distance must be >= 0");
  if (n == 0) return 1.0;
  return (q + 1.0) * std::pow(static_cast<double>(q), n - 1);
}

namespace {

int parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }

// sinh(L*(n+1)) + c*sinh(L*n) over sinh(L), with sign_c = +-1 selecting the
// complementary (+) or signed complementary (-) combination. Switches to the
// exponential form once the arguments would overflow sinh; there the e^{-Ln}
// terms are negligible and the result saturates cleanly to +inf.
double sinh_ratio(double L, double c, int sign_c, long long n) {
  double a = L * (n + 1.0);
  if (a < 700.0) {
    return (std::sinh(a) + sign_c * c * std::sinh(L * n)) / std::sinh(L);
  }
  double eL = std::exp(L);
  double head = std::exp(L * n) * (eL + sign_c * c);
  double tail = std::exp(-L * n) * (1.0 / eL + sign_c * c);
  return (head - tail) / (2.0 * std::sinh(L));
}

}  // namespace

double spherical_function(const SpectralParam& p, int n) {
  if (n < 0) fail(errc::bad_params, "distance must be >= 0");
  if (n == 0) return 1.0;
  const TreeGeometry geo(p.q);
  const double q = p.q;
  const double scale = std::pow(q, -0.5 * n);

  switch (p.branch) {
    case Branch::principal: {
      // (sin_q((n+1)t) - sin_q((n-1)t)/q) / ((1 + 1/q) sin_q(t)) * q^(-n/2)
      double t = p.value;
      double num = geo.sin_q((n + 1.0) * t) - geo.sin_q((n - 1.0) * t) / q;
      return num / ((1.0 + 1.0 / q) * geo.sin_q(t)) * scale;
    }
    case Branch::complementary:
    case Branch::signed_complementary: {
      double sign = (p.branch == Branch::signed_complementary)
                        ? parity_sign(n)
                        : 1.0;
      double s = p.value;
      if (s == 0.0) {
        // boundary parameter: (1 + n*(q-1)/(q+1)) * (+-1)^n * q^(-n/2)
        return sign * (1.0 + n * (q - 1.0) / (q + 1.0)) * scale;
      }
      double num =
          geo.sinh_q((n + 1.0) * s) - geo.sinh_q((n - 1.0) * s) / q;
      return sign * num / ((1.0 + 1.0 / q) * geo.sinh_q(s)) * scale;
    }
  }
  fail(errc::wrong_branch, "invalid branch");
}

double spherical_function_recursive(double alpha, int n, int q) {
  if (n < 0) fail(errc::bad_params, "distance must be >= 0");
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
  double prev = 1.0;
  if (n == 0) return prev;
  double cur = alpha / (q + 1.0);
  for (int k = 1; k < n; ++k) {
    double next = (alpha * cur - prev) / q;
    prev = cur;
    cur = next;
  }
  return cur;
}

double c_function_sq(const SpectralParam& p) {
  if (p.branch != Branch::principal) {
    fail(errc::wrong_branch, "|c_q|^2 is evaluated on the principal branch");
  }
  const TreeGeometry geo(p.q);
  double sh = geo.sinh_q(0.5);
  double ch = geo.cosh_q(0.5);
  double sn = geo.sin_q(p.value);
  return (sh * sh + sn * sn) / (4.0 * ch * ch * sn * sn);
}

double ball_transform_scaled(const SpectralParam& p, int r) {
  if (r < 0) fail(errc::bad_params, "radius must be >= 0");
  const TreeGeometry geo(p.q);
  const double q = p.q;
  const double inv_sqrt_q = 1.0 / std::sqrt(q);

  switch (p.branch) {
    case Branch::principal: {
      double t = p.value;
      return (geo.sin_q(t * (r + 1.0)) + inv_sqrt_q * geo.sin_q(t * r)) /
             geo.sin_q(t);
    }
    case Branch::complementary: {
      double s = p.value;
      if (s == 0.0) return 1.0 + (1.0 + inv_sqrt_q) * r;
      return sinh_ratio(geo.log_q * s, inv_sqrt_q, +1, r);
    }
    case Branch::signed_complementary: {
      double s = p.value;
      if (s == 0.0) return parity_sign(r) * (1.0 + (1.0 - inv_sqrt_q) * r);
      return parity_sign(r) * sinh_ratio(geo.log_q * s, inv_sqrt_q, -1, r);
    }
  }
  fail(errc::wrong_branch, "invalid branch");
}

double ball_transform(const SpectralParam& p, int r) {
  return ball_transform_scaled(p, r) *
         std::pow(static_cast<double>(p.q), 0.5 * r);
}

double spherical_transform_radial(std::span<const double> values,
                                  const SpectralParam& p) {
  double total = 0.0;
  for (std::size_t n = 0; n < values.size(); ++n) {
    if (values[n] == 0.0) continue;
    total += values[n] * spherical_function(p, static_cast<int>(n)) *
             sphere_size_d(static_cast<int>(n), p.q);
  }
  return total;
}

double plancherel_density(const SpectralParam& p) {
  if (p.branch != Branch::principal) {
    fail(errc::wrong_branch,
         "the Plancherel density lives on the principal branch");
  }
  const TreeGeometry geo(p.q);
  double factor = std::sqrt(static_cast<double>(p.q)) / (2.0 * geo.cosh_q(0.5));
  return factor / geo.tau / c_function_sq(p);
}

double kesten_mckay_density(double alpha, int q) {
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
  double edge = 2.0 * std::sqrt(static_cast<double>(q));
  if (std::abs(alpha) > edge * (1.0 + 1e-12)) {
    fail(errc::out_of_support,
         "alpha = " + std::to_string(alpha) + " outside [-2 sqrt(q), 2 sqrt(q)]");
  }
  if (std::abs(alpha) >= edge) return 0.0;
  double disc = 4.0 * q - alpha * alpha;
  if (disc <= 0.0) return 0.0;
  return (q + 1.0) / (2.0 * M_PI) * std::sqrt(disc) /
         ((q + 1.0) * (q + 1.0) - alpha * alpha);
}

}  // namespace treenv
