#include "treenv/spectral_param.hpp"

#include <algorithm>
#include <cmath>

#include "treenv/errors.hpp"

namespace treenv {

namespace {

void check_q(int q) {
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
}

double half_tau(int q) { return M_PI / std::log(static_cast<double>(q)); }

}  // namespace

std::string branch_name(Branch b) {
  switch (b) {
    case Branch::principal: return "principal";
    case Branch::complementary: return "complementary";
    case Branch::signed_complementary: return "signed_complementary";
  }
  return "?";
}

SpectralParam principal_param(double t, int q) {
  check_q(q);
  if (!(t > 0.0) || !(t < half_tau(q))) {
    fail(errc::bad_params,
         "principal parameter must lie strictly inside (0, tau/2)");
  }
  return {Branch::principal, t, q};
}

SpectralParam complementary_param(double s, int q) {
  check_q(q);
  if (!(s >= 0.0) || !(s <= 0.5)) {
    fail(errc::bad_params, "complementary parameter must lie in [0, 1/2]");
  }
  return {Branch::complementary, s, q};
}

SpectralParam signed_complementary_param(double s, int q) {
  check_q(q);
  if (!(s >= 0.0) || !(s <= 0.5)) {
    fail(errc::bad_params,
         "signed complementary parameter must lie in [0, 1/2]");
  }
  return {Branch::signed_complementary, s, q};
}

SpectralParam trivial_param(int q) { return complementary_param(0.5, q); }

SpectralParam sign_param(int q) { return signed_complementary_param(0.5, q); }

SpectralParam alpha_to_lambda(double alpha, int q, double tol, bool* snapped) {
  check_q(q);
  if (snapped) *snapped = false;
  const double log_q = std::log(static_cast<double>(q));
  const double edge = 2.0 * std::sqrt(static_cast<double>(q));
  const double top = q + 1.0;

  if (std::abs(alpha) > top + tol) {
    fail(errc::out_of_spectrum,
         "alpha = " + std::to_string(alpha) + " outside [-(q+1), q+1]");
  }

  // A snap is reported only when the distance to the boundary exceeds the
  // floating-point noise floor; re-landing on an exact boundary value is not
  // an event.
  auto snap = [&](double target) {
    double gap = std::abs(alpha - target);
    if (snapped && gap > 1e-13 * std::max(1.0, std::abs(target))) {
      *snapped = true;
    }
  };

  if (std::abs(alpha - top) <= tol) {
    snap(top);
    return trivial_param(q);
  }
  if (std::abs(alpha + top) <= tol) {
    snap(-top);
    return sign_param(q);
  }
  if (std::abs(alpha - edge) <= tol) {
    snap(edge);
    return complementary_param(0.0, q);
  }
  if (std::abs(alpha + edge) <= tol) {
    snap(-edge);
    return signed_complementary_param(0.0, q);
  }

  if (alpha > edge) {
    double s = std::acosh(alpha / edge) / log_q;
    return complementary_param(std::min(s, 0.5), q);
  }
  if (alpha < -edge) {
    double s = std::acosh(-alpha / edge) / log_q;
    return signed_complementary_param(std::min(s, 0.5), q);
  }
  double t = std::acos(alpha / edge) / log_q;
  return principal_param(t, q);
}

double lambda_to_alpha(const SpectralParam& p) {
  const double log_q = std::log(static_cast<double>(p.q));
  const double edge = 2.0 * std::sqrt(static_cast<double>(p.q));
  switch (p.branch) {
    case Branch::principal:
      return edge * std::cos(log_q * p.value);
    case Branch::complementary:
      return edge * std::cosh(log_q * p.value);
    case Branch::signed_complementary:
      return -edge * std::cosh(log_q * p.value);
  }
  fail(errc::wrong_branch, "invalid branch");
}

bool same_param(const SpectralParam& a, const SpectralParam& b, double tol) {
  return a.branch == b.branch && a.q == b.q && std::abs(a.value - b.value) <= tol;
}

}  // namespace treenv
