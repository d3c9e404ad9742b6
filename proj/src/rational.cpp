#include "treenv/rational.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "treenv/errors.hpp"

namespace treenv {

RationalAngle::RationalAngle(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
  if (a <= 0 || b <= 0 || a >= b) {
    fail(errc::bad_params, "rational angle needs 0 < a < b");
  }
  if (std::gcd(a, b) != 1) {
    fail(errc::not_coprime, "a = " + std::to_string(a) + " and b = " +
                                std::to_string(b) + " are not coprime");
  }
}

double sin_pi_rational(std::int64_t k, std::int64_t b) {
  k %= 2 * b;
  if (k < 0) k += 2 * b;
  double sign = 1.0;
  if (k >= b) {
    sign = -1.0;
    k -= b;
  }
  if (2 * k > b) k = b - k;  // sin(pi - x) = sin(x)
  if (k == 0) return 0.0;
  if (2 * k == b) return sign;
  return sign * std::sin(M_PI * static_cast<double>(k) / static_cast<double>(b));
}

namespace {

long double sin_pi_rational_ld(std::int64_t k, std::int64_t b) {
  const long double pi_ld = 3.14159265358979323846264338327950288L;
  k %= 2 * b;
  if (k < 0) k += 2 * b;
  long double sign = 1.0L;
  if (k >= b) {
    sign = -1.0L;
    k -= b;
  }
  if (2 * k > b) k = b - k;
  if (k == 0) return 0.0L;
  if (2 * k == b) return sign;
  return sign * sinl(pi_ld * static_cast<long double>(k) /
                     static_cast<long double>(b));
}

void check_q(int q) {
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
}

}  // namespace

double sine_equation_lhs(int q, const RationalAngle& angle, std::int64_t r) {
  check_q(q);
  if (r < 0) fail(errc::bad_params, "r must be >= 0");
  double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));
  return sin_pi_rational(angle.a * (r + 1), angle.b) +
         inv_sqrt_q * sin_pi_rational(angle.a * r, angle.b);
}

std::vector<SineSolution> find_solutions(int q, std::int64_t b_max) {
  check_q(q);
  if (b_max < 2) fail(errc::bad_params, "b_max must be >= 2");
  const double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));
  const long double inv_sqrt_q_ld = 1.0L / sqrtl(static_cast<long double>(q));

  // By the quadratic-irrational corollary, cos(a pi / b) can never equal
  // -sqrt(q)/(q+1), which closes the one parametric route to extra solutions.
  // A numerical hit here would invalidate the zero-detection assumptions.
  const double blocked_cosine =
      -std::sqrt(static_cast<double>(q)) / (q + 1.0);

  std::vector<SineSolution> hits;
  for (std::int64_t b = 2; b <= b_max; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      double cosine = std::cos(M_PI * static_cast<double>(a) /
                               static_cast<double>(b));
      if (std::abs(cosine - blocked_cosine) < 1e-9) {
        fail(errc::no_convergence,
             "cos(a pi / b) collided with -sqrt(q)/(q+1); zero detection "
             "assumptions violated");
      }
      for (std::int64_t r = 0; r < b; ++r) {
        double lhs = sin_pi_rational(a * (r + 1), b) +
                     inv_sqrt_q * sin_pi_rational(a * r, b);
        if (std::abs(lhs) >= 1e-9) continue;
        long double confirm = sin_pi_rational_ld(a * (r + 1), b) +
                              inv_sqrt_q_ld * sin_pi_rational_ld(a * r, b);
        if (fabsl(confirm) < 1e-12L) {
          hits.push_back({a, b, r, lhs});
        }
      }
    }
  }
  return hits;
}

bool lambda_rat_member(int q, const RationalAngle& angle) {
  check_q(q);
  auto is = [&](std::int64_t a, std::int64_t b) {
    return angle.a == a && angle.b == b;
  };
  if (q == 2) return !(is(3, 4) || is(5, 12) || is(11, 12));
  if (q == 3) return !is(5, 6);
  return true;
}

std::optional<RationalReconstruction> reconstruct_rational(double x,
                                                           std::int64_t den_max,
                                                           double tol) {
  double sign = (x < 0) ? -1.0 : 1.0;
  double y = std::abs(x);

  // Continued-fraction convergents p_k/q_k of y until the denominator cap.
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p_cur = static_cast<std::int64_t>(std::floor(y));
  std::int64_t q_cur = 1;
  double frac = y - std::floor(y);

  std::int64_t best_p = p_cur, best_q = 1;
  double best_err = std::abs(y - static_cast<double>(p_cur));

  for (int iter = 0; iter < 64 && frac > 1e-18; ++iter) {
    double inv = 1.0 / frac;
    double digit = std::floor(inv);
    if (digit > 9e18) break;
    std::int64_t d = static_cast<std::int64_t>(digit);
    std::int64_t p_next, q_next;
    if (__builtin_mul_overflow(d, p_cur, &p_next) ||
        __builtin_add_overflow(p_next, p_prev, &p_next) ||
        __builtin_mul_overflow(d, q_cur, &q_next) ||
        __builtin_add_overflow(q_next, q_prev, &q_next)) {
      break;
    }
    if (q_next > den_max) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
    double err = std::abs(y - static_cast<double>(p_cur) /
                                  static_cast<double>(q_cur));
    if (err < best_err) {
      best_err = err;
      best_p = p_cur;
      best_q = q_cur;
    }
    frac = inv - digit;
  }

  if (best_err <= tol) {
    std::int64_t g = std::gcd(best_p, best_q);
    if (g > 1) {
      best_p /= g;
      best_q /= g;
    }
    return RationalReconstruction{static_cast<std::int64_t>(sign) * best_p,
                                  best_q};
  }
  return std::nullopt;
}

std::vector<CosineRationalHit> niven_scan(std::int64_t b_max) {
  if (b_max < 1) fail(errc::bad_params, "b_max must be >= 1");
  std::vector<CosineRationalHit> hits;
  for (std::int64_t b = 2; b <= b_max; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      double c = std::cos(M_PI * static_cast<double>(a) /
                          static_cast<double>(b));
      auto rec = reconstruct_rational(c, b_max * b_max, 1e-12);
      if (rec) {
        hits.push_back({RationalAngle(a, b), rec->p, rec->den});
      }
    }
  }
  return hits;
}

std::vector<QuadraticHit> quadratic_scan(std::int64_t b_max) {
  if (b_max < 4) fail(errc::bad_params, "b_max must be >= 4");
  constexpr std::int64_t kLeadCap = 400;       // search range for A, |B|
  constexpr std::int64_t kCoefficientCap = 1000000;  // admissible |C|

  std::vector<QuadraticHit> hits;
  for (std::int64_t b = 2; b <= b_max; ++b) {
    for (std::int64_t a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      double c = std::cos(M_PI * static_cast<double>(a) /
                          static_cast<double>(b));
      if (reconstruct_rational(c, b_max * b_max, 1e-12)) continue;  // degree 1

      bool found = false;
      for (std::int64_t A = 1; A <= kLeadCap && !found; ++A) {
        double Ac2 = static_cast<double>(A) * c * c;
        for (std::int64_t B = -kLeadCap; B <= kLeadCap && !found; ++B) {
          double partial = Ac2 + static_cast<double>(B) * c;
          double Cd = -std::nearbyint(partial);
          if (std::abs(Cd) > static_cast<double>(kCoefficientCap)) continue;
          if (std::abs(partial + Cd) >= 1e-10) continue;
          // Confirm in extended precision before accepting the relation.
          long double cl = cosl(3.14159265358979323846264338327950288L *
                                static_cast<long double>(a) /
                                static_cast<long double>(b));
          long double residual = static_cast<long double>(A) * cl * cl +
                                 static_cast<long double>(B) * cl +
                                 static_cast<long double>(Cd);
          if (fabsl(residual) < 1e-13L) {
            hits.push_back({RationalAngle(a, b), A, B,
                            static_cast<std::int64_t>(Cd)});
            found = true;
          }
        }
      }
    }
  }
  return hits;
}

}  // namespace treenv
