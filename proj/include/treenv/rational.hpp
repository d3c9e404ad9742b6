#ifndef TREENV_RATIONAL_HPP
#define TREENV_RATIONAL_HPP

#include <cstdint>
#include <optional>
#include <vector>

namespace treenv {

// lambda = (a/b) * tau/2, i.e. the angle a*pi/b, with gcd(a,b) = 1 and
// 0 < a < b. Coprimality is enforced at construction.
struct RationalAngle {
  std::int64_t a = 1;
  std::int64_t b = 2;

  RationalAngle(std::int64_t a_, std::int64_t b_);
};

// sin(k*pi/b) with the argument reduced exactly in integer arithmetic before
// the single trig call; bit-exact under k -> k + 2b and sign-exact under
// k -> k + b.
double sin_pi_rational(std::int64_t k, std::int64_t b);

// sin((r+1) a pi / b) + q^(-1/2) sin(r a pi / b).
double sine_equation_lhs(int q, const RationalAngle& angle, std::int64_t r);

struct SineSolution {
  std::int64_t a = 0;
  std::int64_t b = 0;
  std::int64_t r = 0;
  double lhs = 0.0;
};

// All (a, b, r) with b <= b_max, 0 <= r <= b-1 solving the sine equation.
// Candidates below the 1e-9 zero threshold are confirmed in extended
// precision; non-zero values of the lhs sit far above the threshold.
std::vector<SineSolution> find_solutions(int q, std::int64_t b_max);

// Membership in the principal rational spectrum: every rational multiple
// (a/b) * tau/2 except the finite exceptional sets at q = 2 (3/4, 5/12,
// 11/12) and q = 3 (5/6).
bool lambda_rat_member(int q, const RationalAngle& angle);

// Reconstructs x as p/den with den <= den_max via continued-fraction
// convergents; succeeds when the best convergent sits within tol.
struct RationalReconstruction {
  std::int64_t p = 0;
  std::int64_t den = 1;
};
std::optional<RationalReconstruction> reconstruct_rational(
    double x, std::int64_t den_max, double tol);

// Angles a pi / b with b <= b_max whose cosine is rational, detected against
// denominators <= b_max^2; these are exactly b <= 3 plus a/b = 1/2.
struct CosineRationalHit {
  RationalAngle angle;
  std::int64_t p = 0;
  std::int64_t den = 1;
};
std::vector<CosineRationalHit> niven_scan(std::int64_t b_max);

// Angles with quadratic-irrational cosine, detected by exhaustive
// small-coefficient search for A c^2 + B c + C = 0; exactly b in {4, 5, 6}.
struct QuadraticHit {
  RationalAngle angle;
  std::int64_t A = 0;
  std::int64_t B = 0;
  std::int64_t C = 0;
};
std::vector<QuadraticHit> quadratic_scan(std::int64_t b_max);

}  // namespace treenv

#endif
