#ifndef TREENV_SPECTRAL_PARAM_HPP
#define TREENV_SPECTRAL_PARAM_HPP

#include <string>

namespace treenv {

// The positive-definite spherical parameters for the (q+1)-regular tree
// form three branches:
//
//   complementary          lambda = i*s,          s in [0, 1/2]
//   principal              lambda = t,            t in (0, tau/2)
//   signed complementary   lambda = tau/2 + i*s,  s in [0, 1/2]
//
// with tau = 2*pi/log(q). Parameters biject with adjacency eigenvalues
// alpha in [-(q+1), q+1] via alpha = 2*sqrt(q)*cos(log(q)*lambda):
//
//   principal t            alpha = 2*sqrt(q)*cos(log(q)*t)   in (-2sqrt(q), 2sqrt(q))
//   complementary s        alpha = 2*sqrt(q)*cosh(log(q)*s)  in [2sqrt(q), q+1]
//   signed complementary s alpha = -2*sqrt(q)*cosh(log(q)*s) in [-(q+1), -2sqrt(q)]
//
// Canonical form puts lambda = 0 on the complementary branch (s = 0) and
// lambda = tau/2 on the signed complementary branch (s = 0), never as a
// principal endpoint. s = 1/2 gives the trivial (alpha = q+1) and sign
// (alpha = -(q+1)) parameters.
enum class Branch { principal, complementary, signed_complementary };

struct SpectralParam {
  Branch branch = Branch::complementary;
  double value = 0.5;  // t for principal, s otherwise
  int q = 2;
};

std::string branch_name(Branch b);

SpectralParam principal_param(double t, int q);
SpectralParam complementary_param(double s, int q);
SpectralParam signed_complementary_param(double s, int q);

SpectralParam trivial_param(int q);  // complementary s = 1/2, alpha = q+1
SpectralParam sign_param(int q);     // signed complementary s = 1/2, alpha = -(q+1)

// Inverts alpha = 2*sqrt(q)*cos(log(q)*lambda). Values within tol of a
// branch boundary (+-2*sqrt(q), +-(q+1)) snap to the boundary; *snapped
// reports whether a snap happened. Throws for |alpha| > q+1+tol.
SpectralParam alpha_to_lambda(double alpha, int q, double tol = 1e-9,
                              bool* snapped = nullptr);

double lambda_to_alpha(const SpectralParam& p);

bool same_param(const SpectralParam& a, const SpectralParam& b,
                double tol = 1e-12);

}  // namespace treenv

#endif
