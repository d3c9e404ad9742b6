#ifndef TREENV_VARIANCE_HPP
#define TREENV_VARIANCE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "treenv/diffraction.hpp"
#include "treenv/spectral_param.hpp"

namespace treenv {

struct NVRow {
  int r = 0;
  double volume = 0.0;
  double nv = 0.0;
  double nv_star = 0.0;
  double ratio_star = 0.0;  // nv_star / volume
};

struct NVCurve {
  std::vector<NVRow> rows;
};

// nv(r) sums mass * ball_transform^2 over every atom except the trivial one,
// plus the Plancherel part by quadrature; nv_star additionally drops the
// sign atom tau/2 + i/2.
NVCurve nv_curve(const DiffractionMeasure& m, int r_max);

// Radial Cesaro limit of ball_transform^2 / q^r at a principal parameter:
//   (1 + 2 q^(-1/2) cos_q(t) + 1/q) / (2 sin_q^2(t)).
double asymptotic_mean(const SpectralParam& p);

// (1/R) sum_{r=0}^{R} ball_transform(t, r)^2 / q^r with phase-accurate
// argument reduction; converges to asymptotic_mean at O(1/R).
double cesaro_mean(const SpectralParam& p, std::int64_t R);

// Cesaro limit of nv_star / q^r for a stealthy measure:
// sum over principal atoms of mass * asymptotic_mean.
double stealthy_average(const DiffractionMeasure& m);

// nv_star(r) / |B_r| and nv(r) / |B_r|^2, evaluated in scaled form so no
// intermediate overflows at large radii.
double nv_star_over_volume(const DiffractionMeasure& m, std::int64_t r);
double nv_over_volume_sq(const DiffractionMeasure& m, std::int64_t r);

struct ResidueFilter {
  std::int64_t modulus = 1;
  std::int64_t residue = 0;
};

struct ScanRecord {
  std::int64_t r = 0;
  double ratio = 0.0;
};

struct ScanResult {
  double min_ratio = 0.0;
  std::int64_t argmin = 0;
  // Decimating log of running record minima (thinned once it grows long, the
  // overall minimum always kept); identical for serial and parallel runs.
  std::vector<ScanRecord> trace;
};

// Minimum of nv_star(r)/|B_r| over r in [r_min, r_max], optionally
// restricted to r = residue (mod modulus). Radii are partitioned into fixed
// blocks processed independently; ties keep the smallest radius, so parallel
// and serial runs are bit-identical.
ScanResult liminf_scan(const DiffractionMeasure& m, std::int64_t r_max,
                       std::optional<ResidueFilter> filter = std::nullopt,
                       std::int64_t r_min = 1, int jobs = 1);

// Minimum over one period of the squared sine combination for the rational
// parameter (a/b) tau/2:
//   F(r) = (sin_q((r+1) a tau / 2b) + q^(-1/2) sin_q(r a tau / 2b))^2.
struct PeriodicMin {
  double min_value = 0.0;
  std::int64_t argmin_r = 0;
};
PeriodicMin periodic_min(std::int64_t a, std::int64_t b, int q);

// Radial-average lower bound through the c-function:
//   (1/R) sum NV*(r)/q^r >= (2(q+1)^2/(q (sqrt(q)+1)^2)) *
//                           integral_eps^{tau/2-eps} |c_q|^2 d sigma^(p).
struct BeckCheck {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};
BeckCheck beck_bound_check(const DiffractionMeasure& m, std::int64_t R,
                           double eps);

}  // namespace treenv

#endif
