#include "treenv/variance.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <thread>

#include "treenv/errors.hpp"
#include "treenv/phase.hpp"
#include "treenv/quadrature.hpp"
#include "treenv/rational.hpp"
#include "treenv/spherical.hpp"

namespace treenv {

namespace {

bool is_trivial_atom(const Atom& a) {
  return a.param.branch == Branch::complementary && a.param.value == 0.5;
}

bool is_sign_atom(const Atom& a) {
  return a.param.branch == Branch::signed_complementary &&
         a.param.value == 0.5;
}

// q^r / |B_r| and its reciprocal, stable at any radius.
double qr_over_volume(std::int64_t r, int q) {
  return (q - 1.0) / (q + 1.0 - 2.0 * std::pow(static_cast<double>(q),
                                               -static_cast<double>(r)));
}

double volume_over_qr(std::int64_t r, int q) {
  return (q + 1.0 - 2.0 * std::pow(static_cast<double>(q),
                                   -static_cast<double>(r))) /
         (q - 1.0);
}

// Evaluates the scaled transform f(r) = ball_transform / q^(r/2) for every
// contributing atom of a measure. Principal atoms go through the phase
// reducer; the rest through the branch formulas.
class TermEvaluator {
 public:
  TermEvaluator(const DiffractionMeasure& m, bool include_sign_atom)
      : q_(m.q) {
    for (const auto& atom : m.atoms) {
      if (is_trivial_atom(atom)) continue;
      if (!include_sign_atom && is_sign_atom(atom)) continue;
      if (atom.param.branch == Branch::principal) {
        principal_.push_back({PrincipalPhase(atom.param), atom.mass});
      } else {
        other_.push_back(atom);
      }
    }
    plancherel_ = m.plancherel_coefficient;
  }

  // sum of mass * f(r)^2 over the selected atoms, plus the Plancherel part
  // |B_r|/q^r (the transform's Plancherel mass is exactly the ball volume).
  double scaled_sum(std::int64_t r) const {
    double total = 0.0;
    for (const auto& [phase, mass] : principal_) {
      double f = phase.indicator_factor(r);
      total += mass * f * f;
    }
    for (const auto& atom : other_) {
      double f = ball_transform_scaled(atom.param, static_cast<int>(r));
      total += atom.mass * f * f;
    }
    if (plancherel_ > 0.0) total += plancherel_ * volume_over_qr(r, q_);
    return total;
  }

 private:
  int q_;
  std::vector<std::pair<PrincipalPhase, double>> principal_;
  std::vector<Atom> other_;
  double plancherel_ = 0.0;
};

// log |f(r)| for the complementary branches, finite even where f overflows.
double scaled_transform_log_abs(const SpectralParam& p, std::int64_t r) {
  const TreeGeometry geo(p.q);
  double s = p.value;
  double L = geo.log_q * s;
  double c = 1.0 / std::sqrt(static_cast<double>(p.q));
  int sign_c = (p.branch == Branch::signed_complementary) ? -1 : +1;
  double a = L * (r + 1.0);
  if (a < 700.0) {
    return std::log(std::abs(std::sinh(a) + sign_c * c * std::sinh(L * r))) -
           std::log(std::sinh(L));
  }
  // sinh(A) +- c sinh(B) = e^{Lr} (e^L +- c)/2 up to exponentially small tails
  return L * r + std::log(std::exp(L) + sign_c * c) - M_LN2 -
         std::log(std::sinh(L));
}

void run_chunks(int jobs, std::int64_t chunk_count,
                const std::function<void(std::int64_t)>& body) {
  if (jobs <= 1 || chunk_count <= 1) {
    for (std::int64_t c = 0; c < chunk_count; ++c) body(c);
    return;
  }
  std::atomic<std::int64_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::int64_t c = next.fetch_add(1);
      if (c >= chunk_count) return;
      body(c);
    }
  };
  std::vector<std::thread> pool;
  int threads = static_cast<int>(std::min<std::int64_t>(jobs, chunk_count));
  pool.reserve(threads);
  for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

void decimate_trace(std::vector<ScanRecord>& trace, std::size_t cap) {
  while (trace.size() > cap) {
    std::vector<ScanRecord> kept;
    kept.reserve(trace.size() / 2 + 1);
    for (std::size_t i = 1; i < trace.size(); i += 2) kept.push_back(trace[i]);
    if (kept.empty() || kept.back().r != trace.back().r) {
      kept.push_back(trace.back());
    }
    trace = std::move(kept);
  }
}

}  // namespace

NVCurve nv_curve(const DiffractionMeasure& m, int r_max) {
  if (r_max < 0) fail(errc::bad_params, "r_max must be >= 0");
  if (r_max > 1000000) {
    fail(errc::bad_params, "per-radius curves cap at r_max = 1e6; use the "
                           "scan for larger horizons");
  }
  const int q = m.q;
  NVCurve curve;
  curve.rows.reserve(r_max + 1);

  for (int r = 0; r <= r_max; ++r) {
    NVRow row;
    row.r = r;
    try {
      row.volume = static_cast<double>(ball_volume(r, q));
    } catch (const error& e) {
      if (e.code() != errc::overflow) throw;
      row.volume = ball_volume_d(r, q);
    }

    // nv_star is accumulated on its own and the sign-atom term added on top:
    // the sign term dominates like q^{2r} and a subtraction would cancel the
    // principal terms out of nv_star entirely.
    double nv_star = 0.0, sign_term = 0.0;
    for (const auto& atom : m.atoms) {
      if (is_trivial_atom(atom)) continue;
      double bt = ball_transform(atom.param, r);
      double term = atom.mass * bt * bt;
      if (is_sign_atom(atom)) {
        sign_term += term;
      } else {
        nv_star += term;
      }
    }
    if (m.plancherel_coefficient > 0.0) {
      const TreeGeometry geo(q);
      double integral = integrate(
          [&](double t) {
            SpectralParam p = principal_param(t, q);
            double bt = ball_transform(p, r);
            return bt * bt * plancherel_density(p);
          },
          0.0, 0.5 * geo.tau, 1e-10);
      nv_star += m.plancherel_coefficient * integral;
    }
    row.nv = nv_star + sign_term;
    row.nv_star = nv_star;
    row.ratio_star = row.nv_star / row.volume;
    curve.rows.push_back(row);
  }
  return curve;
}

double asymptotic_mean(const SpectralParam& p) {
  if (p.branch != Branch::principal) {
    fail(errc::wrong_branch, "the Cesaro limit needs a principal parameter");
  }
  const TreeGeometry geo(p.q);
  double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(p.q));
  double sn = geo.sin_q(p.value);
  return (1.0 + 2.0 * inv_sqrt_q * geo.cos_q(p.value) + 1.0 / p.q) /
         (2.0 * sn * sn);
}

double cesaro_mean(const SpectralParam& p, std::int64_t R) {
  if (R < 1) fail(errc::bad_params, "horizon R must be >= 1");
  PrincipalPhase phase(p);
  double sum = 0.0;
  for (std::int64_t r = 0; r <= R; ++r) {
    double f = phase.indicator_factor(r);
    sum += f * f;
  }
  return sum / static_cast<double>(R);
}

double stealthy_average(const DiffractionMeasure& m) {
  if (!is_stealthy(m)) {
    fail(errc::not_stealthy, "measure does not classify stealthy");
  }
  double total = 0.0;
  for (const auto& atom : m.atoms) {
    if (atom.param.branch != Branch::principal) continue;
    total += atom.mass * asymptotic_mean(atom.param);
  }
  return total;
}

double nv_star_over_volume(const DiffractionMeasure& m, std::int64_t r) {
  TermEvaluator eval(m, /*include_sign_atom=*/false);
  return eval.scaled_sum(r) * qr_over_volume(r, m.q);
}

double nv_over_volume_sq(const DiffractionMeasure& m, std::int64_t r) {
  const int q = m.q;
  const double qrov = qr_over_volume(r, q);
  double total = 0.0;
  for (const auto& atom : m.atoms) {
    if (is_trivial_atom(atom)) continue;
    // (ball_transform / volume)^2 = (f * q^(-r/2) * qrov)^2
    double y;
    if (is_sign_atom(atom)) {
      y = 1.0;  // |f| = q^(r/2) exactly
    } else if (atom.param.branch == Branch::principal ||
               atom.param.value == 0.0) {
      // bounded (principal) or polynomial (boundary) scaled transform
      double f = ball_transform_scaled(atom.param, static_cast<int>(r));
      y = std::abs(f) * std::pow(static_cast<double>(q), -0.5 * r);
    } else {
      double log_y = scaled_transform_log_abs(atom.param, r) -
                     0.5 * r * std::log(static_cast<double>(q));
      y = std::exp(log_y);
    }
    total += atom.mass * (y * qrov) * (y * qrov);
  }
  if (m.plancherel_coefficient > 0.0) {
    // Plancherel part contributes |B_r| to nv, i.e. 1/|B_r| here.
    total += m.plancherel_coefficient * qrov *
             std::pow(static_cast<double>(q), -static_cast<double>(r));
  }
  return total;
}

ScanResult liminf_scan(const DiffractionMeasure& m, std::int64_t r_max,
                       std::optional<ResidueFilter> filter, std::int64_t r_min,
                       int jobs) {
  if (r_max < 1) fail(errc::bad_params, "r_max must be >= 1");
  if (r_max > 10000000) fail(errc::bad_params, "scan horizon caps at 1e7");
  if (r_min < 0) fail(errc::bad_params, "r_min must be >= 0");
  std::int64_t step = 1;
  std::int64_t first = r_min;
  if (filter) {
    if (filter->modulus < 1 || filter->residue < 0 ||
        filter->residue >= filter->modulus) {
      fail(errc::bad_params, "residue filter needs 0 <= residue < modulus");
    }
    step = filter->modulus;
    std::int64_t shift = (filter->residue - r_min) % step;
    if (shift < 0) shift += step;
    first = r_min + shift;
  }
  if (first > r_max) {
    fail(errc::bad_params, "no radii match the requested range and filter");
  }
  const std::int64_t total = (r_max - first) / step + 1;

  TermEvaluator eval(m, /*include_sign_atom=*/false);
  const int q = m.q;
  auto ratio_at = [&](std::int64_t r) {
    return eval.scaled_sum(r) * qr_over_volume(r, q);
  };

  // Fixed block size, independent of the job count, so chunk contents and
  // the merged result never depend on parallelism.
  const std::int64_t block = 1 << 16;
  const std::int64_t chunk_count = (total + block - 1) / block;
  std::vector<std::vector<ScanRecord>> chunk_records(chunk_count);

  run_chunks(jobs, chunk_count, [&](std::int64_t c) {
    std::int64_t begin = c * block;
    std::int64_t end = std::min(total, begin + block);
    auto& records = chunk_records[c];
    double best = std::numeric_limits<double>::infinity();
    for (std::int64_t k = begin; k < end; ++k) {
      std::int64_t r = first + k * step;
      double ratio = ratio_at(r);
      if (ratio < best) {
        best = ratio;
        records.push_back({r, ratio});
        decimate_trace(records, 4096);
      }
    }
  });

  ScanResult result;
  result.min_ratio = std::numeric_limits<double>::infinity();
  result.argmin = first;
  for (const auto& records : chunk_records) {
    for (const auto& rec : records) {
      if (rec.ratio < result.min_ratio) {
        result.min_ratio = rec.ratio;
        result.argmin = rec.r;
        result.trace.push_back(rec);
        decimate_trace(result.trace, 64);
      }
    }
  }
  if (result.trace.empty() || result.trace.back().r != result.argmin) {
    result.trace.push_back({result.argmin, result.min_ratio});
  }
  return result;
}

PeriodicMin periodic_min(std::int64_t a, std::int64_t b, int q) {
  RationalAngle angle(a, b);  // validates coprimality and 0 < a < b
  if (q < 2) fail(errc::bad_params, "branching number q must be >= 2");
  double inv_sqrt_q = 1.0 / std::sqrt(static_cast<double>(q));
  PeriodicMin out;
  out.min_value = std::numeric_limits<double>::infinity();
  for (std::int64_t r = 0; r < b; ++r) {
    double v = sin_pi_rational(a * (r + 1), b) +
               inv_sqrt_q * sin_pi_rational(a * r, b);
    double F = v * v;
    if (F < out.min_value) {
      out.min_value = F;
      out.argmin_r = r;
    }
  }
  return out;
}

BeckCheck beck_bound_check(const DiffractionMeasure& m, std::int64_t R,
                           double eps) {
  if (R < 1000) fail(errc::bad_params, "horizon R must be >= 1000");
  const TreeGeometry geo(m.q);
  if (!(eps > 0.0) || !(eps < 0.25 * geo.tau)) {
    fail(errc::bad_params, "eps must lie in (0, tau/4)");
  }

  TermEvaluator eval(m, /*include_sign_atom=*/false);
  double sum = 0.0;
  for (std::int64_t r = 0; r <= R; ++r) sum += eval.scaled_sum(r);
  BeckCheck check;
  check.lhs = sum / static_cast<double>(R);

  const double q = m.q;
  double coefficient = 2.0 * (q + 1.0) * (q + 1.0) /
                       (q * (std::sqrt(q) + 1.0) * (std::sqrt(q) + 1.0));
  double principal_mass = 0.0;
  for (const auto& atom : m.atoms) {
    if (atom.param.branch != Branch::principal) continue;
    double t = atom.param.value;
    if (t < eps || t > 0.5 * geo.tau - eps) continue;
    principal_mass += atom.mass * c_function_sq(atom.param);
  }
  if (m.plancherel_coefficient > 0.0) {
    principal_mass +=
        m.plancherel_coefficient *
        integrate(
            [&](double t) {
              SpectralParam p = principal_param(t, m.q);
              return c_function_sq(p) * plancherel_density(p);
            },
            eps, 0.5 * geo.tau - eps, 1e-10);
  }
  check.rhs = coefficient * principal_mass;
  check.holds = !(check.lhs < check.rhs * (1.0 - 1e-6));
  return check;
}

}  // namespace treenv
