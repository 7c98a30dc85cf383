#pragma once

// Quantitative outputs: energy transfer, reference densities, widths,
// spacing laws, bunching factor, regime labels and the 1-D drift searches.

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "pinem/errors.hpp"
#include "pinem/interaction.hpp"
#include "pinem/propagation.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"

namespace pinem {

// ---------------------------------------------------------------------------
// Energy transfer

/// Quadrature of the momentum density against the full dispersion
/// v0 (p-p0) + (p-p0)^2 / 2m*.
inline double energy_transfer_numeric(const MomentumState& st) {
  double sum = 0.0;
  const double dp = st.grid.dp();
  for (std::size_t j = 0; j < st.grid.n_samples; ++j) {
    const double q = st.grid.p(j) - st.beam.p0;
    sum += std::norm(st.amplitudes[j]) * energy_offset(st.beam, q);
  }
  return sum * dp;
}

/// Closed form 2|g| hbar*w cos(phi0) exp(-Gamma0^2/2).
inline double energy_transfer_analytic(double g_mag, double phi0, double gamma0,
                                       double photon_energy) {
  if (g_mag < 0.0)
    throw parameter_error("energy_transfer_analytic: |g| must be >= 0");
  return 2.0 * g_mag * photon_energy * std::cos(phi0) *
         std::exp(-0.5 * gamma0 * gamma0);
}

// ---------------------------------------------------------------------------
// Reference densities and widths

/// Point-particle limit: the initial Gaussian rigidly shifted by 2|g| delta_p.
inline Spectrum lpa_reference_density(const BeamParameters& beam,
                                      const LaserParameters& laser,
                                      const MomentumGrid& grid) {
  const double shift = 2.0 * laser.g_mag * laser.delta_p;
  if (grid.p_center + grid.half_width < beam.p0 + shift + 8.0 * beam.sigma_p)
    throw coverage_error("lpa_reference_density: grid does not cover the shifted peak");
  Spectrum s;
  s.axis_kind = AxisKind::momentum;
  const std::size_t n = grid.n_samples;
  s.axis.resize(n);
  s.density.resize(n);
  const double s2 = 2.0 * beam.sigma_p * beam.sigma_p;
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double q = grid.p(j) - beam.p0;
    s.axis[j] = q;
    s.density[j] = std::exp(-(q - shift) * (q - shift) / s2);
    total += s.density[j];
  }
  total *= grid.dp();
  for (auto& d : s.density) d /= total;
  return s;
}

inline double spectral_mean(const Spectrum& s) {
  const auto w = axis_weights(s.axis);
  double m = 0.0, tot = 0.0;
  for (std::size_t i = 0; i < s.axis.size(); ++i) {
    m += w[i] * s.density[i] * s.axis[i];
    tot += w[i] * s.density[i];
  }
  return m / tot;
}

/// RMS standard deviation of the density along its axis.
inline double spectral_width(const Spectrum& s) {
  const auto w = axis_weights(s.axis);
  const double mean = spectral_mean(s);
  double v = 0.0, tot = 0.0;
  for (std::size_t i = 0; i < s.axis.size(); ++i) {
    const double d = s.axis[i] - mean;
    v += w[i] * s.density[i] * d * d;
    tot += w[i] * s.density[i];
  }
  return std::sqrt(v / tot);
}

/// Full width at half maximum by linear interpolation of the half crossings.
inline double spectral_fwhm(const Spectrum& s) {
  const std::size_t n = s.density.size();
  std::size_t imax = 0;
  for (std::size_t i = 1; i < n; ++i)
    if (s.density[i] > s.density[imax]) imax = i;
  const double half = 0.5 * s.density[imax];
  double lo = s.axis.front(), hi = s.axis.back();
  for (std::size_t i = imax; i > 0; --i)
    if (s.density[i - 1] < half) {
      const double f = (half - s.density[i - 1]) / (s.density[i] - s.density[i - 1]);
      lo = s.axis[i - 1] + f * (s.axis[i] - s.axis[i - 1]);
      break;
    }
  for (std::size_t i = imax; i + 1 < n; ++i)
    if (s.density[i + 1] < half) {
      const double f = (s.density[i] - half) / (s.density[i] - s.density[i + 1]);
      hi = s.axis[i] + f * (s.axis[i + 1] - s.axis[i]);
      break;
    }
  return hi - lo;
}

/// Peak position refined by a parabolic fit through the maximum bin.
inline double spectral_peak(const Spectrum& s) {
  const std::size_t n = s.density.size();
  std::size_t i = 1;
  for (std::size_t j = 2; j + 1 < n; ++j)
    if (s.density[j] > s.density[i]) i = j;
  const double ym = s.density[i - 1], y0 = s.density[i], yp = s.density[i + 1];
  const double den = ym - 2.0 * y0 + yp;
  double frac = 0.0;
  if (den != 0.0) frac = 0.5 * (ym - yp) / den;
  return s.axis[i] + frac * (s.axis[i] - s.axis[i - 1]);
}

// ---------------------------------------------------------------------------
// Sideband spacing laws

/// PINEM spacing 2 pi hbar / (beta lambda) = hbar w / v0.
inline double sideband_spacing_pinem(const BeamParameters& beam,
                                     const LaserParameters& laser) {
  return 2.0 * M_PI * units.hbar / (beam.beta * laser.wavelength);
}

/// Drift-induced spacing beta lambda m* v0 / L0.
inline double sideband_spacing_apinem(const BeamParameters& beam,
                                      const LaserParameters& laser, double L0) {
  if (!(L0 > 0.0))
    throw parameter_error("sideband_spacing_apinem: L0 must be positive");
  return beam.beta * laser.wavelength * beam.m_star * beam.v0 / L0;
}

/// Fringe spacing measured from a momentum spectrum as 2 pi / kappa*, where
/// kappa* maximizes |Int rho(p) e^{i kappa p} dp| near the expected spacing.
/// The harmonic amplitude is a smooth functional of the sampled density, so
/// the estimate is stable under grid refinement (unlike per-peak detection).
inline double measure_fringe_spacing(const Spectrum& s, double expected) {
  if (!(expected > 0.0))
    throw parameter_error("measure_fringe_spacing: expected spacing must be > 0");
  const auto w = axis_weights(s.axis);
  auto harmonic = [&](double kappa) {
    double re = 0.0, im = 0.0;
    for (std::size_t i = 0; i < s.axis.size(); ++i) {
      re += w[i] * s.density[i] * std::cos(kappa * s.axis[i]);
      im += w[i] * s.density[i] * std::sin(kappa * s.axis[i]);
    }
    return std::sqrt(re * re + im * im);
  };
  const double k_lo = 2.0 * M_PI / (1.8 * expected);
  const double k_hi = 2.0 * M_PI / (0.55 * expected);
  const int coarse = 240;
  double best_k = k_lo, best_v = -1.0;
  for (int i = 0; i <= coarse; ++i) {
    const double k = k_lo + (k_hi - k_lo) * i / coarse;
    const double v = harmonic(k);
    if (v > best_v) {
      best_v = v;
      best_k = k;
    }
  }
  // parabolic refinement iterated on a shrinking stencil
  double h = (k_hi - k_lo) / coarse;
  for (int it = 0; it < 40 && h > 1.0e-12 * best_k; ++it) {
    const double fm = harmonic(best_k - h);
    const double f0 = harmonic(best_k);
    const double fp = harmonic(best_k + h);
    const double den = fm - 2.0 * f0 + fp;
    if (den < 0.0) {
      double step = 0.5 * (fm - fp) / den;
      step = std::clamp(step, -1.0, 1.0);
      best_k += step * h;
    }
    h *= 0.5;
  }
  return 2.0 * M_PI / best_k;
}

/// Median gap between detected density peaks in the central 60% of the
/// envelope.  Cross-check companion to measure_fringe_spacing.
inline double median_fringe_gap(const Spectrum& s) {
  const double mean = spectral_mean(s);
  const double width = spectral_width(s);
  const double lo = mean - 1.5 * width, hi = mean + 1.5 * width;
  double dmax = 0.0;
  for (std::size_t i = 0; i < s.axis.size(); ++i)
    if (s.axis[i] > lo && s.axis[i] < hi) dmax = std::max(dmax, s.density[i]);
  std::vector<double> peaks;
  for (std::size_t i = 2; i + 2 < s.axis.size(); ++i) {
    if (s.axis[i] <= lo || s.axis[i] >= hi) continue;
    if (s.density[i] < 0.05 * dmax) continue;
    if (s.density[i] > s.density[i - 1] && s.density[i] > s.density[i - 2] &&
        s.density[i] >= s.density[i + 1] && s.density[i] > s.density[i + 2])
      peaks.push_back(s.axis[i]);
  }
  if (peaks.size() < 2)
    throw coverage_error("median_fringe_gap: fewer than two peaks found");
  std::vector<double> gaps;
  for (std::size_t i = 1; i < peaks.size(); ++i)
    gaps.push_back(peaks[i] - peaks[i - 1]);
  std::sort(gaps.begin(), gaps.end());
  return gaps[gaps.size() / 2];
}

// ---------------------------------------------------------------------------
// Bunching factor

/// First-harmonic magnitude of the comoving density at the optical period
/// beta*lambda, in [0,1].
inline double bunching_factor(const PositionDensity& density,
                              const LaserParameters& laser) {
  const double beta = density.v0 / units.c;
  const double period = beta * laser.wavelength;
  const double span = density.zeta.back() - density.zeta.front();
  if (span < 10.0 * period)
    throw coverage_error("bunching_factor: window shorter than 10 optical periods");
  double re = 0.0, im = 0.0, tot = 0.0;
  const double k = 2.0 * M_PI / period;
  const double dz = density.zeta[1] - density.zeta[0];
  for (std::size_t i = 0; i < density.zeta.size(); ++i) {
    re += density.density[i] * std::cos(k * density.zeta[i]) * dz;
    im += density.density[i] * std::sin(k * density.zeta[i]) * dz;
    tot += density.density[i] * dz;
  }
  return std::sqrt(re * re + im * im) / tot;
}

// ---------------------------------------------------------------------------
// 1-D searches

/// Golden-section minimization on [a,b] to relative tolerance rel_tol.
inline double golden_section_minimize(const std::function<double(double)>& f,
                                      double a, double b, double rel_tol) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a);
  double d = a + gr * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > rel_tol * (std::abs(a) + std::abs(b))) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - gr * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + gr * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

namespace detail {

/// Pre-scan, golden section, then a short damped-Newton polish on central
/// differences.  The polish pins the minimizer to the stationary point of
/// the objective itself, which keeps it stable under grid refinement.
inline double minimize_unimodal(const std::function<double(double)>& f,
                                double lo, double hi, const char* what) {
  constexpr int kScan = 32;
  double best = lo, best_f = 0.0;
  int best_i = 0;
  std::vector<double> xs(kScan + 1), fs(kScan + 1);
  for (int i = 0; i <= kScan; ++i) {
    xs[i] = lo + (hi - lo) * i / kScan;
    fs[i] = f(xs[i]);
    if (i == 0 || fs[i] < best_f) {
      best_f = fs[i];
      best = xs[i];
      best_i = i;
    }
  }
  if (best_i == 0 || best_i == kScan)
    throw search_error(std::string(what) +
                       ": extremum not bracketed by the given range");
  double a = xs[best_i - 1], b = xs[best_i + 1];
  double x = golden_section_minimize(f, a, b, 1.0e-4);
  for (int it = 0; it < 4; ++it) {
    const double h = std::max(5.0e-4 * std::abs(x), 1.0e-6 * (hi - lo));
    const double fm = f(x - h), f0 = f(x), fp = f(x + h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    if (d2 <= 0.0) break;
    double step = -d1 / d2;
    step = std::clamp(step, -0.05 * (hi - lo), 0.05 * (hi - lo));
    x += step;
    x = std::clamp(x, a, b);
  }
  (void)best;
  return x;
}

}  // namespace detail

struct FocusResult {
  double L0_opt = 0.0;         ///< nm
  double width_at_opt = 0.0;   ///< eV
  double width_initial = 0.0;  ///< eV
  double focusing_ratio = 1.0;
};

/// Spectral width after (drift L0 -> interaction) as a function of L0,
/// minimized over [L0_lo, L0_hi] (nm).  A caller-supplied grid (e.g. for
/// convergence studies) overrides the automatic choice.
inline FocusResult find_optimal_focus(const BeamParameters& beam,
                                      const LaserParameters& laser,
                                      double L0_lo, double L0_hi,
                                      const MomentumGrid* grid_override = nullptr) {
  if (!(L0_hi > L0_lo) || L0_lo < 0.0)
    throw parameter_error("find_optimal_focus: invalid range");
  const double apinem =
      sideband_spacing_apinem(beam, laser, std::max(L0_hi, 1.0));
  const MomentumGrid grid =
      grid_override ? *grid_override
                    : auto_grid(beam, laser, laser.g_mag, L0_hi / beam.v0,
                                std::min(beam.sigma_p, apinem));
  const MomentumState initial = gaussian_state(beam, grid);
  InteractionSpec spec{laser, 1.0e-12, InteractionPath::phase_mask};
  auto width_at = [&](double L0) {
    const auto drifted =
        apply_drift(initial, DriftSpec{L0, DriftPlacement::pre_interaction});
    return spectral_width(energy_spectrum(apply_pinem_mask(drifted, spec)));
  };
  FocusResult r;
  r.L0_opt = detail::minimize_unimodal(width_at, L0_lo, L0_hi,
                                       "find_optimal_focus");
  r.width_at_opt = width_at(r.L0_opt);
  r.width_initial = spectral_width(energy_spectrum(initial));
  r.focusing_ratio = r.width_initial / r.width_at_opt;
  return r;
}

struct BunchingResult {
  double LD_opt = 0.0;  ///< nm
  double factor = 0.0;
  bool degenerate = false;  ///< objective flat (no modulation to optimize)
};

/// Bunching factor after (interaction -> drift LD), maximized over
/// [LD_lo, LD_hi] (nm).
inline BunchingResult find_optimal_bunching(const BeamParameters& beam,
                                            const LaserParameters& laser,
                                            double LD_lo, double LD_hi) {
  if (!(LD_hi > LD_lo) || LD_lo < 0.0)
    throw parameter_error("find_optimal_bunching: invalid range");
  const MomentumGrid grid = auto_grid(beam, laser, laser.g_mag,
                                      LD_hi / beam.v0, beam.sigma_p);
  InteractionSpec spec{laser, 1.0e-12, InteractionPath::phase_mask};
  const MomentumState kicked =
      apply_pinem_mask(gaussian_state(beam, grid), spec);
  auto factor_at = [&](double LD) {
    const auto drifted =
        apply_drift(kicked, DriftSpec{LD, DriftPlacement::post_interaction});
    return bunching_factor(to_position(drifted), laser);
  };
  BunchingResult r;
  // flat-objective probe before committing to a search
  double probe_max = 0.0;
  for (int i = 0; i <= 8; ++i)
    probe_max = std::max(probe_max, factor_at(LD_lo + (LD_hi - LD_lo) * i / 8));
  if (probe_max < 1.0e-3) {
    r.LD_opt = 0.5 * (LD_lo + LD_hi);
    r.factor = probe_max;
    r.degenerate = true;
    return r;
  }
  auto negated = [&](double LD) { return -factor_at(LD); };
  r.LD_opt = detail::minimize_unimodal(negated, LD_lo, LD_hi,
                                       "find_optimal_bunching");
  r.factor = factor_at(r.LD_opt);
  return r;
}

// ---------------------------------------------------------------------------
// Regime classification

enum class Regime { PINEM, transition, LPA };

struct RegimeLabel {
  Regime label = Regime::transition;
  double gamma0 = 0.0;
};

inline constexpr double kGamma0Hi = 2.0;
inline constexpr double kGamma0Lo = 0.5;

inline RegimeLabel classify_regime(const BeamParameters& beam,
                                   const LaserParameters& laser) {
  RegimeLabel r;
  r.gamma0 = decay_parameter(beam, laser);
  if (r.gamma0 > kGamma0Hi)
    r.label = Regime::PINEM;
  else if (r.gamma0 < kGamma0Lo)
    r.label = Regime::LPA;
  else
    r.label = Regime::transition;
  return r;
}

inline const char* regime_name(Regime r) {
  switch (r) {
    case Regime::PINEM: return "PINEM";
    case Regime::LPA: return "LPA";
    default: return "transition";
  }
}

}  // namespace pinem
