#pragma once

// The photon-sideband scattering map, applied through two mathematically
// equivalent routes:
//
//   sideband sum  — truncated Bessel series sum_n J_n(2|g|) e^{-i n phi0}
//                   acting as momentum shifts by n*delta_p,
//   phase mask    — the unimodular position-space factor
//                   exp(+i 2|g| sin(w zeta/v0 - phi0))
//                   whose Jacobi-Anger expansion has the same coefficients.
//
// Sign convention: the mask sign is pinned so that a point-like packet
// (sigma_z0 much smaller than beta*lambda) gains momentum
// +2|g| delta_p cos(phi0), i.e. energy +2|g| hbar w cos(phi0).
//
// Momentum shifts by n*delta_p are exact spectral shifts (phase ramps in
// position space), never nearest-bin moves, so the two routes agree to
// near machine precision.

#include <cmath>
#include <complex>
#include <vector>

#include "pinem/bessel.hpp"
#include "pinem/errors.hpp"
#include "pinem/fourier.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"

namespace pinem {

enum class InteractionPath { sideband_sum, phase_mask };

struct InteractionSpec {
  LaserParameters laser;
  double truncation_tol = 1.0e-12;
  InteractionPath path = InteractionPath::sideband_sum;
};

inline void validate(const InteractionSpec& spec) {
  if (!(spec.truncation_tol > 0.0 && spec.truncation_tol <= 1.0e-3))
    throw parameter_error("InteractionSpec: truncation_tol must lie in (0, 1e-3]");
}

namespace detail {

/// Series order: the truncation contract plus the amplitude-tail extension.
/// Matches the order auto_grid budgets for, so library-built grids always
/// pass the coverage check.
inline int series_order(double g_mag, double tol) {
  return std::max(bessel_truncation(g_mag, tol), bessel_series_order(g_mag));
}

inline void check_coverage(const MomentumState& st, const LaserParameters& laser,
                           int order) {
  const double need = order * laser.delta_p + 4.0 * st.beam.sigma_p;
  if (need > st.grid.half_width)
    throw coverage_error("interaction: sideband support exceeds the grid");
}

}  // namespace detail

/// Sideband-sum route.  Output is renormalized; the (tiny) truncated weight
/// is recorded on the state.
inline MomentumState apply_pinem(const MomentumState& state,
                                 const InteractionSpec& spec) {
  validate(spec);
  const double g = spec.laser.g_mag;
  if (g == 0.0) return state;
  const double x = 2.0 * g;
  const int order = detail::series_order(g, spec.truncation_tol);
  const auto jn = bessel_jn_array(x, order);
  detail::check_coverage(state, spec.laser, order);

  auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const std::size_t n = pos.psi.size();
  const double k0 = spec.laser.delta_p / units.hbar;  // rad/nm per sideband
  double kept = jn[0] * jn[0];
  for (int m = 1; m <= order; ++m)
    kept += 2.0 * jn[static_cast<std::size_t>(m)] * jn[static_cast<std::size_t>(m)];

  for (std::size_t k = 0; k < n; ++k) {
    const double theta = k0 * pos.zeta(k);
    cdouble factor = jn[0];
    for (int m = 1; m <= order; ++m) {
      const double jm = jn[static_cast<std::size_t>(m)];
      // n = +m and n = -m terms, J_{-m} = (-1)^m J_m.
      const cdouble plus = std::polar(jm, m * (theta - spec.laser.phi0));
      const cdouble minus = std::polar(jm, -m * (theta - spec.laser.phi0));
      factor += plus + ((m & 1) ? -minus : minus);
    }
    pos.psi[k] *= factor;
  }

  MomentumState out = state;
  out.amplitudes = momentum_from_position(pos);
  out.dropped_weight = std::max(0.0, 1.0 - kept);
  renormalize(out);
  return out;
}

/// Phase-mask route: exp(+i 2|g| sin(w zeta/v0 - phi0)) in position space.
inline MomentumState apply_pinem_mask(const MomentumState& state,
                                      const InteractionSpec& spec) {
  validate(spec);
  const double g = spec.laser.g_mag;
  if (g == 0.0) return state;
  detail::check_coverage(state, spec.laser, bessel_series_order(g));

  auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const double k0 = spec.laser.delta_p / units.hbar;
  for (std::size_t k = 0; k < pos.psi.size(); ++k) {
    const double theta = k0 * pos.zeta(k) - spec.laser.phi0;
    pos.psi[k] *= std::polar(1.0, 2.0 * g * std::sin(theta));
  }
  MomentumState out = state;
  out.amplitudes = momentum_from_position(pos);
  out.dropped_weight = 0.0;
  return out;
}

inline MomentumState apply_interaction(const MomentumState& state,
                                       const InteractionSpec& spec) {
  return spec.path == InteractionPath::phase_mask ? apply_pinem_mask(state, spec)
                                                  : apply_pinem(state, spec);
}

/// Three-term weak-field state (1-|g|^2, +|g| e^{-i phi0}, -|g| e^{+i phi0}),
/// renormalized.  Advisory validity |g| < 0.2.
inline MomentumState weak_field_state(const MomentumState& state,
                                      const InteractionSpec& spec) {
  validate(spec);
  const double g = spec.laser.g_mag;
  if (g == 0.0) return state;
  detail::check_coverage(state, spec.laser, 1);
  auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const double k0 = spec.laser.delta_p / units.hbar;
  for (std::size_t k = 0; k < pos.psi.size(); ++k) {
    const double theta = k0 * pos.zeta(k);
    const cdouble up = std::polar(g, theta - spec.laser.phi0);
    const cdouble down = std::polar(g, -(theta - spec.laser.phi0));
    pos.psi[k] *= (1.0 - g * g) + up - down;
  }
  MomentumState out = state;
  out.amplitudes = momentum_from_position(pos);
  renormalize(out);
  return out;
}

/// Fully decoherent endpoint: the weighted sum of shifted sideband densities
/// with no interference cross-terms.
inline Spectrum incoherent_spectrum(const MomentumState& state,
                                    const InteractionSpec& spec) {
  validate(spec);
  const double g = spec.laser.g_mag;
  const std::size_t n = state.grid.n_samples;
  Spectrum s;
  s.axis_kind = AxisKind::momentum;
  s.axis.resize(n);
  for (std::size_t j = 0; j < n; ++j) s.axis[j] = state.grid.p(j) - state.beam.p0;
  s.density.assign(n, 0.0);

  const int order = detail::series_order(g, spec.truncation_tol);
  const auto jn = bessel_jn_array(2.0 * g, order);
  detail::check_coverage(state, spec.laser, order);

  const auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const double k0 = spec.laser.delta_p / units.hbar;
  std::vector<cdouble> shifted(n);
  for (int m = -order; m <= order; ++m) {
    const double jm = (m >= 0)
                          ? jn[static_cast<std::size_t>(m)]
                          : ((-m) & 1 ? -jn[static_cast<std::size_t>(-m)]
                                      : jn[static_cast<std::size_t>(-m)]);
    const double w = jm * jm;
    if (w < 1.0e-28) continue;
    PositionAmplitudes ramped = pos;
    for (std::size_t k = 0; k < n; ++k)
      ramped.psi[k] *= std::polar(1.0, m * k0 * ramped.zeta(k));
    shifted = momentum_from_position(ramped);
    for (std::size_t j = 0; j < n; ++j) s.density[j] += w * std::norm(shifted[j]);
  }
  const double total = integrate(s);
  for (auto& d : s.density) d /= total;
  return s;
}

}  // namespace pinem
