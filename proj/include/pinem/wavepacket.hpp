#pragma once

// Momentum-grid representation of the electron wavepacket.  Momentum space
// is the canonical representation; position densities are always derived by
// transform.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include "pinem/bessel.hpp"
#include "pinem/errors.hpp"
#include "pinem/fourier.hpp"
#include "pinem/units.hpp"

namespace pinem {

inline constexpr std::size_t kMinSamples = std::size_t(1) << 10;
inline constexpr std::size_t kMaxSamples = std::size_t(1) << 22;

/// Uniform momentum grid centered on p0: p_j = p_center + (j - n/2) dp.
struct MomentumGrid {
  double p_center = 0.0;    ///< eV*fs/nm
  double half_width = 0.0;  ///< eV*fs/nm
  std::size_t n_samples = 0;

  double dp() const { return 2.0 * half_width / static_cast<double>(n_samples); }
  /// Offset p_j - p_center.
  double offset(std::size_t j) const {
    return (static_cast<double>(j) - static_cast<double>(n_samples) / 2.0) * dp();
  }
  double p(std::size_t j) const { return p_center + offset(j); }
};

inline MomentumGrid make_grid(double p_center, double half_width,
                              std::size_t n_samples) {
  if (!is_pow2(n_samples) || n_samples < kMinSamples)
    throw parameter_error("make_grid: n_samples must be a power of two >= 1024");
  if (!(half_width > 0.0))
    throw parameter_error("make_grid: half_width must be positive");
  return MomentumGrid{p_center, half_width, n_samples};
}

/// Chirp-spread spatial width sigma_z(t) = sigma_z0 sqrt(1 + (xi t)^2).
inline double drift_spread(const BeamParameters& beam, double t_fs) {
  const double xi = 2.0 * beam.sigma_p * beam.sigma_p / (beam.m_star * units.hbar);
  return beam.sigma_z0 * std::sqrt(1.0 + (xi * t_fs) * (xi * t_fs));
}

/// Chooses a grid wide enough for up to max_g coupling and fine enough that
/// (a) dp resolves min_feature/16 and (b) the conjugate position window holds
/// the wavepacket after a drift of duration max_drift_fs with a 16x margin.
inline MomentumGrid auto_grid(const BeamParameters& beam,
                              const LaserParameters& laser, double max_g,
                              double max_drift_fs, double min_feature) {
  if (max_g < 0.0) throw parameter_error("auto_grid: max_g must be >= 0");
  if (!(min_feature > 0.0))
    throw parameter_error("auto_grid: min_feature must be positive");
  const int n_max = bessel_series_order(max_g);
  const double half_width =
      (n_max + 4) * laser.delta_p + 8.0 * beam.sigma_p;
  double dp_req = min_feature / 16.0;
  if (max_drift_fs > 0.0) {
    const double extent_req = 16.0 * drift_spread(beam, max_drift_fs);
    dp_req = std::min(dp_req, 2.0 * M_PI * units.hbar / extent_req);
  }
  const double n_req = std::ceil(2.0 * half_width / dp_req);
  std::size_t n = kMinSamples;
  while (static_cast<double>(n) < n_req) {
    if (n >= kMaxSamples) {
      const auto need = static_cast<std::size_t>(n_req);
      throw resolution_error(
          "auto_grid: required n_samples " + std::to_string(need) +
              " exceeds the cap of 2^22",
          need);
    }
    n <<= 1;
  }
  return MomentumGrid{beam.p0, half_width, n};
}

/// The single evolving object: complex amplitudes on a momentum grid.
/// Normalization contract: sum |amp|^2 dp = 1.
struct MomentumState {
  MomentumGrid grid;
  std::vector<cdouble> amplitudes;
  BeamParameters beam;
  double accumulated_pre_drift = 0.0;   ///< fs
  double accumulated_post_drift = 0.0;  ///< fs
  double dropped_weight = 0.0;  ///< sideband weight discarded by truncation

  double norm_sq() const {
    double s = 0.0;
    for (const auto& a : amplitudes) s += std::norm(a);
    return s * grid.dp();
  }
};

inline void renormalize(MomentumState& st) {
  const double n = std::sqrt(st.norm_sq());
  for (auto& a : st.amplitudes) a /= n;
}

/// Initial minimum-uncertainty Gaussian centered at p0, real amplitudes.
inline MomentumState gaussian_state(const BeamParameters& beam,
                                    const MomentumGrid& grid) {
  if (grid.half_width < 8.0 * beam.sigma_p)
    throw coverage_error("gaussian_state: grid narrower than 8 sigma_p");
  MomentumState st;
  st.grid = grid;
  st.beam = beam;
  st.amplitudes.resize(grid.n_samples);
  const double s2 = 4.0 * beam.sigma_p * beam.sigma_p;
  for (std::size_t j = 0; j < grid.n_samples; ++j) {
    const double dpj = grid.offset(j) + (grid.p_center - beam.p0);
    st.amplitudes[j] = std::exp(-dpj * dpj / s2);
  }
  renormalize(st);
  return st;
}

enum class AxisKind { momentum, energy };

/// Normalized 1-D density over momentum offsets p-p0 or energy offsets E-E0.
struct Spectrum {
  AxisKind axis_kind = AxisKind::momentum;
  std::vector<double> axis;
  std::vector<double> density;
};

/// Trapezoid quadrature weights for a (possibly non-uniform) axis.
inline std::vector<double> axis_weights(const std::vector<double>& axis) {
  const std::size_t n = axis.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double h = axis[i + 1] - axis[i];
    w[i] += 0.5 * h;
    w[i + 1] += 0.5 * h;
  }
  return w;
}

inline double integrate(const Spectrum& s) {
  const auto w = axis_weights(s.axis);
  double sum = 0.0;
  for (std::size_t i = 0; i < s.axis.size(); ++i) sum += w[i] * s.density[i];
  return sum;
}

/// |psi_p|^2 on the momentum-offset axis.
inline Spectrum momentum_spectrum(const MomentumState& st) {
  Spectrum s;
  s.axis_kind = AxisKind::momentum;
  const std::size_t n = st.grid.n_samples;
  s.axis.resize(n);
  s.density.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    s.axis[j] = st.grid.p(j) - st.beam.p0;
    s.density[j] = std::norm(st.amplitudes[j]);
  }
  return s;
}

/// Energy offset for a momentum offset, full quadratic dispersion.
inline double energy_offset(const BeamParameters& beam, double dp) {
  return beam.v0 * dp + dp * dp / (2.0 * beam.m_star);
}

/// Density mapped onto the energy-offset axis E - E0 (Jacobian included).
inline Spectrum energy_spectrum(const MomentumState& st) {
  Spectrum s;
  s.axis_kind = AxisKind::energy;
  const std::size_t n = st.grid.n_samples;
  s.axis.resize(n);
  s.density.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double dp = st.grid.p(j) - st.beam.p0;
    s.axis[j] = energy_offset(st.beam, dp);
    s.density[j] = std::norm(st.amplitudes[j]) / (st.beam.v0 + dp / st.beam.m_star);
  }
  return s;
}

inline void write_csv(const Spectrum& s, std::ostream& os) {
  const char* kind = s.axis_kind == AxisKind::momentum ? "momentum" : "energy";
  os << "axis_kind,axis,density\n";
  char buf[80];
  for (std::size_t i = 0; i < s.axis.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%s,%.12g,%.12g\n", kind, s.axis[i],
                  s.density[i]);
    os << buf;
  }
}

}  // namespace pinem
