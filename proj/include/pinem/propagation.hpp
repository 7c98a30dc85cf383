#pragma once

// Free-space drift, transform to the comoving frame, and Wigner maps.
//
// Drift applies the dispersive phase exp(-i (p-p0)^2 t / (2 m* hbar)).  The
// linear piece v0 (p-p0) t of the free Hamiltonian is a rigid translation of
// the packet; all position densities here live in the comoving coordinate
// zeta = z - v0 t, where that translation is identically removed, so the
// linear phase never appears.  Momentum densities are untouched either way.

#include <cmath>
#include <complex>
#include <cstdio>
#include <ostream>
#include <vector>

#include "pinem/errors.hpp"
#include "pinem/fourier.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"

namespace pinem {

enum class DriftPlacement { pre_interaction, post_interaction };

struct DriftSpec {
  double length = 0.0;  ///< nm
  DriftPlacement placement = DriftPlacement::pre_interaction;
};

inline MomentumState apply_drift(const MomentumState& state,
                                 const DriftSpec& drift) {
  if (drift.length < 0.0)
    throw parameter_error("apply_drift: length must be non-negative");
  MomentumState out = state;
  if (drift.length == 0.0) return out;
  const double t = drift.length / state.beam.v0;
  const double coef = t / (2.0 * state.beam.m_star * units.hbar);
  for (std::size_t j = 0; j < out.grid.n_samples; ++j) {
    const double dp = out.grid.p(j) - out.beam.p0;
    out.amplitudes[j] *= std::polar(1.0, -coef * dp * dp);
  }
  if (drift.placement == DriftPlacement::pre_interaction)
    out.accumulated_pre_drift += t;
  else
    out.accumulated_post_drift += t;
  return out;
}

/// Real density over the comoving coordinate zeta = z - v0 t.
struct PositionDensity {
  std::vector<double> zeta;     ///< nm
  std::vector<double> density;  ///< 1/nm, integrates to 1
  double drift_length = 0.0;    ///< nm, post-interaction drift it was taken at
  double v0 = 0.0;              ///< nm/fs, for the tau = zeta/v0 axis
  double tau(std::size_t k) const { return zeta[k] / v0; }
};

inline PositionDensity to_position(const MomentumState& state) {
  const auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const std::size_t n = pos.psi.size();
  PositionDensity d;
  d.zeta.resize(n);
  d.density.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    d.zeta[k] = pos.zeta(k);
    d.density[k] = std::norm(pos.psi[k]);
  }
  d.drift_length = state.accumulated_post_drift * state.beam.v0;
  d.v0 = state.beam.v0;
  return d;
}

inline void write_csv(const PositionDensity& d, std::ostream& os) {
  os << "tau_fs,density\n";
  char buf[80];
  for (std::size_t k = 0; k < d.zeta.size(); ++k) {
    // density per fs in the tau axis
    std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", d.tau(k),
                  d.density[k] * d.v0);
    os << buf;
  }
}

/// Real phase-space map with marginal contracts against the 1-D densities.
struct WignerMap {
  std::vector<double> z_axis;  ///< nm (comoving zeta)
  std::vector<double> p_axis;  ///< eV*fs/nm (absolute p)
  std::vector<double> values;  ///< row-major [z][p]
  double imag_residue = 0.0;   ///< largest |Im| discarded by the transform
  double dz = 0.0;
  double dp = 0.0;
  double at(std::size_t iz, std::size_t ip) const {
    return values[iz * p_axis.size() + ip];
  }
};

inline constexpr std::size_t kMaxWignerResolution = std::size_t(1) << 11;

/// W(z,p) = (1/pi hbar) Int psi*(z+y) psi(z-y) exp(2 i p y / hbar) dy on an
/// R x R grid covering zeta in [-z_window, z_window].  The state is sampled
/// with an integer stride and a cosine-tapered edge (outer 5% on each side)
/// so the correlation sees no wrap-around discontinuity.
inline WignerMap wigner(const MomentumState& state, double z_window,
                        std::size_t resolution) {
  if (resolution > kMaxWignerResolution)
    throw cost_error("wigner: resolution exceeds 2^11 per axis");
  if (!(z_window > 0.0))
    throw parameter_error("wigner: z_window must be positive");
  std::size_t res = kMinSamples >> 2;  // 256 floor
  while (res < resolution) res <<= 1;

  const auto pos = position_from_momentum(state.amplitudes, state.grid.dp());
  const std::size_t n = pos.psi.size();
  const long stride = std::max<long>(
      1, std::lround(2.0 * z_window / (static_cast<double>(res) * pos.dzeta)));
  const double dz = static_cast<double>(stride) * pos.dzeta;

  // windowed, strided samples centered on zeta = 0
  std::vector<cdouble> w(res);
  for (std::size_t m = 0; m < res; ++m) {
    const long idx = static_cast<long>(n / 2) +
                     (static_cast<long>(m) - static_cast<long>(res / 2)) * stride;
    cdouble v = (idx >= 0 && idx < static_cast<long>(n))
                    ? pos.psi[static_cast<std::size_t>(idx)]
                    : cdouble{0.0, 0.0};
    const double edge = 0.05 * static_cast<double>(res);
    const double dlo = static_cast<double>(m);
    const double dhi = static_cast<double>(res - 1 - m);
    const double de = std::min(dlo, dhi);
    if (de < edge) v *= 0.5 * (1.0 - std::cos(M_PI * de / edge));
    w[m] = v;
  }

  WignerMap map;
  map.dz = dz;
  map.dp = M_PI * units.hbar / (static_cast<double>(res) * dz);
  map.z_axis.resize(res);
  map.p_axis.resize(res);
  for (std::size_t i = 0; i < res; ++i) {
    map.z_axis[i] = (static_cast<double>(i) - static_cast<double>(res) / 2.0) * dz;
    map.p_axis[i] =
        state.beam.p0 +
        (static_cast<double>(i) - static_cast<double>(res) / 2.0) * map.dp;
  }
  map.values.assign(res * res, 0.0);

  std::vector<cdouble> corr(res);
  for (std::size_t k = 0; k < res; ++k) {
    for (std::size_t t = 0; t < res; ++t) {
      const long j = (t < res / 2) ? static_cast<long>(t)
                                   : static_cast<long>(t) - static_cast<long>(res);
      const long ip = static_cast<long>(k) + j;
      const long im = static_cast<long>(k) - j;
      cdouble c{0.0, 0.0};
      if (ip >= 0 && ip < static_cast<long>(res) && im >= 0 &&
          im < static_cast<long>(res))
        c = std::conj(w[static_cast<std::size_t>(ip)]) *
            w[static_cast<std::size_t>(im)];
      // samples hold the carrier-free envelope, whose Wigner map is the full
      // map translated to p0; (-1)^j re-centers the transform bin index
      corr[t] = c * std::polar(1.0, -M_PI * static_cast<double>(j));
    }
    fft_pow2(corr, +1);
    const double scale = dz / (M_PI * units.hbar);
    for (std::size_t m = 0; m < res; ++m) {
      map.values[k * res + m] = corr[m].real() * scale;
      map.imag_residue =
          std::max(map.imag_residue, std::abs(corr[m].imag()) * scale);
    }
  }
  return map;
}

/// Marginal over p: should reproduce the position density on z_axis.
inline std::vector<double> wigner_position_marginal(const WignerMap& map) {
  std::vector<double> out(map.z_axis.size(), 0.0);
  for (std::size_t k = 0; k < map.z_axis.size(); ++k)
    for (std::size_t m = 0; m < map.p_axis.size(); ++m)
      out[k] += map.at(k, m) * map.dp;
  return out;
}

/// Marginal over z: should reproduce the momentum density on p_axis.
inline std::vector<double> wigner_momentum_marginal(const WignerMap& map) {
  std::vector<double> out(map.p_axis.size(), 0.0);
  for (std::size_t m = 0; m < map.p_axis.size(); ++m)
    for (std::size_t k = 0; k < map.z_axis.size(); ++k)
      out[m] += map.at(k, m) * map.dz;
  return out;
}

inline void write_csv(const WignerMap& map, std::ostream& os) {
  os << "z_nm,p,value\n";
  char buf[100];
  for (std::size_t k = 0; k < map.z_axis.size(); ++k)
    for (std::size_t m = 0; m < map.p_axis.size(); ++m) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", map.z_axis[k],
                    map.p_axis[m], map.at(k, m));
      os << buf;
    }
}

}  // namespace pinem
