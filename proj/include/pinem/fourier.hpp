#pragma once

// Radix-2 FFT and the centered momentum <-> comoving-position transforms.
//
// Grid convention: momentum samples p_j = p_center + (j - n/2) dp, position
// samples zeta_k = (k - n/2) dzeta with dzeta = 2 pi hbar / (n dp).  The
// transform pair is the symmetric continuum convention
//   psi(zeta) = (2 pi hbar)^{-1/2} Int a(p) exp(+i (p - p0) zeta / hbar) dp
// discretized with Riemann weights, so Parseval holds exactly on the grid.

#include <complex>
#include <cstddef>
#include <vector>

#include "pinem/errors.hpp"
#include "pinem/units.hpp"

namespace pinem {

using cdouble = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// In-place FFT, exponent sign `sign` (+1 or -1), no normalization.
inline void fft_pow2(std::vector<cdouble>& a, int sign) {
  const std::size_t n = a.size();
  if (!is_pow2(n)) throw parameter_error("fft_pow2: length must be a power of two");
  // bit reversal
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<cdouble> tw(n / 2);
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * M_PI / static_cast<double>(len);
    for (std::size_t k = 0; k < len / 2; ++k)
      tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const cdouble u = a[i + k];
        const cdouble v = a[i + k + len / 2] * tw[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }
}

/// Comoving-position samples of a state given its centered momentum samples.
struct PositionAmplitudes {
  std::vector<cdouble> psi;  ///< psi(zeta_k), k = 0..n-1
  double dzeta = 0.0;        ///< nm
  double zeta(std::size_t k) const {
    return (static_cast<double>(k) - static_cast<double>(psi.size()) / 2.0) * dzeta;
  }
};

/// Centered forward transform: momentum amplitudes (spacing dp) -> position.
inline PositionAmplitudes position_from_momentum(const std::vector<cdouble>& amp,
                                                 double dp) {
  const std::size_t n = amp.size();
  PositionAmplitudes pos;
  pos.dzeta = 2.0 * M_PI * units.hbar / (static_cast<double>(n) * dp);
  pos.psi.resize(n);
  const double scale = dp / std::sqrt(2.0 * M_PI * units.hbar);
  for (std::size_t j = 0; j < n; ++j)
    pos.psi[j] = (j & 1) ? -amp[j] : amp[j];
  fft_pow2(pos.psi, +1);
  for (std::size_t k = 0; k < n; ++k)
    if (k & 1) pos.psi[k] = -pos.psi[k];
  for (auto& v : pos.psi) v *= scale;
  return pos;
}

/// Inverse of position_from_momentum.
inline std::vector<cdouble> momentum_from_position(const PositionAmplitudes& pos) {
  const std::size_t n = pos.psi.size();
  std::vector<cdouble> amp(n);
  const double scale = pos.dzeta / std::sqrt(2.0 * M_PI * units.hbar);
  for (std::size_t k = 0; k < n; ++k)
    amp[k] = (k & 1) ? -pos.psi[k] : pos.psi[k];
  fft_pow2(amp, -1);
  for (std::size_t j = 0; j < n; ++j)
    if (j & 1) amp[j] = -amp[j];
  for (auto& v : amp) v *= scale;
  return amp;
}

}  // namespace pinem
