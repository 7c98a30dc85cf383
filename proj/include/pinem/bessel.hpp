#pragma once

// Bessel functions of integer order by Miller's backward recurrence with
// normalization sum J_0 + 2*sum_k J_{2k} = 1.  All orders 0..nmax come out
// of one downward pass, which is what the sideband sums need anyway.

#include <cmath>
#include <cstddef>
#include <vector>

#include "pinem/errors.hpp"

namespace pinem {

/// J_0(x)..J_nmax(x) for x >= 0.  Absolute accuracy ~1e-14.
inline std::vector<double> bessel_jn_array(double x, int nmax) {
  if (nmax < 0) throw parameter_error("bessel_jn_array: nmax < 0");
  std::vector<double> out(static_cast<std::size_t>(nmax) + 1, 0.0);
  if (x == 0.0) {
    out[0] = 1.0;
    return out;
  }
  // Start high enough that the downward recurrence has converged by nmax.
  const double xa = std::abs(x);
  int start = static_cast<int>(std::max<double>(nmax, xa)) + 16 +
              static_cast<int>(2.0 * std::sqrt(std::max<double>(nmax, xa)));
  if (start % 2 != 0) ++start;

  double jp = 0.0;        // J_{n+1}
  double jc = 1.0e-300;   // J_n, arbitrary seed
  double norm = 0.0;      // accumulates J_0 + 2*sum_{even n>0} J_n
  for (int n = start; n >= 1; --n) {
    const double jm = (2.0 * n / xa) * jc - jp;
    jp = jc;
    jc = jm;
    if (n - 1 <= nmax) out[static_cast<std::size_t>(n - 1)] = jc;
    if ((n - 1) % 2 == 0) norm += (n - 1 == 0) ? jc : 2.0 * jc;
    // Rescale to avoid overflow; the final normalization absorbs it.
    if (std::abs(jc) > 1.0e250) {
      jc *= 1.0e-250;
      jp *= 1.0e-250;
      norm *= 1.0e-250;
      for (double& v : out) v *= 1.0e-250;
    }
  }
  for (double& v : out) v /= norm;
  return out;
}

/// J_n(x) for a single (possibly negative) order.
inline double bessel_jn(int n, double x) {
  const int na = n < 0 ? -n : n;
  const double v = bessel_jn_array(x, na)[static_cast<std::size_t>(na)];
  return (n < 0 && na % 2 != 0) ? -v : v;
}

/// Smallest N with sum_{|n|<=N} |J_n(2g)|^2 >= 1 - tol.
inline int bessel_truncation(double g_mag, double tol) {
  if (!(tol > 0.0 && tol < 1.0))
    throw parameter_error("bessel_truncation: tol must lie in (0,1)");
  if (g_mag < 0.0)
    throw parameter_error("bessel_truncation: |g| must be non-negative");
  const double x = 2.0 * g_mag;
  if (x == 0.0) return 0;
  int nmax = static_cast<int>(x) + 40;
  for (;;) {
    const auto j = bessel_jn_array(x, nmax);
    double sum = j[0] * j[0];
    if (sum >= 1.0 - tol) return 0;
    for (int n = 1; n <= nmax; ++n) {
      sum += 2.0 * j[static_cast<std::size_t>(n)] * j[static_cast<std::size_t>(n)];
      if (sum >= 1.0 - tol) return n;
    }
    nmax *= 2;  // tol extremely tight; extend and retry
  }
}

/// Series order actually used by the interaction kernels: the weight-based
/// truncation extended through the amplitude tail, so every coefficient
/// above 1e-14 is retained.  The two-term lookahead keeps an accidental
/// Bessel zero inside the oscillatory region from stopping the extension.
inline int bessel_series_order(double g_mag, double tol = 1.0e-12) {
  const int base = bessel_truncation(g_mag, tol);
  if (g_mag == 0.0) return 0;
  const int cap = base + 96;
  const auto jn = bessel_jn_array(2.0 * g_mag, cap);
  int n = base;
  while (n + 2 <= cap &&
         (std::abs(jn[static_cast<std::size_t>(n + 1)]) > 1.0e-14 ||
          std::abs(jn[static_cast<std::size_t>(n + 2)]) > 1.0e-14))
    ++n;
  return n;
}

}  // namespace pinem
