#include <cmath>
#include <random>

#include "doctest.h"
#include "pinem/bessel.hpp"
#include "pinem/interaction.hpp"
#include "pinem/observables.hpp"

using namespace pinem;

namespace {

MomentumState prepared_state(double sigma_E, double g, double max_drift = 0.0) {
  const auto beam = beam_from(0.7, sigma_E);
  const auto laser = laser_from_wavelength(beam, 800.0, g, 0.0);
  return gaussian_state(beam, auto_grid(beam, laser, g, max_drift, beam.sigma_p));
}

InteractionSpec spec_for(const MomentumState& st, double g, double phi0,
                         InteractionPath path = InteractionPath::sideband_sum) {
  return InteractionSpec{laser_from_wavelength(st.beam, 800.0, g, phi0), 1e-12,
                         path};
}

double l2_distance(const MomentumState& a, const MomentumState& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.amplitudes.size(); ++j)
    s += std::norm(a.amplitudes[j] - b.amplitudes[j]);
  return std::sqrt(s * a.grid.dp());
}

/// Weight in the +/- delta_p/2 window around sideband n.
double sideband_weight(const MomentumState& st, const LaserParameters& laser,
                       int n) {
  const double center = n * laser.delta_p;
  double w = 0.0;
  for (std::size_t j = 0; j < st.grid.n_samples; ++j) {
    const double q = st.grid.p(j) - st.beam.p0;
    if (std::abs(q - center) <= laser.delta_p / 2.0)
      w += std::norm(st.amplitudes[j]);
  }
  return w * st.grid.dp();
}

}  // namespace

TEST_CASE("g=0 interaction is the identity on both paths") {
  const auto st = prepared_state(0.3, 0.0);
  const auto s = spec_for(st, 0.0, 0.4);
  CHECK(l2_distance(apply_pinem(st, s), st) == doctest::Approx(0.0));
  CHECK(l2_distance(apply_pinem_mask(st, s), st) == doctest::Approx(0.0));
  CHECK(l2_distance(weak_field_state(st, s), st) == doctest::Approx(0.0));
}

TEST_CASE("dual-path equivalence on the pinned (g, phi0) grid") {
  for (double g : {1.0, 3.0, 6.0}) {
    const auto st = prepared_state(0.3, g);
    for (double phi0 : {0.0, M_PI / 4, M_PI / 2}) {
      const auto a = apply_pinem(st, spec_for(st, g, phi0));
      const auto b = apply_pinem_mask(st, spec_for(st, g, phi0));
      CHECK(l2_distance(a, b) < 1e-10);
    }
  }
}

TEST_CASE("dual-path equivalence over a randomized sweep") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> g_d(0.05, 10.0);
  std::uniform_real_distribution<double> phi_d(-M_PI, M_PI);
  std::uniform_real_distribution<double> gam_d(0.05, 3.0);
  for (int t = 0; t < 12; ++t) {
    const double g = g_d(rng);
    const double gamma0 = gam_d(rng);
    const double sigma_E = 1.5498 / (2.0 * gamma0);
    const auto st = prepared_state(sigma_E, g);
    const double phi0 = phi_d(rng);
    const auto a = apply_pinem(st, spec_for(st, g, phi0));
    const auto b = apply_pinem_mask(st, spec_for(st, g, phi0));
    CHECK(l2_distance(a, b) < 1e-10);
  }
}

TEST_CASE("unitarity of both paths up to g = 20") {
  for (double g : {0.5, 6.0, 20.0}) {
    const auto st = prepared_state(0.3, g);
    CHECK(apply_pinem(st, spec_for(st, g, 0.3)).norm_sq() ==
          doctest::Approx(1.0).epsilon(1e-8));
    CHECK(apply_pinem_mask(st, spec_for(st, g, 0.3)).norm_sq() ==
          doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("sideband probabilities follow |J_n(2g)|^2 in the plane-wave regime") {
  // Gamma0 = 8: Gaussian tails and sideband overlap both below 1e-6.
  const double sigma_E = 1.5498 / 16.0;
  const double g = 2.0;
  const auto st = prepared_state(sigma_E, g);
  const auto s = spec_for(st, g, 0.0);
  const auto out = apply_pinem(st, s);
  const auto jn = bessel_jn_array(2.0 * g, 12);
  for (int n = -4; n <= 4; ++n) {
    const double jnv = jn[std::abs(n)];
    CHECK(sideband_weight(out, s.laser, n) ==
          doctest::Approx(jnv * jnv).epsilon(2e-6));
  }
}

TEST_CASE("n=0 weight at moderate decay parameter") {
  const auto st = prepared_state(0.3, 0.5);  // Gamma0 = 2.58
  const auto s = spec_for(st, 0.5, 0.0);
  const auto out = apply_pinem(st, s);
  const double j0 = bessel_jn_array(1.0, 0)[0];
  CHECK(sideband_weight(out, s.laser, 0) == doctest::Approx(j0 * j0).epsilon(0.02));
  CHECK(j0 * j0 == doctest::Approx(0.5855).epsilon(1e-3));
}

TEST_CASE("strong coupling at vanishing decay parameter shifts the peak") {
  const double sigma_E = 1.5498 / (2.0 * 0.02);  // Gamma0 = 0.02
  const double g = 6.0;
  const auto st = prepared_state(sigma_E, g);
  const auto s = spec_for(st, g, 0.0);
  const auto out = apply_pinem(st, s);
  const double peak = spectral_peak(momentum_spectrum(out));
  CHECK(peak == doctest::Approx(2.0 * g * s.laser.delta_p)
                    .epsilon(0.02));
}

TEST_CASE("weak-field approximation tracks the full map") {
  const double g = 0.05;
  const auto st = prepared_state(0.3, g);
  const auto s = spec_for(st, g, 0.0);
  const auto full = apply_pinem(st, s);
  const auto weak = weak_field_state(st, s);
  CHECK(l2_distance(full, weak) < 1e-2);

  const double asym_full = sideband_weight(full, s.laser, 1) -
                           sideband_weight(full, s.laser, -1);
  const double asym_weak = sideband_weight(weak, s.laser, 1) -
                           sideband_weight(weak, s.laser, -1);
  CHECK(asym_weak == doctest::Approx(asym_full).epsilon(1e-3));
}

TEST_CASE("phase is 2pi periodic") {
  const double g = 2.0;
  const auto st = prepared_state(0.8, g);
  const auto a = apply_pinem(st, spec_for(st, g, 0.7));
  const auto b = apply_pinem(st, spec_for(st, g, 0.7 + 2.0 * M_PI));
  CHECK(l2_distance(a, b) < 1e-12);
}

TEST_CASE("sideband interference drives the net energy transfer") {
  // The antisymmetric part of the density carries the whole first moment,
  // which must agree with the closed-form transfer.
  const double gamma0 = 0.5;
  const double sigma_E = 1.5498 / (2.0 * gamma0);
  const double g = 3.0;
  const auto st = prepared_state(sigma_E, g);
  const auto s = spec_for(st, g, 0.0);
  const auto out = apply_pinem(st, s);
  const auto spec = momentum_spectrum(out);
  const std::size_t n = spec.density.size();
  double moment = 0.0;
  for (std::size_t k = 1; k < n / 2; ++k) {
    const double q = spec.axis[n / 2 + k];
    moment += q * (spec.density[n / 2 + k] - spec.density[n / 2 - k]);
  }
  moment *= st.grid.dp();
  const double expect = energy_transfer_analytic(g, 0.0, gamma0,
                                                 s.laser.photon_energy) /
                        st.beam.v0;
  CHECK(moment == doctest::Approx(expect).epsilon(1e-3));
}

TEST_CASE("incoherent spectrum: no net transfer, growing width") {
  const auto beam = beam_from(0.7, 0.3);
  double prev_width = 0.0;
  for (double g : {0.0, 1.0, 3.0, 6.0}) {
    const auto laser = laser_from_wavelength(beam, 800.0, g, 0.0);
    const auto st = gaussian_state(beam, auto_grid(beam, laser, 6.0, 0.0, beam.sigma_p));
    const auto spec = incoherent_spectrum(st, InteractionSpec{laser, 1e-12});
    const double mean = spectral_mean(spec);
    CHECK(std::abs(mean * beam.v0) < 1e-8 * laser.photon_energy);
    const double width = spectral_width(spec);
    CHECK(width > prev_width);
    prev_width = width;
  }
}

TEST_CASE("incoherent width grows while the mean stays put at small Gamma0") {
  const double sigma_E = 1.5498 / 0.1;  // Gamma0 = 0.05
  const auto beam = beam_from(0.7, sigma_E);
  const auto laser = laser_from_wavelength(beam, 800.0, 6.0, 0.0);
  const auto st = gaussian_state(beam, auto_grid(beam, laser, 6.0, 0.0, beam.sigma_p));
  const auto spec = incoherent_spectrum(st, InteractionSpec{laser, 1e-12});
  CHECK(spectral_width(spec) > beam.sigma_p);
  CHECK(std::abs(spectral_mean(spec)) < 1e-8);
}

TEST_CASE("truncation tolerance outside its domain is rejected") {
  const auto st = prepared_state(0.3, 1.0);
  auto s = spec_for(st, 1.0, 0.0);
  s.truncation_tol = 0.5;
  CHECK_THROWS_AS(apply_pinem(st, s), parameter_error);
}

TEST_CASE("a grid without sideband room raises a coverage error") {
  const auto beam = beam_from(0.7, 0.3);
  const auto laser = laser_from_wavelength(beam, 800.0, 12.0, 0.0);
  // grid sized for g=1 cannot hold the g=12 sideband fan
  const auto small = auto_grid(beam, laser, 1.0, 0.0, beam.sigma_p);
  const auto st = gaussian_state(beam, small);
  CHECK_THROWS_AS(apply_pinem(st, InteractionSpec{laser, 1e-12}), coverage_error);
}
