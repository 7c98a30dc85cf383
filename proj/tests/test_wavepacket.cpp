#include <cmath>
#include <random>
#include <sstream>

#include "doctest.h"
#include "pinem/fourier.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"

using namespace pinem;

TEST_CASE("gaussian state: normalization, peak, width, symmetry") {
  const auto beam = beam_from(0.7, 0.3);
  const auto laser = laser_from_wavelength(beam, 800.0, 1.0, 0.0);
  const auto grid = auto_grid(beam, laser, 1.0, 0.0, beam.sigma_p);
  const auto st = gaussian_state(beam, grid);

  CHECK(st.norm_sq() == doctest::Approx(1.0).epsilon(1e-10));

  const auto spec = momentum_spectrum(st);
  // peak exactly at p0 (center bin)
  std::size_t imax = 0;
  for (std::size_t i = 1; i < spec.density.size(); ++i)
    if (spec.density[i] > spec.density[imax]) imax = i;
  CHECK(spec.axis[imax] == doctest::Approx(0.0).epsilon(1e-14));

  // RMS width equals sigma_p
  double var = 0.0;
  for (std::size_t i = 0; i < spec.density.size(); ++i)
    var += spec.density[i] * spec.axis[i] * spec.axis[i];
  var *= grid.dp();
  CHECK(std::sqrt(var) == doctest::Approx(beam.sigma_p).epsilon(1e-8));
  CHECK(beam.sigma_p == doctest::Approx(1.4296e-3).epsilon(1e-3));

  // density even about p0
  const std::size_t n = grid.n_samples;
  for (std::size_t k = 1; k < n / 2; k += 17)
    CHECK(spec.density[n / 2 + k] ==
          doctest::Approx(spec.density[n / 2 - k]).epsilon(1e-12));
}

TEST_CASE("gaussian state rejects a too-narrow grid") {
  const auto beam = beam_from(0.7, 7.8);
  const MomentumGrid narrow{beam.p0, 4.0 * beam.sigma_p, 1024};
  CHECK_THROWS_AS(gaussian_state(beam, narrow), coverage_error);
}

TEST_CASE("auto_grid honours its post-conditions over random draws") {
  std::mt19937 rng(20240817);
  std::uniform_real_distribution<double> beta_d(0.3, 0.9);
  std::uniform_real_distribution<double> logse(-1.0, 1.2);
  std::uniform_real_distribution<double> g_d(0.0, 10.0);
  std::uniform_real_distribution<double> drift_d(0.0, 5e5);

  for (int trial = 0; trial < 60; ++trial) {
    const auto beam = beam_from(beta_d(rng), std::pow(10.0, logse(rng)));
    const auto laser = laser_from_wavelength(beam, 800.0, 1.0, 0.0);
    const double g = g_d(rng);
    const double t_drift = drift_d(rng);
    const auto grid = auto_grid(beam, laser, g, t_drift, beam.sigma_p);

    const int n_max = bessel_truncation(g, 1e-12);
    CHECK(grid.half_width >= (n_max + 4) * laser.delta_p + 8 * beam.sigma_p);
    CHECK(grid.dp() <= beam.sigma_p / 16.0);
    if (t_drift > 0.0) {
      const double extent = 2.0 * M_PI * units.hbar / grid.dp();
      CHECK(extent >= 16.0 * drift_spread(beam, t_drift) * (1.0 - 1e-12));
    }
    CHECK(is_pow2(grid.n_samples));
    CHECK(grid.n_samples >= kMinSamples);
    CHECK(grid.n_samples <= kMaxSamples);
  }
}

TEST_CASE("auto_grid reports the required sample count past the cap") {
  const auto beam = beam_from(0.7, 30.0);
  const auto laser = laser_from_wavelength(beam, 800.0, 1.0, 0.0);
  try {
    (void)auto_grid(beam, laser, 10.0, 0.0, beam.sigma_p * 1e-6);
    FAIL("expected resolution_error");
  } catch (const resolution_error& e) {
    CHECK(e.required_samples > kMaxSamples);
  }
}

TEST_CASE("g=0 grid is the pure-Gaussian 8-sigma window") {
  const auto beam = beam_from(0.7, 0.3);
  const auto laser = laser_from_wavelength(beam, 800.0, 0.0, 0.0);
  const auto grid = auto_grid(beam, laser, 0.0, 0.0, beam.sigma_p);
  CHECK(grid.half_width ==
        doctest::Approx(4 * laser.delta_p + 8 * beam.sigma_p).epsilon(1e-12));
}

TEST_CASE("centered transform round-trips and preserves the norm") {
  const auto beam = beam_from(0.7, 0.3);
  const auto laser = laser_from_wavelength(beam, 800.0, 1.0, 0.0);
  const auto grid = auto_grid(beam, laser, 1.0, 0.0, beam.sigma_p);
  const auto st = gaussian_state(beam, grid);

  const auto pos = position_from_momentum(st.amplitudes, grid.dp());
  double pos_norm = 0.0;
  for (const auto& v : pos.psi) pos_norm += std::norm(v);
  pos_norm *= pos.dzeta;
  CHECK(pos_norm == doctest::Approx(1.0).epsilon(1e-10));

  const auto back = momentum_from_position(pos);
  double err = 0.0;
  for (std::size_t j = 0; j < back.size(); ++j)
    err = std::max(err, std::abs(back[j] - st.amplitudes[j]));
  CHECK(err < 1e-12);
}

TEST_CASE("spectrum CSV carries the declared header") {
  const auto beam = beam_from(0.7, 0.3);
  const auto laser = laser_from_wavelength(beam, 800.0, 0.0, 0.0);
  const auto st = gaussian_state(beam, auto_grid(beam, laser, 0.0, 0.0, beam.sigma_p));
  std::ostringstream os;
  write_csv(momentum_spectrum(st), os);
  CHECK(os.str().substr(0, 22) == "axis_kind,axis,density");
}
