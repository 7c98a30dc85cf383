#include "doctest.h"
#include "pinem/units.hpp"

using namespace pinem;

TEST_CASE("beam_from reproduces the reference kinematics") {
  const auto b = beam_from(0.7, 0.3);
  CHECK(b.gamma == doctest::Approx(1.4002800840280099).epsilon(1e-12));
  CHECK(b.v0 == doctest::Approx(0.7 * 299.792458).epsilon(1e-12));
  CHECK(b.m_star == doctest::Approx(b.gamma * b.gamma * b.gamma * electron_mass())
                        .epsilon(1e-12));
  CHECK(b.sigma_p == doctest::Approx(0.3 / b.v0).epsilon(1e-12));
  // sigma_p for the 0.3 eV beam, quoted value
  CHECK(b.sigma_p == doctest::Approx(1.4296e-3).epsilon(1e-3));
}

TEST_CASE("relativistic energy-momentum consistency") {
  for (double beta : {0.1, 0.5, 0.7, 0.95}) {
    const auto b = beam_from(beta, 1.0);
    const double lhs = b.E0 * b.E0;
    const double rhs = b.p0 * units.c * b.p0 * units.c +
                       units.electron_rest_energy * units.electron_rest_energy;
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("nonrelativistic limit") {
  const auto b = beam_from(1e-4, 0.1);
  CHECK(b.gamma == doctest::Approx(1.0).epsilon(1e-7));
  CHECK(b.p0 == doctest::Approx(electron_mass() * b.v0).epsilon(1e-7));
}

TEST_CASE("beam_from rejects bad parameters") {
  CHECK_THROWS_AS(beam_from(0.0, 0.3), parameter_error);
  CHECK_THROWS_AS(beam_from(1.0, 0.3), parameter_error);
  CHECK_THROWS_AS(beam_from(1.3, 0.3), parameter_error);
  CHECK_THROWS_AS(beam_from(0.7, 0.0), parameter_error);
  CHECK_THROWS_AS(beam_from(0.7, -1.0), parameter_error);
}

TEST_CASE("Heisenberg product holds by construction") {
  for (double se : {0.05, 0.3, 7.8, 38.75}) {
    const auto b = beam_from(0.7, se);
    CHECK(b.sigma_p * b.sigma_z0 == doctest::Approx(units.hbar / 2).epsilon(1e-14));
    CHECK(b.sigma_t0 == doctest::Approx(b.sigma_z0 / b.v0).epsilon(1e-14));
  }
}

TEST_CASE("decay parameter agrees along its three routes") {
  const auto b = beam_from(0.7, 0.3);
  const auto l = laser_from_wavelength(b, 800.0, 6.0, 0.0);
  const double g1 = decay_parameter(b, l);
  const double g2 = l.delta_p / (2.0 * b.sigma_p);
  const double omega = l.photon_energy / units.hbar;
  const double g3 = omega * b.sigma_t0;
  CHECK(g1 == doctest::Approx(g2).epsilon(1e-12));
  CHECK(g1 == doctest::Approx(g3).epsilon(1e-12));
}

TEST_CASE("decay parameter reference values") {
  const auto b1 = beam_from(0.7, 0.3);
  const auto l1 = laser_from_photon_energy(b1, 1.55, 1.0, 0.0);
  CHECK(decay_parameter(b1, l1) == doctest::Approx(1.55 / 0.6).epsilon(1e-12));

  const auto b2 = beam_from(0.7, 7.8);
  const auto l2 = laser_from_photon_energy(b2, 1.55, 3.0, 0.0);
  CHECK(decay_parameter(b2, l2) == doctest::Approx(0.0994).epsilon(1e-3));

  const auto b3 = beam_from(0.7, 1.55 / 2.0);
  CHECK(decay_parameter(b3, l2) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("photon energy and wavelength are consistent") {
  const auto b = beam_from(0.7, 0.3);
  const auto l = laser_from_wavelength(b, 800.0, 1.0, 0.0);
  CHECK(l.photon_energy == doctest::Approx(1.5498).epsilon(1e-3));
  CHECK(l.delta_p == doctest::Approx(l.photon_energy / b.v0).epsilon(1e-14));
  const auto l2 = laser_from_photon_energy(b, l.photon_energy, 1.0, 0.0);
  CHECK(l2.wavelength == doctest::Approx(800.0).epsilon(1e-12));
}

TEST_CASE("coupling from a uniform field profile") {
  const auto b = beam_from(0.7, 0.3);
  const auto l = laser_from_photon_energy(b, 1.55, 0.0, 0.0);
  CHECK(coupling_from_field(0.1, 31.0, l) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(coupling_from_field(0.0, 31.0, l) == doctest::Approx(0.0));
  CHECK(coupling_from_field(1e-3, 31.0, l) == doctest::Approx(0.01).epsilon(1e-12));
  CHECK_THROWS_AS(coupling_from_field(-0.1, 31.0, l), parameter_error);
  CHECK_THROWS_AS(coupling_from_field(0.1, 0.0, l), parameter_error);
}

TEST_CASE("beam_from_sigma_z inverts the Heisenberg construction") {
  const auto b = beam_from_sigma_z(0.7, 1500.0);
  CHECK(b.sigma_z0 == doctest::Approx(1500.0).epsilon(1e-12));
  CHECK(b.sigma_E == doctest::Approx(0.04604).epsilon(1e-3));
}
