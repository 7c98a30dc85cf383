#pragma once

// Internal unit system: energies in eV, times in fs, lengths in nm.
// Momenta then carry eV*fs/nm and masses eV*fs^2/nm^2, which keeps all
// beam and laser quantities order-unity.  A field of 1 V/nm acting on one
// electron charge is taken as exactly 1 eV/nm.

#include <cmath>

#include "pinem/errors.hpp"

namespace pinem {

struct UnitConstants {
  double hbar = 0.6582119569;           ///< eV*fs
  double c = 299.792458;                ///< nm/fs
  double electron_rest_energy = 510998.95;  ///< eV
};

inline constexpr UnitConstants units{};

/// Electron rest mass in eV*fs^2/nm^2.
inline double electron_mass() {
  return units.electron_rest_energy / (units.c * units.c);
}

/// Relativistic beam kinematics plus the intrinsic minimum-uncertainty
/// wavepacket widths derived from the energy spread.
struct BeamParameters {
  double beta;      ///< v0/c
  double gamma;     ///< Lorentz factor
  double v0;        ///< nm/fs
  double p0;        ///< eV*fs/nm
  double E0;        ///< eV, total energy
  double m_star;    ///< eV*fs^2/nm^2, longitudinal effective mass gamma^3 m
  double sigma_E;   ///< eV
  double sigma_p;   ///< eV*fs/nm
  double sigma_z0;  ///< nm
  double sigma_t0;  ///< fs
};

inline BeamParameters beam_from(double beta, double sigma_E) {
  if (!(beta > 0.0 && beta < 1.0))
    throw parameter_error("beam_from: beta must lie in (0,1)");
  if (!(sigma_E > 0.0))
    throw parameter_error("beam_from: sigma_E must be positive");
  BeamParameters b;
  const double m = electron_mass();
  b.beta = beta;
  b.gamma = 1.0 / std::sqrt(1.0 - beta * beta);
  b.v0 = beta * units.c;
  b.p0 = b.gamma * m * b.v0;
  b.E0 = b.gamma * units.electron_rest_energy;
  b.m_star = b.gamma * b.gamma * b.gamma * m;
  b.sigma_E = sigma_E;
  b.sigma_p = sigma_E / b.v0;
  b.sigma_z0 = units.hbar / (2.0 * b.sigma_p);
  b.sigma_t0 = b.sigma_z0 / b.v0;
  return b;
}

/// Same construction but starting from a spatial width sigma_z (nm).
inline BeamParameters beam_from_sigma_z(double beta, double sigma_z) {
  if (!(sigma_z > 0.0))
    throw parameter_error("beam_from_sigma_z: sigma_z must be positive");
  const double v0 = beta * units.c;
  const double sigma_E = units.hbar * v0 / (2.0 * sigma_z);
  return beam_from(beta, sigma_E);
}

/// Optical drive: wavelength, photon quantum, coupling and relative phase.
/// delta_p is the sideband momentum spacing hbar*omega/v0 for the beam the
/// laser was bound to.
struct LaserParameters {
  double wavelength;     ///< nm
  double photon_energy;  ///< eV
  double g_mag;          ///< dimensionless coupling magnitude |g|
  double phi0;           ///< rad
  double delta_p;        ///< eV*fs/nm
};

inline LaserParameters laser_from_photon_energy(const BeamParameters& beam,
                                                double photon_energy,
                                                double g_mag, double phi0) {
  if (!(photon_energy > 0.0))
    throw parameter_error("laser: photon energy must be positive");
  if (g_mag < 0.0) throw parameter_error("laser: |g| must be non-negative");
  LaserParameters l;
  l.photon_energy = photon_energy;
  l.wavelength = 2.0 * M_PI * units.hbar * units.c / photon_energy;
  l.g_mag = g_mag;
  l.phi0 = phi0;
  l.delta_p = photon_energy / beam.v0;
  return l;
}

inline LaserParameters laser_from_wavelength(const BeamParameters& beam,
                                             double wavelength, double g_mag,
                                             double phi0) {
  if (!(wavelength > 0.0))
    throw parameter_error("laser: wavelength must be positive");
  return laser_from_photon_energy(
      beam, 2.0 * M_PI * units.hbar * units.c / wavelength, g_mag, phi0);
}

/// Decay parameter Gamma_0 = hbar*omega / (2 sigma_E).
inline double decay_parameter(const BeamParameters& beam,
                              const LaserParameters& laser) {
  return laser.photon_energy / (2.0 * beam.sigma_E);
}

/// Coupling magnitude |g| = e F L / (2 hbar w) for a uniform top-hat field
/// profile of amplitude F (V/nm) and length L (nm).
inline double coupling_from_field(double field_amplitude, double length,
                                  const LaserParameters& laser) {
  if (field_amplitude < 0.0)
    throw parameter_error("coupling_from_field: field must be non-negative");
  if (!(length > 0.0))
    throw parameter_error("coupling_from_field: length must be positive");
  return field_amplitude * length / (2.0 * laser.photon_energy);
}

inline double cm_to_nm(double cm) { return cm * 1.0e7; }
inline double nm_to_cm(double nm) { return nm * 1.0e-7; }

}  // namespace pinem
