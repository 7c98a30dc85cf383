#pragma once

// Flat key=value experiment configuration: file parsing, validation and
// resolution into the physics types.  Drift lengths are accepted in cm (the
// natural bench unit) and converted to nm internally.

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "pinem/errors.hpp"
#include "pinem/interaction.hpp"
#include "pinem/observables.hpp"
#include "pinem/units.hpp"
#include "pinem/wavepacket.hpp"

namespace pinem {

enum class InteractionMode { coherent, incoherent, weak };

struct ExperimentConfig {
  double beta = 0.7;
  std::optional<double> sigma_E_eV;
  std::optional<double> sigma_z_um;
  std::optional<double> gamma0;  ///< alternative width spec: sigma_E = hw/2G0
  std::optional<double> wavelength_nm;
  std::optional<double> photon_energy_eV;
  double g = 0.0;
  double phi0_rad = 0.0;
  double L0_cm = 0.0;
  double LD_cm = 0.0;
  InteractionPath path = InteractionPath::sideband_sum;
  InteractionMode mode = InteractionMode::coherent;
  std::optional<std::size_t> grid_n;
  std::optional<double> grid_half_width;
  bool wigner = false;
  double wigner_window_nm = 0.0;  ///< 0 = auto
  std::size_t wigner_res = 512;
  double focus_lo_cm = 0.1;
  double focus_hi_cm = 3.0;
  double bunch_lo_cm = 0.2;
  double bunch_hi_cm = 6.0;
};

struct ResolvedExperiment {
  BeamParameters beam;
  LaserParameters laser;
  MomentumGrid grid;
  double L0_nm = 0.0;
  double LD_nm = 0.0;
  InteractionPath path = InteractionPath::sideband_sum;
  InteractionMode mode = InteractionMode::coherent;
  const ExperimentConfig* cfg = nullptr;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

inline double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    const double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw parameter_error("config: bad numeric value for '" + key + "': " + v);
  }
}

}  // namespace detail

inline void set_config_key(ExperimentConfig& c, const std::string& key,
                           const std::string& value) {
  using detail::to_double;
  if (key == "beta") c.beta = to_double(key, value);
  else if (key == "sigma_E_eV") c.sigma_E_eV = to_double(key, value);
  else if (key == "sigma_z_um") c.sigma_z_um = to_double(key, value);
  else if (key == "gamma0") c.gamma0 = to_double(key, value);
  else if (key == "wavelength_nm") c.wavelength_nm = to_double(key, value);
  else if (key == "photon_energy_eV") c.photon_energy_eV = to_double(key, value);
  else if (key == "g") c.g = to_double(key, value);
  else if (key == "phi0_rad") c.phi0_rad = to_double(key, value);
  else if (key == "L0_cm") c.L0_cm = to_double(key, value);
  else if (key == "LD_cm") c.LD_cm = to_double(key, value);
  else if (key == "grid_n") c.grid_n = static_cast<std::size_t>(to_double(key, value));
  else if (key == "grid_half_width") c.grid_half_width = to_double(key, value);
  else if (key == "wigner") c.wigner = to_double(key, value) != 0.0;
  else if (key == "wigner_window_nm") c.wigner_window_nm = to_double(key, value);
  else if (key == "wigner_res") c.wigner_res = static_cast<std::size_t>(to_double(key, value));
  else if (key == "focus_lo_cm") c.focus_lo_cm = to_double(key, value);
  else if (key == "focus_hi_cm") c.focus_hi_cm = to_double(key, value);
  else if (key == "bunch_lo_cm") c.bunch_lo_cm = to_double(key, value);
  else if (key == "bunch_hi_cm") c.bunch_hi_cm = to_double(key, value);
  else if (key == "path") {
    if (value == "sideband_sum") c.path = InteractionPath::sideband_sum;
    else if (value == "phase_mask") c.path = InteractionPath::phase_mask;
    else throw parameter_error("config: path must be sideband_sum or phase_mask");
  } else if (key == "mode") {
    if (value == "coherent") c.mode = InteractionMode::coherent;
    else if (value == "incoherent") c.mode = InteractionMode::incoherent;
    else if (value == "weak") c.mode = InteractionMode::weak;
    else throw parameter_error("config: mode must be coherent, incoherent or weak");
  } else {
    throw parameter_error("config: unknown key '" + key + "'");
  }
}

inline ExperimentConfig parse_config(std::istream& in) {
  ExperimentConfig c;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw parameter_error("config: line " + std::to_string(lineno) +
                            " is not key=value");
    set_config_key(c, detail::trim(line.substr(0, eq)),
                   detail::trim(line.substr(eq + 1)));
  }
  return c;
}

inline ExperimentConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("config: cannot open " + path);
  return parse_config(in);
}

inline ResolvedExperiment resolve(const ExperimentConfig& c) {
  if (c.wavelength_nm.has_value() == c.photon_energy_eV.has_value())
    throw parameter_error(
        "config: exactly one of wavelength_nm / photon_energy_eV is required");
  const int width_specs = int(c.sigma_E_eV.has_value()) +
                          int(c.sigma_z_um.has_value()) +
                          int(c.gamma0.has_value());
  if (width_specs != 1)
    throw parameter_error(
        "config: exactly one of sigma_E_eV / sigma_z_um / gamma0 is required");

  ResolvedExperiment r;
  r.cfg = &c;
  const double photon_energy =
      c.photon_energy_eV ? *c.photon_energy_eV
                         : 2.0 * M_PI * units.hbar * units.c / *c.wavelength_nm;
  double sigma_E;
  if (c.sigma_E_eV) sigma_E = *c.sigma_E_eV;
  else if (c.gamma0) sigma_E = photon_energy / (2.0 * *c.gamma0);
  else sigma_E = 0.0;  // from sigma_z below

  if (c.sigma_z_um)
    r.beam = beam_from_sigma_z(c.beta, *c.sigma_z_um * 1.0e3);
  else
    r.beam = beam_from(c.beta, sigma_E);
  r.laser = laser_from_photon_energy(r.beam, photon_energy, c.g, c.phi0_rad);

  r.L0_nm = cm_to_nm(c.L0_cm);
  r.LD_nm = cm_to_nm(c.LD_cm);
  if (r.L0_nm < 0.0 || r.LD_nm < 0.0)
    throw parameter_error("config: drift lengths must be non-negative");
  r.path = c.path;
  r.mode = c.mode;

  if (c.grid_n || c.grid_half_width) {
    const MomentumGrid base = auto_grid(
        r.beam, r.laser, c.g, (r.L0_nm + r.LD_nm) / r.beam.v0, r.beam.sigma_p);
    r.grid = make_grid(r.beam.p0,
                       c.grid_half_width ? *c.grid_half_width : base.half_width,
                       c.grid_n ? *c.grid_n : base.n_samples);
  } else {
    double feature = r.beam.sigma_p;
    if (r.L0_nm > 0.0)
      feature = std::min(feature,
                         sideband_spacing_apinem(r.beam, r.laser, r.L0_nm));
    r.grid = auto_grid(r.beam, r.laser, c.g,
                       (r.L0_nm + r.LD_nm) / r.beam.v0, feature);
  }
  return r;
}

}  // namespace pinem
