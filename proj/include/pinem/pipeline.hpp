#pragma once

// Generic experiment runner: gaussian -> pre-drift -> interaction ->
// post-drift -> observables, plus the parallel sweep engine.

#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "pinem/config.hpp"
#include "pinem/interaction.hpp"
#include "pinem/observables.hpp"
#include "pinem/propagation.hpp"
#include "pinem/wavepacket.hpp"

namespace pinem {

struct PipelineOutputs {
  MomentumState final_state;
  Spectrum momentum_spec;
  Spectrum energy_spec;
  PositionDensity position;
  std::optional<WignerMap> wigner_map;
  std::vector<std::pair<std::string, std::string>> summary;
};

namespace detail {

inline std::string fmt(double v) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.10g", v);
  return buf;
}

/// Jacobian-corrected energy-axis view of a momentum spectrum.
inline Spectrum momentum_to_energy(const Spectrum& s, const BeamParameters& beam) {
  Spectrum e;
  e.axis_kind = AxisKind::energy;
  e.axis.resize(s.axis.size());
  e.density.resize(s.axis.size());
  for (std::size_t i = 0; i < s.axis.size(); ++i) {
    e.axis[i] = energy_offset(beam, s.axis[i]);
    e.density[i] = s.density[i] / (beam.v0 + s.axis[i] / beam.m_star);
  }
  return e;
}

}  // namespace detail

/// Runs the physics for a resolved experiment.  Pure apart from the cost of
/// the transforms; safe to call concurrently from sweep workers.
inline PipelineOutputs run_experiment(const ResolvedExperiment& r) {
  PipelineOutputs out;
  MomentumState st = gaussian_state(r.beam, r.grid);
  const Spectrum initial_espec = energy_spectrum(st);
  if (r.L0_nm > 0.0)
    st = apply_drift(st, DriftSpec{r.L0_nm, DriftPlacement::pre_interaction});

  InteractionSpec spec{r.laser, 1.0e-12, r.path};
  std::optional<Spectrum> incoherent;
  switch (r.mode) {
    case InteractionMode::coherent:
      st = apply_interaction(st, spec);
      break;
    case InteractionMode::weak:
      st = weak_field_state(st, spec);
      break;
    case InteractionMode::incoherent:
      incoherent = incoherent_spectrum(st, spec);
      break;
  }
  if (r.LD_nm > 0.0)
    st = apply_drift(st, DriftSpec{r.LD_nm, DriftPlacement::post_interaction});

  out.final_state = st;
  out.momentum_spec = incoherent ? *incoherent : momentum_spectrum(st);
  out.energy_spec = detail::momentum_to_energy(out.momentum_spec, r.beam);
  out.position = to_position(st);
  if (r.cfg && r.cfg->wigner) {
    double window = r.cfg->wigner_window_nm;
    if (window <= 0.0) window = 8.0 * drift_spread(r.beam, st.accumulated_pre_drift +
                                                              st.accumulated_post_drift);
    out.wigner_map = wigner(st, window, r.cfg->wigner_res);
  }

  const double gamma0 = decay_parameter(r.beam, r.laser);
  const double dE_num =
      incoherent ? spectral_mean(out.energy_spec)
                 : energy_transfer_numeric(st);
  auto& s = out.summary;
  s.emplace_back("gamma0", detail::fmt(gamma0));
  s.emplace_back("regime", regime_name(classify_regime(r.beam, r.laser).label));
  s.emplace_back("n_samples", std::to_string(r.grid.n_samples));
  s.emplace_back("dp", detail::fmt(r.grid.dp()));
  s.emplace_back("delta_E_numeric_eV", detail::fmt(dE_num));
  s.emplace_back("delta_E_analytic_eV",
                 detail::fmt(energy_transfer_analytic(
                     r.laser.g_mag, r.laser.phi0, gamma0, r.laser.photon_energy)));
  s.emplace_back("rms_width_eV", detail::fmt(spectral_width(out.energy_spec)));
  s.emplace_back("fwhm_eV", detail::fmt(spectral_fwhm(out.energy_spec)));
  s.emplace_back("initial_rms_width_eV",
                 detail::fmt(spectral_width(initial_espec)));
  s.emplace_back("peak_shift", detail::fmt(spectral_peak(out.momentum_spec)));
  s.emplace_back("peak_shift_expected_lpa",
                 detail::fmt(2.0 * r.laser.g_mag * r.laser.delta_p));
  s.emplace_back("pinem_spacing", detail::fmt(sideband_spacing_pinem(r.beam, r.laser)));
  s.emplace_back("pinem_spacing_energy_eV", detail::fmt(r.laser.photon_energy));
  if (r.L0_nm > 0.0) {
    const double ap = sideband_spacing_apinem(r.beam, r.laser, r.L0_nm);
    s.emplace_back("apinem_spacing", detail::fmt(ap));
    s.emplace_back("apinem_spacing_energy_eV", detail::fmt(ap * r.beam.v0));
    try {
      const double meas = measure_fringe_spacing(out.momentum_spec, ap);
      s.emplace_back("measured_spacing", detail::fmt(meas));
    } catch (const error&) {
      // spectrum featureless at these settings; nothing to report
    }
  }
  if (r.LD_nm > 0.0) {
    try {
      s.emplace_back("bunching_factor",
                     detail::fmt(bunching_factor(out.position, r.laser)));
    } catch (const coverage_error&) {
    }
  }
  s.emplace_back("dropped_weight", detail::fmt(st.dropped_weight));
  return out;
}

/// Runs an experiment and writes spectrum.csv, position_density.csv,
/// wigner.csv (when enabled) and summary.txt into out_dir.
inline PipelineOutputs run_pipeline(const ExperimentConfig& cfg,
                                    const std::string& out_dir) {
  const ResolvedExperiment r = resolve(cfg);
  PipelineOutputs out = run_experiment(r);
  namespace fs = std::filesystem;
  fs::create_directories(out_dir);
  {
    std::ofstream f(out_dir + "/spectrum.csv");
    write_csv(out.energy_spec, f);
  }
  {
    std::ofstream f(out_dir + "/spectrum_momentum.csv");
    write_csv(out.momentum_spec, f);
  }
  {
    std::ofstream f(out_dir + "/position_density.csv");
    write_csv(out.position, f);
  }
  if (out.wigner_map) {
    std::ofstream f(out_dir + "/wigner.csv");
    write_csv(*out.wigner_map, f);
  }
  {
    std::ofstream f(out_dir + "/summary.txt");
    for (const auto& [k, v] : out.summary) f << k << "=" << v << "\n";
  }
  return out;
}

// ---------------------------------------------------------------------------
// Sweeps

struct SweepAxis {
  std::string param;  ///< g, gamma0, sigma_E_eV, phi0_rad, L0_cm, LD_cm, ...
  double lo = 0.0;
  double hi = 0.0;
  int steps = 2;  ///< number of samples along the axis
};

struct SweepDef {
  SweepAxis axis1;
  std::optional<SweepAxis> axis2;
  std::string observable = "delta_E";
};

inline void apply_sweep_param(ExperimentConfig& c, const std::string& param,
                              double value) {
  if (param == "g") c.g = value;
  else if (param == "gamma0") { c.gamma0 = value; c.sigma_E_eV.reset(); c.sigma_z_um.reset(); }
  else if (param == "sigma_E_eV") { c.sigma_E_eV = value; c.gamma0.reset(); c.sigma_z_um.reset(); }
  else if (param == "phi0_rad") c.phi0_rad = value;
  else if (param == "L0_cm") c.L0_cm = value;
  else if (param == "LD_cm") c.LD_cm = value;
  else if (param == "photon_energy_eV") { c.photon_energy_eV = value; c.wavelength_nm.reset(); }
  else if (param == "wavelength_nm") { c.wavelength_nm = value; c.photon_energy_eV.reset(); }
  else throw parameter_error("sweep: unknown parameter '" + param + "'");
}

inline double eval_observable(const ExperimentConfig& cfg,
                              const std::string& name) {
  if (name == "L0_opt") {
    const ResolvedExperiment r = resolve(cfg);
    return nm_to_cm(find_optimal_focus(r.beam, r.laser,
                                       cm_to_nm(cfg.focus_lo_cm),
                                       cm_to_nm(cfg.focus_hi_cm))
                        .L0_opt);
  }
  if (name == "delta_E_analytic") {
    const ResolvedExperiment r = resolve(cfg);
    return energy_transfer_analytic(r.laser.g_mag, r.laser.phi0,
                                    decay_parameter(r.beam, r.laser),
                                    r.laser.photon_energy);
  }
  const ResolvedExperiment r = resolve(cfg);
  const PipelineOutputs out = run_experiment(r);
  if (name == "delta_E")
    return r.mode == InteractionMode::incoherent
               ? spectral_mean(out.energy_spec)
               : energy_transfer_numeric(out.final_state);
  if (name == "rms_width") return spectral_width(out.energy_spec);
  if (name == "fwhm") return spectral_fwhm(out.energy_spec);
  if (name == "bunching") return bunching_factor(out.position, r.laser);
  if (name == "measured_spacing") {
    if (r.L0_nm <= 0.0)
      throw parameter_error("sweep: measured_spacing needs L0_cm > 0");
    return measure_fringe_spacing(
        out.momentum_spec, sideband_spacing_apinem(r.beam, r.laser, r.L0_nm));
  }
  throw parameter_error("sweep: unknown observable '" + name + "'");
}

struct SweepResult {
  std::vector<double> p1, p2, value;  ///< p2 empty for 1-axis sweeps
  bool two_axes = false;
};

inline constexpr std::size_t kMaxSweepPoints = 10000;

/// Deterministic row order (axis1 outer, axis2 inner); points evaluated
/// concurrently up to `jobs` workers.
inline SweepResult run_sweep(const ExperimentConfig& base, const SweepDef& def,
                             unsigned jobs = 1) {
  const int n1 = def.axis1.steps;
  const int n2 = def.axis2 ? def.axis2->steps : 1;
  if (n1 < 1 || n2 < 1 || !(def.axis1.hi >= def.axis1.lo) ||
      (def.axis2 && !(def.axis2->hi >= def.axis2->lo)))
    throw parameter_error("sweep: invalid axis bounds");
  const std::size_t total = static_cast<std::size_t>(n1) * n2;
  if (total > kMaxSweepPoints)
    throw parameter_error("sweep: more than 10^4 points requested");

  auto axis_value = [](const SweepAxis& a, int i) {
    return a.steps == 1 ? a.lo : a.lo + (a.hi - a.lo) * i / (a.steps - 1);
  };

  SweepResult res;
  res.two_axes = def.axis2.has_value();
  res.p1.resize(total);
  res.p2.resize(res.two_axes ? total : 0);
  res.value.resize(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= total) return;
      const int i1 = static_cast<int>(idx) / n2;
      const int i2 = static_cast<int>(idx) % n2;
      ExperimentConfig cfg = base;
      const double v1 = axis_value(def.axis1, i1);
      apply_sweep_param(cfg, def.axis1.param, v1);
      res.p1[idx] = v1;
      if (def.axis2) {
        const double v2 = axis_value(*def.axis2, i2);
        apply_sweep_param(cfg, def.axis2->param, v2);
        res.p2[idx] = v2;
      }
      res.value[idx] = eval_observable(cfg, def.observable);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return res;
}

inline void write_csv(const SweepResult& r, std::ostream& os) {
  char buf[100];
  if (r.two_axes) {
    os << "param1,param2,value\n";
    for (std::size_t i = 0; i < r.value.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g,%.12g\n", r.p1[i], r.p2[i],
                    r.value[i]);
      os << buf;
    }
  } else {
    os << "param1,value\n";
    for (std::size_t i = 0; i < r.value.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.12g,%.12g\n", r.p1[i], r.value[i]);
      os << buf;
    }
  }
}

}  // namespace pinem
