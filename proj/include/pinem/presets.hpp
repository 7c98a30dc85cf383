#pragma once

// Named figure-reproduction presets.  Each binds a full configuration (and,
// where the figure is a parameter scan, a sweep definition).

#include <optional>
#include <string>
#include <vector>

#include "pinem/config.hpp"
#include "pinem/pipeline.hpp"

namespace pinem {

struct FigurePreset {
  std::string name;
  std::string description;
  ExperimentConfig config;
  std::optional<SweepDef> sweep;
};

inline const std::vector<FigurePreset>& figure_presets() {
  static const std::vector<FigurePreset> presets = [] {
    std::vector<FigurePreset> v;
    const double pi = M_PI;

    auto base = [](double sigma_E, double g, double phi0) {
      ExperimentConfig c;
      c.beta = 0.7;
      c.sigma_E_eV = sigma_E;
      c.wavelength_nm = 800.0;
      c.g = g;
      c.phi0_rad = phi0;
      return c;
    };

    v.push_back({"fig1b",
                 "PINEM sidebands: sigma_E=0.3 eV << hbar_w, |g|=6, phi0=0",
                 base(0.3, 6.0, 0.0), std::nullopt});
    v.push_back({"fig1c",
                 "transition regime: sigma_E=1.55 eV ~ hbar_w, |g|=6",
                 base(1.55, 6.0, 0.0), std::nullopt});
    v.push_back({"fig1d",
                 "point-particle acceleration: sigma_E=7.8 eV >> hbar_w, |g|=6",
                 base(7.8, 6.0, 0.0), std::nullopt});
    {
      FigurePreset p{"fig1e",
                     "energy transfer vs coupling and decay parameter",
                     base(0.3, 6.0, 0.0),
                     SweepDef{SweepAxis{"g", 0.05, 13.0, 30},
                              SweepAxis{"gamma0", 0.02, 4.0, 30}, "delta_E"}};
      p.config.sigma_E_eV.reset();
      p.config.gamma0 = 1.0;
      v.push_back(p);
    }
    v.push_back({"fig1g",
                 "coherent PINEM-to-LPA transition vs energy uncertainty",
                 base(0.3, 6.0, 0.0),
                 SweepDef{SweepAxis{"sigma_E_eV", 0.2, 12.0, 60}, std::nullopt,
                          "delta_E"}});
    {
      FigurePreset p{"fig1h",
                     "decoherent endpoint: spectral spread, no net gain",
                     base(0.3, 6.0, 0.0),
                     SweepDef{SweepAxis{"sigma_E_eV", 0.2, 12.0, 60},
                              std::nullopt, "rms_width"}};
      p.config.mode = InteractionMode::incoherent;
      v.push_back(p);
    }

    auto fig2 = [&](double phi0) {
      ExperimentConfig c = base(7.8, 3.0, phi0);
      c.L0_cm = 0.8;
      return c;
    };
    v.push_back({"fig2a", "spectral focusing, phi0=-pi/2, L0=0.8 cm",
                 fig2(-pi / 2), std::nullopt});
    v.push_back({"fig2b", "accelerated focusing, phi0=0, L0=0.8 cm", fig2(0.0),
                 std::nullopt});
    v.push_back({"fig2c", "defocusing, phi0=+pi/2, L0=0.8 cm", fig2(pi / 2),
                 std::nullopt});
    v.push_back({"fig2d", "decelerated focusing, phi0=pi, L0=0.8 cm", fig2(pi),
                 std::nullopt});
    v.push_back({"fig2e",
                 "spectral width vs pre-interaction drift, phi0=-pi/2",
                 fig2(-pi / 2),
                 SweepDef{SweepAxis{"L0_cm", 0.05, 3.0, 60}, std::nullopt,
                          "rms_width"}});

    {
      ExperimentConfig c;
      c.beta = 0.7;
      c.gamma0 = 0.13;
      c.wavelength_nm = 800.0;
      c.g = 0.3;
      c.L0_cm = 8.0;
      v.push_back({"fig3b",
                   "drift-scaled fringes: |g|=0.3, Gamma0=0.13, L0=8 cm", c,
                   std::nullopt});
      FigurePreset p{"fig3c",
                     "fringe spacing vs pre-interaction drift",
                     c,
                     SweepDef{SweepAxis{"L0_cm", 2.0, 16.0, 29}, std::nullopt,
                              "measured_spacing"}};
      v.push_back(p);
    }
    {
      ExperimentConfig c;
      c.beta = 0.7;
      c.sigma_z_um = 1.5;
      c.wavelength_nm = 800.0;
      c.g = 1.0;
      FigurePreset e{"fig3e",
                     "temporal bunching vs post-interaction drift",
                     c,
                     SweepDef{SweepAxis{"LD_cm", 0.2, 5.0, 49}, std::nullopt,
                              "bunching"}};
      v.push_back(e);
      ExperimentConfig f = c;
      f.LD_cm = 1.8;
      v.push_back({"fig3f",
                   "optimal attosecond bunching: |g|=1, sigma_z=1.5 um, LD=1.8 cm",
                   f, std::nullopt});
    }

    {
      ExperimentConfig c = base(0.3, 10.0, 0.0);
      v.push_back({"fig4a", "infrared PINEM: sigma_E=0.3 eV, |g|=10", c,
                   std::nullopt});
      ExperimentConfig b = c;
      b.wavelength_nm.reset();
      b.photon_energy_eV = 0.005;
      v.push_back({"fig4b", "THz point-particle acceleration: hbar_w=5 meV", b,
                   std::nullopt});
      ExperimentConfig d = c;
      d.L0_cm = 12.0;
      v.push_back({"fig4c", "pre-chirped infrared PINEM, L0=12 cm", d,
                   std::nullopt});
      ExperimentConfig e = b;
      e.L0_cm = 0.23;
      v.push_back({"fig4d", "THz drive with pre-interaction drift, L0=0.23 cm",
                   e, std::nullopt});
    }

    {
      ExperimentConfig c = base(0.3, 6.0, 0.0);
      c.wigner = true;
      c.wigner_res = 1024;
      v.push_back({"figS1",
                   "phase-space map, PINEM regime (vary sigma_E_eV for the "
                   "transition and acceleration panels)",
                   c, std::nullopt});
    }
    {
      ExperimentConfig c;
      c.beta = 0.7;
      c.gamma0 = 0.1;
      c.wavelength_nm = 800.0;
      c.g = 3.0;
      c.phi0_rad = -pi / 2;
      v.push_back({"figS2",
                   "focusing vs drift at Gamma0=0.1, |g|=3 (vary phi0_rad for "
                   "the other panels)",
                   c,
                   SweepDef{SweepAxis{"L0_cm", 0.05, 3.0, 60}, std::nullopt,
                            "rms_width"}});
      FigurePreset s3{"figS3",
                      "optimal focusing length vs coupling at Gamma0=0.1",
                      c,
                      SweepDef{SweepAxis{"g", 1.0, 6.0, 6}, std::nullopt,
                               "L0_opt"}};
      s3.config.focus_lo_cm = 0.1;
      s3.config.focus_hi_cm = 8.0;
      v.push_back(s3);
    }
    return v;
  }();
  return presets;
}

inline const FigurePreset* find_preset(const std::string& name) {
  for (const auto& p : figure_presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace pinem
