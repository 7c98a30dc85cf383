// Command-line front end: single-experiment runs, parameter sweeps and the
// figure-reproduction presets.
//
// Exit codes: 0 success, 2 configuration error, 3 numerical-resolution error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "pinem/pinem.hpp"

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const pinem::parameter_error*>(&e)) return 2;
  if (dynamic_cast<const pinem::coverage_error*>(&e)) return 3;
  if (dynamic_cast<const pinem::resolution_error*>(&e)) return 3;
  if (dynamic_cast<const pinem::cost_error*>(&e)) return 3;
  if (dynamic_cast<const pinem::search_error*>(&e)) return 3;
  return 2;
}

pinem::ExperimentConfig load_config(const std::string& config_path,
                                    const std::string& preset_name) {
  if (!preset_name.empty()) {
    const auto* p = pinem::find_preset(preset_name);
    if (!p) throw pinem::parameter_error("unknown preset '" + preset_name + "'");
    return p->config;
  }
  if (config_path.empty())
    throw pinem::parameter_error("either --config or --preset is required");
  return pinem::parse_config_file(config_path);
}

void write_plot_script(const std::string& out_dir, bool have_wigner) {
  std::ofstream f(out_dir + "/plot.py");
  f << "#!/usr/bin/env python3\n"
       "# Renders the CSV outputs in this directory.\n"
       "import csv, os\n"
       "import matplotlib\n"
       "matplotlib.use('Agg')\n"
       "import matplotlib.pyplot as plt\n"
       "here = os.path.dirname(os.path.abspath(__file__))\n"
       "def cols(name, skip=1):\n"
       "    rows = list(csv.reader(open(os.path.join(here, name))))[skip:]\n"
       "    return [[float(r[i]) for r in rows] for i in range(len(rows[0]))]\n"
       "if os.path.exists(os.path.join(here, 'spectrum.csv')):\n"
       "    rows = list(csv.reader(open(os.path.join(here, 'spectrum.csv'))))[1:]\n"
       "    x = [float(r[1]) for r in rows]; y = [float(r[2]) for r in rows]\n"
       "    plt.figure(); plt.plot(x, y)\n"
       "    plt.xlabel('E - E0 (eV)'); plt.ylabel('density (1/eV)')\n"
       "    plt.savefig(os.path.join(here, 'spectrum.png'), dpi=150)\n"
       "if os.path.exists(os.path.join(here, 'position_density.csv')):\n"
       "    t, d = cols('position_density.csv')\n"
       "    plt.figure(); plt.plot(t, d)\n"
       "    plt.xlabel('tau (fs)'); plt.ylabel('density (1/fs)')\n"
       "    plt.savefig(os.path.join(here, 'position_density.png'), dpi=150)\n"
       "if os.path.exists(os.path.join(here, 'sweep.csv')):\n"
       "    c = cols('sweep.csv')\n"
       "    plt.figure()\n"
       "    if len(c) == 2:\n"
       "        plt.plot(c[0], c[1]); plt.xlabel('param1'); plt.ylabel('value')\n"
       "    else:\n"
       "        plt.tricontourf(c[0], c[1], c[2], 60); plt.colorbar()\n"
       "        plt.xlabel('param1'); plt.ylabel('param2')\n"
       "    plt.savefig(os.path.join(here, 'sweep.png'), dpi=150)\n";
  if (have_wigner)
    f << "if os.path.exists(os.path.join(here, 'wigner.csv')):\n"
         "    z, p, w = cols('wigner.csv')\n"
         "    plt.figure(); plt.tricontourf(z, p, w, 60); plt.colorbar()\n"
         "    plt.xlabel('zeta (nm)'); plt.ylabel('p (eV fs/nm)')\n"
         "    plt.savefig(os.path.join(here, 'wigner.png'), dpi=150)\n";
}

void maybe_render(const std::string& out_dir) {
  const std::string cmd =
      "python3 '" + out_dir + "/plot.py' >/dev/null 2>&1";
  if (std::system(cmd.c_str()) != 0)
    std::cerr << "note: plot rendering failed (CSV outputs are unaffected)\n";
}

pinem::SweepAxis parse_axis(const std::string& s) {
  // name=lo:hi:steps
  const auto eq = s.find('=');
  const auto c1 = s.find(':', eq + 1);
  const auto c2 = s.find(':', c1 + 1);
  if (eq == std::string::npos || c1 == std::string::npos ||
      c2 == std::string::npos)
    throw pinem::parameter_error("--axis must look like name=lo:hi:steps");
  pinem::SweepAxis a;
  a.param = s.substr(0, eq);
  a.lo = std::stod(s.substr(eq + 1, c1 - eq - 1));
  a.hi = std::stod(s.substr(c1 + 1, c2 - c1 - 1));
  a.steps = std::stoi(s.substr(c2 + 1));
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pinem: free-electron wavepacket simulation of laser-driven "
               "sideband scattering, drift chirp and bunching"};
  app.require_subcommand(1);

  std::string config_path, preset_name, out_dir = "out";
  bool plot = false;
  unsigned jobs = 1;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "key=value configuration file");
    sub->add_option("--preset", preset_name, "figure preset name");
    sub->add_option("--out", out_dir, "output directory");
    sub->add_flag("--plot", plot, "render PNGs from the CSVs");
    sub->add_option("--jobs", jobs, "worker threads for sweeps");
  };

  auto* run = app.add_subcommand("run", "run one experiment pipeline");
  add_common(run);

  auto* sweep = app.add_subcommand("sweep", "sweep 1 or 2 parameters");
  add_common(sweep);
  std::vector<std::string> axis_args;
  std::string observable = "delta_E";
  sweep->add_option("--axis", axis_args, "sweep axis as name=lo:hi:steps (1 or 2)");
  sweep->add_option("--observable", observable,
                    "delta_E | delta_E_analytic | rms_width | fwhm | bunching "
                    "| measured_spacing | L0_opt");

  auto* presets = app.add_subcommand("presets", "list figure presets");

  CLI11_PARSE(app, argc, argv);

  try {
    if (presets->parsed()) {
      for (const auto& p : pinem::figure_presets()) {
        std::printf("%-8s %s%s\n", p.name.c_str(), p.description.c_str(),
                    p.sweep ? "  [sweep]" : "");
      }
      return 0;
    }

    pinem::ExperimentConfig cfg = load_config(config_path, preset_name);
    const pinem::FigurePreset* preset =
        preset_name.empty() ? nullptr : pinem::find_preset(preset_name);

    if (run->parsed()) {
      if (preset && preset->sweep) {
        const auto res = pinem::run_sweep(cfg, *preset->sweep, jobs);
        std::filesystem::create_directories(out_dir);
        std::ofstream f(out_dir + "/sweep.csv");
        pinem::write_csv(res, f);
        std::printf("points=%zu\nobservable=%s\n", res.value.size(),
                    preset->sweep->observable.c_str());
      } else {
        const auto out = pinem::run_pipeline(cfg, out_dir);
        for (const auto& [k, v] : out.summary)
          std::printf("%s=%s\n", k.c_str(), v.c_str());
      }
      if (plot) {
        write_plot_script(out_dir, cfg.wigner);
        maybe_render(out_dir);
      }
      return 0;
    }

    if (sweep->parsed()) {
      pinem::SweepDef def;
      if (axis_args.empty() || axis_args.size() > 2)
        throw pinem::parameter_error("sweep needs 1 or 2 --axis options");
      def.axis1 = parse_axis(axis_args[0]);
      if (axis_args.size() == 2) def.axis2 = parse_axis(axis_args[1]);
      def.observable = observable;
      const auto res = pinem::run_sweep(cfg, def, jobs);
      std::filesystem::create_directories(out_dir);
      std::ofstream f(out_dir + "/sweep.csv");
      pinem::write_csv(res, f);
      std::printf("points=%zu\nobservable=%s\n", res.value.size(),
                  def.observable.c_str());
      if (plot) {
        write_plot_script(out_dir, false);
        maybe_render(out_dir);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e);
  }
  return 0;
}
