// harmocass: family/envelope/locus renderer and verification driver.
//
// Exit codes: 0 success (all checks pass), 1 failure (a check failed or an
// output could not be written), 2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "harmocass/render.hpp"
#include "harmocass/verify.hpp"

namespace {

using harmocass::render::Scene;

void emit_outputs(const Scene& scene, const std::string& svg_path,
                  const std::string& csv_path) {
  if (!svg_path.empty()) harmocass::render::save_svg(scene, svg_path);
  if (!csv_path.empty()) harmocass::render::save_csv(scene, csv_path);
  if (svg_path.empty() && csv_path.empty())
    harmocass::render::write_csv(scene, std::cout);
}

nlohmann::json report_to_json(const harmocass::verify::VerifyReport& rep) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"status", c.pass ? "pass" : "fail"},
                      {"measured", c.measured},
                      {"tolerance", c.tolerance}});
  return {{"overall", rep.overall()}, {"checks", checks}};
}

void print_report(const harmocass::verify::VerifyReport& rep) {
  std::size_t width = 4;
  for (const auto& c : rep.checks) width = std::max(width, c.name.size());
  for (const auto& c : rep.checks)
    std::printf("%-*s  %s  measured %.3e  tolerance %.3e\n",
                static_cast<int>(width), c.name.c_str(),
                c.pass ? "pass" : "FAIL", c.measured, c.tolerance);
  std::printf("%zu checks, %s\n", rep.checks.size(),
              rep.overall() ? "all passed" : "FAILURES present");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Projectile and harmonic-oscillator curve families, their safety "
               "envelopes, and the Cassini oval traced by the orbit foci"};
  app.require_subcommand(1);

  double g = 9.81, v0 = 10.0, x0 = 1.0, omega = 1.0;
  int n_angles = 24, n_samples = 360;
  std::string svg_path, csv_path, json_path, suite_name = "all";
  std::optional<double> tol_override;
  double tol_value = 0.0;

  auto* proj = app.add_subcommand("projectile",
                                  "Trajectory family, safety parabola, focus circle");
  proj->add_option("--g", g, "Gravitational acceleration")->capture_default_str();
  proj->add_option("--v0", v0, "Launch speed")->capture_default_str();
  proj->add_option("--angles", n_angles, "Number of launch angles in (0, pi)")
      ->capture_default_str();
  proj->add_option("--samples", n_samples, "Samples per curve")->capture_default_str();
  proj->add_option("--svg", svg_path, "Write an SVG figure to this path");
  proj->add_option("--csv", csv_path, "Write curve samples as CSV to this path");

  auto* osc = app.add_subcommand("oscillator",
                                 "Orbit family, safety ellipse, Cassini focus locus");
  osc->add_option("--x0", x0, "Initial position abscissa")->capture_default_str();
  osc->add_option("--v0", v0, "Initial speed")->capture_default_str();
  osc->add_option("--omega", omega, "Angular frequency")->capture_default_str();
  osc->add_option("--angles", n_angles, "Number of launch angles in (0, pi)")
      ->capture_default_str();
  osc->add_option("--samples", n_samples, "Samples per curve")->capture_default_str();
  osc->add_option("--svg", svg_path, "Write an SVG figure to this path");
  osc->add_option("--csv", csv_path, "Write curve samples as CSV to this path");

  auto* cas = app.add_subcommand("cassini",
                                 "Cassini oval of the orbit foci, with classification");
  cas->add_option("--x0", x0, "Initial position abscissa")->capture_default_str();
  cas->add_option("--v0", v0, "Initial speed")->capture_default_str();
  cas->add_option("--omega", omega, "Angular frequency")->capture_default_str();
  cas->add_option("--samples", n_samples, "Samples per curve")->capture_default_str();
  cas->add_option("--svg", svg_path, "Write an SVG figure to this path");
  cas->add_option("--csv", csv_path, "Write curve samples as CSV to this path");

  auto* ver = app.add_subcommand("verify", "Run the verification suites");
  ver->add_option("--suite", suite_name,
                  "projectile | oscillator | cassini | oracle | all")
      ->capture_default_str();
  auto* tol_opt = ver->add_option("--tol", tol_value,
                                  "Override every check tolerance with this value");
  ver->add_option("--json", json_path, "Also write the report as JSON to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help/version exit 0, any parse error is usage
  }

  try {
    if (proj->parsed()) {
      const harmocass::projectile::ProjectileParams params(g, v0);
      emit_outputs(harmocass::render::build_projectile_scene(params, n_angles, n_samples),
                   svg_path, csv_path);
      return 0;
    }
    if (osc->parsed()) {
      const harmocass::oscillator::OscillatorParams params(x0, v0, omega);
      emit_outputs(harmocass::render::build_oscillator_scene(params, n_angles, n_samples),
                   svg_path, csv_path);
      return 0;
    }
    if (cas->parsed()) {
      const harmocass::oscillator::OscillatorParams params(x0, v0, omega);
      emit_outputs(harmocass::render::build_cassini_scene(params, n_samples),
                   svg_path, csv_path);
      return 0;
    }
    if (ver->parsed()) {
      const auto suite = harmocass::verify::suite_from_name(suite_name);
      if (!suite) {
        std::cerr << "unknown suite: " << suite_name
                  << " (expected projectile|oscillator|cassini|oracle|all)\n";
        return 2;
      }
      if (tol_opt->count() > 0) tol_override = tol_value;
      const auto report = harmocass::verify::run_suite(*suite, tol_override);
      print_report(report);
      if (!json_path.empty()) {
        std::ofstream f(json_path, std::ios::binary);
        if (!f) throw harmocass::IoError("cannot open for writing: " + json_path);
        f << report_to_json(report).dump(2) << "\n";
      }
      return report.overall() ? 0 : 1;
    }
  } catch (const harmocass::InvalidParams& e) {
    std::cerr << "invalid parameters: " << e.what() << "\n";
    return 2;
  } catch (const harmocass::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
