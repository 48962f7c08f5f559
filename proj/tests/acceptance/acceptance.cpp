// Acceptance suite: runs every numbered criterion at its stated tolerance
// and prints one PASS/FAIL line per criterion. Exit code 0 iff all pass.
//
// Usage: acceptance_tests [--cli PATH]   (PATH to the harmocass binary,
// required by the CLI determinism criterion)

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>
#include <unistd.h>

#include "harmocass/cassini.hpp"
#include "harmocass/geom.hpp"
#include "harmocass/oracle.hpp"
#include "harmocass/oscillator.hpp"
#include "harmocass/projectile.hpp"

using namespace harmocass;
using geom::kPi;
using geom::Point2;
using oscillator::OscillatorParams;
using projectile::LaunchAngle;
using projectile::ProjectileParams;

namespace {

int g_failures = 0;

void report(int index, const char* name, bool pass, double measured, double tol) {
  std::printf("%s  %2d. %-40s measured %.3e  allowed <= %.3e\n",
              pass ? "PASS" : "FAIL", index, name, measured, tol);
  if (!pass) ++g_failures;
}

void report_range(int index, const char* name, bool pass, double measured,
                  double lo, double hi) {
  std::printf("%s  %2d. %-40s measured %.3e  allowed [%.3e, %.3e]\n",
              pass ? "PASS" : "FAIL", index, name, measured, lo, hi);
  if (!pass) ++g_failures;
}

struct Rng {
  std::mt19937_64 gen{987654321};
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
};

// ---------------------------------------------------------------------------
// 1. Focus distance product over the parameter grid (the headline theorem).

void criterion_cassini_theorem() {
  double worst = 0.0;
  for (double x0 : {0.5, 1.0, 2.0})
    for (double v0 : {0.5, 1.0, 2.0}) {
      const OscillatorParams o(x0, v0, 1.0);
      const Point2 A{-x0, 0.0}, B{x0, 0.0};
      for (int k = 1; k <= 48; ++k) {
        const double alpha = -kPi + 2.0 * kPi * k / 48.0;
        const auto [f1, f2] = cassini::orbit_foci(o, alpha);
        for (const Point2& f : {f1, f2}) {
          const double prod = geom::distance(f, A) * geom::distance(f, B);
          worst = std::max(worst, std::abs(prod - v0 * v0) /
                                      std::max(v0 * v0, x0 * x0));
        }
      }
    }
  report(1, "cassini focus distance product", worst <= 1e-9, worst, 1e-9);
}

// ---------------------------------------------------------------------------
// 2. a^2 + b^2 = x0^2 + p^2 on random draws.

void criterion_axis_sum() {
  Rng rng;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const OscillatorParams o(rng.uniform(0.25, 4.0), rng.uniform(0.25, 4.0),
                             rng.uniform(0.25, 4.0));
    const double alpha = rng.uniform(-kPi, kPi);
    const auto ax = cassini::orbit_axes(o, alpha);
    const double expect = o.x0 * o.x0 + o.p() * o.p();
    worst = std::max(worst, std::abs(ax.a2 + ax.b2 - expect) / expect);
  }
  report(2, "axis sum identity", worst <= 1e-12, worst, 1e-12);
}

// ---------------------------------------------------------------------------
// 3. Lemniscate case: closed-form focus and its polar angle alpha/2.

void criterion_lemniscate() {
  const OscillatorParams o(1.0, 1.0, 1.0);
  double worst_focus = 0.0, worst_angle = 0.0;
  for (int k = 1; k <= 100; ++k) {
    const double alpha = 0.5 * kPi * k / 100.0;
    const double c = std::cos(alpha), s = std::sin(alpha);
    const Point2 closed{std::sqrt(c * (1.0 + c)),
                        s * std::sqrt(c) / std::sqrt(1.0 + c)};
    const auto [f1, f2] = cassini::orbit_foci(o, alpha);
    worst_focus = std::max(worst_focus, std::min(geom::distance(f1, closed),
                                                 geom::distance(f2, closed)));
    const Point2 fq = f1.x >= 0.0 ? f1 : f2;  // first-quadrant focus
    worst_angle =
        std::max(worst_angle, std::abs(std::atan2(fq.y, fq.x) - 0.5 * alpha));
  }
  report(3, "lemniscate focus closed form", worst_focus <= 1e-10, worst_focus, 1e-10);
  report(3, "lemniscate focus polar angle", worst_angle <= 1e-9, worst_angle, 1e-9);
}

// ---------------------------------------------------------------------------
// 4. Discriminant of the cot-alpha quadratic: zero on the safety ellipse,
//    positive inside, negative outside.

void criterion_safety_ellipse() {
  Rng rng;
  double worst_on = 0.0;
  double sign_violations = 0.0;
  for (const auto& o :
       {OscillatorParams(1.0, 1.0, 1.0), OscillatorParams(1.0, 0.5, 1.0),
        OscillatorParams(2.0, 3.0, 1.5)}) {
    const auto env = oscillator::safety_ellipse(o);
    const auto disc_at = [&](Point2 pt) {
      const auto [c2, c1, c0] = oscillator::cot_alpha_quadratic(o, pt);
      const double disc = c1 * c1 - 4.0 * c2 * c0;
      const double scale = std::max(c1 * c1, std::abs(4.0 * c2 * c0));
      return std::pair{disc, scale > 0.0 ? scale : 1.0};
    };

    for (int k = 0; k < 360; ++k) {
      const double t = 2.0 * kPi * (k + 0.5) / 360.0;  // never exactly y == 0
      const auto [disc, scale] = disc_at(env.boundary_point(t));
      worst_on = std::max(worst_on, std::abs(disc) / scale);
    }
    for (int k = 0; k < 100; ++k) {
      double t = rng.uniform(0.0, 2.0 * kPi);
      while (std::abs(std::sin(t)) < 0.05) t = rng.uniform(0.0, 2.0 * kPi);
      const Point2 on = env.boundary_point(t);
      const Point2 inside = rng.uniform(0.10, 0.95) * on;
      const Point2 outside = rng.uniform(1.05, 3.0) * on;
      if (!(disc_at(inside).first > 0.0)) sign_violations += 1.0;
      if (!(disc_at(outside).first < 0.0)) sign_violations += 1.0;
    }
  }
  report(4, "safety ellipse: zero discriminant", worst_on <= 1e-9, worst_on, 1e-9);
  report(4, "safety ellipse: interior/exterior sign", sign_violations == 0.0,
         sign_violations, 0.0);
}

// ---------------------------------------------------------------------------
// 5. Safety parabola: tangency point on both curves; numeric envelope close
//    to the closed form on the intercept window.

void criterion_safety_parabola() {
  const ProjectileParams p(10.0, 10.0);
  const auto env = projectile::safety_parabola(p);
  const double scale = p.max_range();

  double worst = 0.0;
  for (int k = 0; k < 200; ++k) {
    const LaunchAngle a(kPi * (k + 0.5) / 200.0);
    const double xs = projectile::tangency_abscissa(p, a);
    const double diff = std::abs(projectile::trajectory_height(p, a, xs) - env.eval(xs));
    worst = std::max(worst, diff / scale);
  }
  report(5, "safety parabola: tangency on both curves", worst <= 1e-9, worst, 1e-9);

  oracle::CurveFamily fam;
  fam.eval = [p](double alpha, double u) {
    const LaunchAngle a(alpha);
    return projectile::trajectory_position(p, a, u * projectile::land_time(p, a));
  };
  fam.bin_hi = kPi;
  const auto est = oracle::numeric_envelope(fam, 2000, 2000);
  const double dist = est.hausdorff_to(projectile::sample_safety_parabola(p, 2000));
  report(5, "safety parabola: numeric envelope", dist <= 1e-3, dist, 1e-3);
}

// ---------------------------------------------------------------------------
// 6. Focus circle radius and agreement with the generic parabola focus.

void criterion_focus_circle() {
  const ProjectileParams p(10.0, 10.0);
  const double radius = p.v0 * p.v0 / (2.0 * p.g);

  double worst_radius = 0.0, worst_match = 0.0;
  for (int k = 0; k < 360; ++k) {
    const double alpha = kPi * (k + 0.5) / 360.0;  // never vertical
    const Point2 f = projectile::trajectory_focus(p, LaunchAngle(alpha));
    worst_radius = std::max(worst_radius, std::abs(geom::norm(f) - radius) / radius);

    const double c = std::cos(alpha);
    const geom::Parabola traj(-p.g / (2.0 * p.v0 * p.v0 * c * c), std::tan(alpha), 0.0);
    worst_match = std::max(worst_match, geom::distance(traj.focus(), f));
  }
  report(6, "focus circle radius", worst_radius <= 1e-12, worst_radius, 1e-12);
  report(6, "focus matches vertex + 1/(4 q2)", worst_match <= 1e-10, worst_match, 1e-10);
}

// ---------------------------------------------------------------------------
// 7. Shape tag agrees with the x-axis crossing count (4 / 3 / 2).

void criterion_classification() {
  Rng rng;
  double mismatches = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const double x0 = rng.uniform(0.3, 2.5);
    double v0;
    const int regime = trial % 3;
    if (regime == 0) v0 = rng.uniform(0.2, 0.95) * x0;
    else if (regime == 1) v0 = x0;
    else v0 = rng.uniform(1.05, 3.0) * x0;

    const auto cv = cassini::foci_cassini(OscillatorParams(x0, v0, 1.0));
    const double l2 = cv.lambda * cv.lambda;
    const auto roots =
        oracle::quadratic_real_roots(1.0, -2.0 * l2, l2 * l2 - cv.mu2 * cv.mu2);
    int count = 0;
    double prev = std::nan("");
    for (double u : roots) {
      if (u == prev) continue;
      prev = u;
      if (u > 1e-12 * l2) count += 2;
      else if (u >= -1e-12 * l2) count += 1;
    }
    const int expect = cv.shape == cassini::CassiniShape::TwoOvals    ? 4
                       : cv.shape == cassini::CassiniShape::Lemniscate ? 3
                                                                       : 2;
    if (count != expect) mismatches += 1.0;
  }
  report(7, "shape tag vs axis crossings", mismatches == 0.0, mismatches, 0.0);
}

// ---------------------------------------------------------------------------
// 8. Vertex semicircle for x0 = p.

void criterion_vertex_semicircle() {
  double worst = 0.0;
  for (double x0 : {1.0, 2.5}) {
    const OscillatorParams o(x0, x0, 1.0);
    const Point2 center{x0 / std::sqrt(2.0), 0.0};
    for (int k = 0; k < 100; ++k) {
      const double alpha = -0.5 * kPi + kPi * k / 99.0;
      const auto v = cassini::vertex_locus(o, alpha);
      worst = std::max(worst, std::abs(geom::distance(v, center) -
                                       x0 / std::sqrt(2.0)) / std::max(1.0, x0));
    }
  }
  report(8, "vertex semicircle", worst <= 1e-10, worst, 1e-10);
}

// ---------------------------------------------------------------------------
// 9. Oracle equivalence: extrema agreement and envelope convergence.

void criterion_oracle() {
  Rng rng;
  double worst_axes = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 P{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Point2 Q{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (geom::norm2(P) + geom::norm2(Q) < 1e-6) continue;
    const auto num = oracle::numeric_extrema_r(P, Q);
    const auto closed = geom::generator_axes(P, Q);
    worst_axes = std::max(worst_axes, std::abs(num.a - std::sqrt(closed.a2)));
    worst_axes = std::max(worst_axes, std::abs(num.b - std::sqrt(closed.b2)));
  }
  report(9, "numeric extrema vs closed-form axes", worst_axes <= 1e-6, worst_axes, 1e-6);

  const ProjectileParams pp(10.0, 10.0);
  oracle::CurveFamily pfam;
  pfam.eval = [pp](double alpha, double u) {
    const LaunchAngle a(alpha);
    return projectile::trajectory_position(pp, a, u * projectile::land_time(pp, a));
  };
  pfam.bin_hi = kPi;
  const auto pref = projectile::sample_safety_parabola(pp, 4096);

  const OscillatorParams oo(1.0, 1.0, 1.0);
  oracle::CurveFamily ofam;
  ofam.eval = [oo](double alpha, double u) {
    return oscillator::orbit_position(oo, alpha, u * 2.0 * kPi);
  };
  ofam.closed = true;
  const auto oref = oscillator::sample_safety_ellipse(oo, 4096);

  // Per-doubling shrink ratio (geometric mean over three doublings):
  // halving within a factor of two.
  for (int fam_id = 0; fam_id < 2; ++fam_id) {
    const auto& fam = fam_id == 0 ? pfam : ofam;
    const auto& ref = fam_id == 0 ? pref : oref;
    std::vector<double> d;
    for (int n : {256, 512, 1024, 2048})
      d.push_back(oracle::numeric_envelope(fam, n, n).hausdorff_to(ref));
    const double geomean = std::cbrt(d.back() / d.front());
    report_range(9,
                 fam_id == 0 ? "parabola envelope halving per doubling"
                             : "ellipse envelope halving per doubling",
                 geomean >= 0.25 && geomean <= 1.0, geomean, 0.25, 1.0);
  }
}

// ---------------------------------------------------------------------------
// 10. CLI determinism and the verify suite.

int run_cmd(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

void criterion_cli(const std::string& cli) {
  if (cli.empty()) {
    report(10, "cli determinism (no --cli given)", false, 1.0, 0.0);
    return;
  }
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() /
                       ("harmocass_accept_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path svg1 = dir / "run1.svg", svg2 = dir / "run2.svg";
  const fs::path log = dir / "verify.log";

  const std::string flags =
      " oscillator --x0 1 --v0 1 --omega 1 --angles 24 --samples 360 --svg ";
  const int r1 = run_cmd("\"" + cli + "\"" + flags + svg1.string());
  const int r2 = run_cmd("\"" + cli + "\"" + flags + svg2.string());
  const bool same = r1 == 0 && r2 == 0 && slurp(svg1) == slurp(svg2) &&
                    !slurp(svg1).empty();
  report(10, "cli svg byte-identical across runs", same, same ? 0.0 : 1.0, 0.0);

  const int rv = run_cmd("\"" + cli + "\" verify --suite all > " + log.string());
  report(10, "cli verify --suite all exits 0", rv == 0, rv, 0.0);

  std::error_code ec;
  fs::remove_all(dir, ec);
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli_path;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli_path = argv[i + 1];

  criterion_cassini_theorem();
  criterion_axis_sum();
  criterion_lemniscate();
  criterion_safety_ellipse();
  criterion_safety_parabola();
  criterion_focus_circle();
  criterion_classification();
  criterion_vertex_semicircle();
  criterion_oracle();
  criterion_cli(cli_path);

  if (g_failures == 0) std::printf("acceptance: all criteria passed\n");
  else std::printf("acceptance: %d criterion check(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
