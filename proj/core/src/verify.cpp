#include "harmocass/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "harmocass/cassini.hpp"
#include "harmocass/geom.hpp"
#include "harmocass/oracle.hpp"
#include "harmocass/oscillator.hpp"
#include "harmocass/projectile.hpp"

namespace harmocass::verify {

namespace {

using geom::kPi;
using geom::Point2;
using oscillator::OscillatorParams;
using projectile::LaunchAngle;
using projectile::ProjectileParams;

constexpr std::uint64_t kSeed = 123456789;

// Deterministic uniforms independent of the standard library's
// distribution implementations.
struct Rng {
  std::mt19937_64 gen{kSeed};
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(gen() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
};

struct Harness {
  VerifyReport report;
  std::optional<double> override_tol;

  void add(std::string name, double measured, double default_tol) {
    const double tol = override_tol.value_or(default_tol);
    report.checks.push_back({std::move(name), measured <= tol, measured, tol});
  }
};

// ---------------------------------------------------------------------------
// projectile

void suite_projectile(Harness& h) {
  const ProjectileParams p(10.0, 10.0);
  const auto env = projectile::safety_parabola(p);
  const double xmax = p.max_range();
  const double yscale = xmax;

  double worst_tangency = 0.0;
  double worst_above = 0.0;
  double strict_violations = 0.0;
  for (int k = 0; k < 200; ++k) {
    const LaunchAngle a(kPi * (k + 0.5) / 200.0);
    const double xs = projectile::tangency_abscissa(p, a);
    worst_tangency = std::max(
        worst_tangency,
        std::abs(projectile::trajectory_height(p, a, xs) - env.eval(xs)) / yscale);
    for (int i = 0; i < 101; ++i) {
      const double x = -1.2 * xmax + 2.4 * xmax * i / 100.0;
      const double gap = env.eval(x) - projectile::trajectory_height(p, a, x);
      worst_above = std::max(worst_above, -gap / yscale);
      if (std::abs(x - xs) > 0.05 * xmax && gap <= 0.0) strict_violations += 1.0;
    }
  }
  h.add("projectile.tangency_on_envelope", worst_tangency, 1e-9);
  h.add("projectile.trajectory_never_above_envelope", worst_above, 1e-9);
  h.add("projectile.contact_is_isolated", strict_violations, 0.5);

  // Discriminant of the tan-alpha quadratic: zero on the envelope, positive
  // below it, negative above it.
  double sign_violations = 0.0;
  double worst_on_curve = 0.0;
  for (int i = 0; i < 50; ++i) {
    const double x = -1.2 * xmax + 2.4 * xmax * (i + 0.5) / 50.0;
    const double ye = env.eval(x);
    const auto disc_at = [&](double y) {
      const auto [c2, c1, c0] = projectile::tan_alpha_quadratic(p, {x, y});
      const double disc = c1 * c1 - 4.0 * c2 * c0;
      const double scale = std::max(c1 * c1, std::abs(4.0 * c2 * c0));
      return std::pair{disc, scale > 0.0 ? scale : 1.0};
    };
    for (int j = 0; j < 50; ++j) {
      const double dy = (-0.3 + 0.6 * (j + 0.5) / 50.0) * (0.5 * xmax);
      const auto [disc, scale] = disc_at(ye + dy);
      if (dy < 0.0 && !(disc > 0.0)) sign_violations += 1.0;
      if (dy > 0.0 && !(disc < 0.0)) sign_violations += 1.0;
    }
    const auto [disc0, scale0] = disc_at(ye);
    worst_on_curve = std::max(worst_on_curve, std::abs(disc0) / scale0);
  }
  h.add("projectile.discriminant_sign_grid", sign_violations, 0.5);
  h.add("projectile.discriminant_zero_on_envelope", worst_on_curve, 1e-9);

  const double radius = p.v0 * p.v0 / (2.0 * p.g);
  double worst_radius = 0.0;
  double worst_mirror = 0.0;
  for (int k = 0; k < 360; ++k) {
    const double alpha = kPi * (k + 0.5) / 360.0;
    const Point2 f = projectile::trajectory_focus(p, LaunchAngle(alpha));
    worst_radius = std::max(worst_radius, std::abs(geom::norm(f) - radius) / radius);
    const Point2 m = projectile::trajectory_focus(p, LaunchAngle(kPi - alpha));
    worst_mirror = std::max(
        worst_mirror, std::max(std::abs(f.x + m.x), std::abs(f.y - m.y)) / radius);
  }
  h.add("projectile.focus_circle_radius", worst_radius, 1e-12);
  h.add("projectile.focus_mirror_symmetry", worst_mirror, 1e-12);
}

// ---------------------------------------------------------------------------
// oscillator

double envelope_residual(const OscillatorParams& o, Point2 pt) {
  const double p = o.p();
  const double a2 = o.x0 * o.x0 + p * p;
  return pt.x * pt.x / a2 + pt.y * pt.y / (p * p) - 1.0;
}

void suite_oscillator(Harness& h) {
  const std::vector<OscillatorParams> sets{
      {1.0, 1.0, 1.0}, {1.0, 0.5, 1.0}, {2.0, 3.0, 1.5}};

  double worst_inside = 0.0;
  for (const auto& o : sets)
    for (int k = 0; k < 200; ++k) {
      const double alpha = kPi * (k + 0.5) / 200.0;
      for (int i = 0; i < 360; ++i) {
        const double t = 2.0 * kPi / o.omega * i / 360.0;
        worst_inside =
            std::max(worst_inside, envelope_residual(o, orbit_position(o, alpha, t)));
      }
    }
  h.add("oscillator.orbits_inside_envelope", worst_inside, 1e-9);

  // Each orbit meets the envelope at exactly two (antipodal) points: count
  // refined local maxima of the envelope residual along the orbit.
  double touch_mismatches = 0.0;
  for (const auto& o : sets) {
    for (int k = 0; k < 200; ++k) {
      const double alpha = kPi * (k + 0.5) / 200.0;
      const auto res = [&](double s) {
        return envelope_residual(o, orbit_position(o, alpha, s / o.omega));
      };
      const int n = 360;
      std::vector<double> vals(n);
      for (int i = 0; i < n; ++i) vals[i] = res(2.0 * kPi * i / n);
      int touches = 0;
      for (int i = 0; i < n; ++i) {
        const double prev = vals[(i + n - 1) % n], next = vals[(i + 1) % n];
        if (vals[i] > prev && vals[i] >= next) {
          const double s0 = 2.0 * kPi * (i - 1) / n, s1 = 2.0 * kPi * (i + 1) / n;
          const double smax = oracle::golden_max(res, s0, s1, 60);
          if (std::abs(res(smax)) <= 1e-7) ++touches;
        }
      }
      if (touches != 2) touch_mismatches += 1.0;
    }
  }
  h.add("oscillator.envelope_touch_count", touch_mismatches, 0.5);

  Rng rng;
  double worst_residual = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const OscillatorParams o(rng.uniform(0.3, 3.0), rng.uniform(0.3, 3.0),
                             rng.uniform(0.3, 3.0));
    const double alpha = rng.uniform(0.15, kPi - 0.15);
    const auto conic = oscillator::orbit_implicit(o, alpha);
    for (int i = 0; i < 360; ++i) {
      const double t = 2.0 * kPi / o.omega * i / 360.0;
      worst_residual =
          std::max(worst_residual, conic.scaled_residual(orbit_position(o, alpha, t)));
    }
  }
  h.add("oscillator.implicit_residual_on_orbit", worst_residual, 1e-10);

  double worst_angle = 0.0;
  for (const auto& o : sets)
    for (int k = 1; k <= 20; ++k) {
      const double alpha = kPi * k / 21.0;
      for (int i = 0; i < 36; ++i) {
        const double t = 2.0 * kPi / o.omega * (i + 0.5) / 36.0;
        const Point2 pt = orbit_position(o, alpha, t);
        if (std::abs(pt.y) <= 1e-6) continue;
        const auto r = oscillator::reach_classification(o, pt);
        if (r.tag == oscillator::ReachTag::Exterior || r.angles.empty()) {
          worst_angle = std::max(worst_angle, 1.0);
          continue;
        }
        double best = 1e300;
        for (double a : r.angles) best = std::min(best, std::abs(a - alpha));
        worst_angle = std::max(worst_angle, best);
      }
    }
  h.add("oscillator.reach_angle_roundtrip", worst_angle, 1e-8);

  double worst_freq = 0.0;
  for (const auto& o : sets) {
    const OscillatorParams scaled(o.x0, o.p(), 1.0);
    for (double alpha : {0.4, 1.2, 2.6}) {
      const auto s1 = oscillator::sample_orbit(o, alpha, 360);
      const auto s2 = oscillator::sample_orbit(scaled, alpha, 360);
      worst_freq = std::max(worst_freq, oracle::point_set_hausdorff(s1, s2));
    }
  }
  h.add("oscillator.frequency_invariance", worst_freq, 1e-9);
}

// ---------------------------------------------------------------------------
// cassini

void suite_cassini(Harness& h) {
  double worst_product = 0.0;
  for (double x0 : {0.5, 1.0, 2.0})
    for (double v0 : {0.5, 1.0, 2.0}) {
      const OscillatorParams o(x0, v0, 1.0);
      const Point2 A{-x0, 0.0}, B{x0, 0.0};
      for (int k = 1; k <= 48; ++k) {
        const double alpha = -kPi + 2.0 * kPi * k / 48.0;
        const auto [f1, f2] = cassini::orbit_foci(o, alpha);
        for (const Point2& f : {f1, f2}) {
          const double prod = geom::distance(f, A) * geom::distance(f, B);
          worst_product =
              std::max(worst_product, std::abs(prod - v0 * v0) /
                                          std::max(v0 * v0, x0 * x0));
        }
      }
    }
  h.add("cassini.theorem_focus_distance_product", worst_product, 1e-9);

  Rng rng;
  double worst_sum = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const OscillatorParams o(rng.uniform(0.25, 4.0), rng.uniform(0.25, 4.0),
                             rng.uniform(0.25, 4.0));
    const double alpha = rng.uniform(-kPi, kPi);
    const auto ax = cassini::orbit_axes(o, alpha);
    const double expect = o.x0 * o.x0 + o.p() * o.p();
    worst_sum = std::max(worst_sum, std::abs(ax.a2 + ax.b2 - expect) / expect);
  }
  h.add("cassini.axis_sum_identity", worst_sum, 1e-12);

  double worst_forms = 0.0;
  for (int trial = 0; trial < 500; ++trial) {
    const cassini::CassiniOval cv(rng.uniform(0.2, 2.0), rng.uniform(0.05, 4.0));
    const Point2 pt{rng.uniform(-2.5, 2.5), rng.uniform(-2.5, 2.5)};
    worst_forms = std::max(worst_forms,
                           std::abs(cv.residual(pt) - cv.residual_expanded(pt)));
  }
  h.add("cassini.bipolar_vs_expanded_form", worst_forms, 1e-10);

  // x-axis crossings of the quartic restriction: 4 / 3 / 2 for the three
  // shapes, counted from the roots of the quadratic in x^2.
  double shape_mismatches = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    double x0 = rng.uniform(0.3, 2.5), v0;
    const int regime = trial % 3;
    if (regime == 0) v0 = rng.uniform(0.2, 0.95) * x0;
    else if (regime == 1) v0 = x0;
    else v0 = rng.uniform(1.05, 3.0) * x0;
    const cassini::CassiniOval cv = cassini::foci_cassini(OscillatorParams(x0, v0, 1.0));

    const double l2 = cv.lambda * cv.lambda;
    const auto roots =
        oracle::quadratic_real_roots(1.0, -2.0 * l2, l2 * l2 - cv.mu2 * cv.mu2);
    int count = 0;
    double prev = std::nan("");
    for (double u : roots) {
      if (u == prev) continue;  // double root in x^2 -> same crossings
      prev = u;
      if (u > 1e-12 * l2) count += 2;
      else if (u >= -1e-12 * l2) count += 1;
    }
    const int expect = cv.shape == cassini::CassiniShape::TwoOvals  ? 4
                       : cv.shape == cassini::CassiniShape::Lemniscate ? 3
                                                                       : 2;
    if (count != expect) shape_mismatches += 1.0;
  }
  h.add("cassini.shape_vs_axis_crossings", shape_mismatches, 0.5);

  const std::vector<OscillatorParams> sets{
      {1.0, 1.0, 1.0}, {1.0, 0.5, 1.0}, {1.0, 2.0, 1.0}, {2.0, 1.5, 0.75}};

  double worst_foci = 0.0;
  for (const auto& o : sets) {
    const auto [f1, f2] = oscillator::safety_ellipse(o).foci();
    const double a = std::sqrt(o.x0 * o.x0 + o.p() * o.p());
    worst_foci = std::max(worst_foci, geom::distance(f1, {o.x0, 0.0}) / a);
    worst_foci = std::max(worst_foci, geom::distance(f2, {-o.x0, 0.0}) / a);
  }
  h.add("cassini.shared_foci_with_envelope", worst_foci, 1e-12);

  double worst_contact = 0.0;
  double stray_contacts = 0.0;
  for (const auto& o : sets) {
    const auto env = oscillator::safety_ellipse(o);
    const auto cv = cassini::foci_cassini(o);
    const double a = env.a();
    const double cass_scale = std::pow(cv.lambda, 4) + cv.mu2 * cv.mu2;
    for (double sx : {1.0, -1.0}) {
      const Point2 contact{sx * a, 0.0};
      worst_contact = std::max(worst_contact, std::abs(env.implicit_residual(contact)));
      worst_contact =
          std::max(worst_contact, std::abs(cv.residual(contact)) / cass_scale);
    }
    const auto oval = cassini::cassini_sample_polar(cv, 720);
    for (const Point2& pt : oval.points) {
      if (std::abs(env.implicit_residual(pt)) <= 1e-7 &&
          std::min(geom::distance(pt, {a, 0.0}), geom::distance(pt, {-a, 0.0})) >
              0.05 * a)
        stray_contacts += 1.0;
    }
  }
  h.add("cassini.envelope_contact_points", worst_contact, 1e-9);
  h.add("cassini.no_stray_envelope_contacts", stray_contacts, 0.5);

  double worst_polar = 0.0;
  for (double x0 : {1.0, 2.0}) {
    const OscillatorParams o(x0, x0, 1.0);
    for (int k = 1; k <= 100; ++k) {
      const double alpha = 0.5 * kPi * k / 100.0;
      const auto [f1, f2] = cassini::orbit_foci(o, alpha);
      worst_polar =
          std::max(worst_polar, std::abs(std::atan2(f1.y, f1.x) - 0.5 * alpha));
    }
  }
  h.add("cassini.lemniscate_focus_polar_angle", worst_polar, 1e-9);

  double worst_par = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const OscillatorParams o(rng.uniform(0.25, 4.0), rng.uniform(0.25, 4.0),
                             rng.uniform(0.25, 4.0));
    const double alpha = rng.uniform(-kPi, kPi);
    const auto [f1, f2] = cassini::orbit_foci(o, alpha);
    const Point2 A{-o.x0, 0.0}, B{o.x0, 0.0};
    const double ab2 = geom::norm2(B - A);
    const double ff2 = geom::norm2(f2 - f1);
    const double rhs = 2.0 * (geom::norm2(f1 - B) + geom::norm2(f2 - B));
    worst_par = std::max(worst_par, std::abs(ab2 + ff2 - rhs) / (ab2 + ff2));
  }
  h.add("cassini.parallelogram_law", worst_par, 1e-9);
}

// ---------------------------------------------------------------------------
// oracle

oracle::CurveFamily projectile_family(const ProjectileParams& p) {
  oracle::CurveFamily fam;
  fam.eval = [p](double alpha, double u) {
    const LaunchAngle a(alpha);
    return projectile::trajectory_position(p, a, u * projectile::land_time(p, a));
  };
  fam.alpha_lo = 0.0;
  fam.alpha_hi = kPi;
  fam.bin_lo = 0.0;
  fam.bin_hi = kPi;
  fam.closed = false;
  return fam;
}

oracle::CurveFamily oscillator_family(const OscillatorParams& o) {
  oracle::CurveFamily fam;
  fam.eval = [o](double alpha, double u) {
    return orbit_position(o, alpha, u * 2.0 * kPi / o.omega);
  };
  fam.alpha_lo = 0.0;
  fam.alpha_hi = kPi;
  fam.bin_lo = 0.0;
  fam.bin_hi = 2.0 * kPi;
  fam.closed = true;
  return fam;
}

void suite_oracle(Harness& h) {
  Rng rng;
  double worst_axes = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 P{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    const Point2 Q{rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0)};
    if (geom::norm2(P) + geom::norm2(Q) < 1e-6) continue;
    const auto numeric = oracle::numeric_extrema_r(P, Q);
    const auto closed = geom::generator_axes(P, Q);
    worst_axes = std::max(worst_axes, std::abs(numeric.a - std::sqrt(closed.a2)));
    worst_axes = std::max(worst_axes, std::abs(numeric.b - std::sqrt(closed.b2)));
  }
  h.add("oracle.extrema_vs_closed_form", worst_axes, 1e-6);

  const ProjectileParams pp(10.0, 10.0);
  const OscillatorParams oo(1.0, 1.0, 1.0);
  const auto parab_ref = projectile::sample_safety_parabola(pp, 4096);
  const auto ell_ref = oscillator::sample_safety_ellipse(oo, 4096);

  double worst_step = 0.0;
  double worst_net = 0.0;
  for (int fam_id = 0; fam_id < 2; ++fam_id) {
    const auto fam = fam_id == 0 ? projectile_family(pp) : oscillator_family(oo);
    const auto& ref = fam_id == 0 ? parab_ref : ell_ref;
    std::vector<double> dist;
    for (int n : {256, 512, 1024, 2048})
      dist.push_back(oracle::numeric_envelope(fam, n, n).hausdorff_to(ref));
    for (std::size_t i = 0; i + 1 < dist.size(); ++i)
      worst_step = std::max(worst_step, dist[i + 1] / dist[i]);
    worst_net = std::max(worst_net, dist.back() / dist.front());
  }
  h.add("oracle.envelope_shrinks_per_doubling", worst_step, 2.0);
  h.add("oracle.envelope_net_shrink_256_to_2048", worst_net, 1.0);

  double worst_root = 0.0;
  std::vector<std::array<double, 3>> polys{{1, -2, 1}, {2, -2, 1}, {1, 2, -15},
                                           {0, 3, -6}, {4, 0, -9}, {1, 0, 0}};
  for (int trial = 0; trial < 200; ++trial)
    polys.push_back({rng.uniform(-5.0, 5.0), rng.uniform(-5.0, 5.0),
                     rng.uniform(-5.0, 5.0)});
  for (const auto& [a2, a1, a0] : polys) {
    if (a2 == 0.0 && a1 == 0.0 && a0 == 0.0) continue;
    const double scale = std::max({std::abs(a2), std::abs(a1), std::abs(a0)});
    for (double r : oracle::quadratic_real_roots(a2, a1, a0))
      worst_root = std::max(worst_root, std::abs((a2 * r + a1) * r + a0) / scale);
  }
  h.add("oracle.quadratic_root_residual", worst_root, 1e-10);
}

}  // namespace

std::optional<Suite> suite_from_name(std::string_view name) {
  if (name == "projectile") return Suite::Projectile;
  if (name == "oscillator") return Suite::Oscillator;
  if (name == "cassini") return Suite::Cassini;
  if (name == "oracle") return Suite::Oracle;
  if (name == "all") return Suite::All;
  return std::nullopt;
}

VerifyReport run_suite(Suite suite, std::optional<double> tol_override) {
  Harness h;
  h.override_tol = tol_override;
  if (suite == Suite::Projectile || suite == Suite::All) suite_projectile(h);
  if (suite == Suite::Oscillator || suite == Suite::All) suite_oscillator(h);
  if (suite == Suite::Cassini || suite == Suite::All) suite_cassini(h);
  if (suite == Suite::Oracle || suite == Suite::All) suite_oracle(h);
  return h.report;
}

}  // namespace harmocass::verify
