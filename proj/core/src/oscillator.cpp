#include "harmocass/oscillator.hpp"

#include <algorithm>
#include <cmath>

#include "harmocass/oracle.hpp"

namespace harmocass::oscillator {

OscillatorParams::OscillatorParams(double x0_, double v0_, double omega_)
    : x0(x0_), v0(v0_), omega(omega_) {
  if (!(std::isfinite(x0) && x0 > 0.0) || !(std::isfinite(v0) && v0 > 0.0) ||
      !(std::isfinite(omega) && omega > 0.0))
    throw InvalidParams("oscillator: x0, v0 and omega must be positive and finite");
}

Point2 orbit_position(const OscillatorParams& o, double alpha, double t) {
  const double c = std::cos(o.omega * t), s = std::sin(o.omega * t);
  const double p = o.p();
  return {o.x0 * c + p * std::cos(alpha) * s, p * std::sin(alpha) * s};
}

geom::ConicCoeffs orbit_implicit(const OscillatorParams& o, double alpha) {
  const double sn = std::sin(alpha);
  if (std::abs(sn) < kDegenerateAngleTol)
    throw DegenerateOrbit("orbit at alpha = 0 or pi collapses to a segment");
  const double cot = std::cos(alpha) / sn;
  const double ix0 = 1.0 / (o.x0 * o.x0);
  const double ips = 1.0 / (o.p() * o.p() * sn * sn);
  return {ix0, -2.0 * cot * ix0, cot * cot * ix0 + ips, 0.0, 0.0, -1.0};
}

geom::Ellipse safety_ellipse(const OscillatorParams& o) {
  const double p = o.p();
  return geom::Ellipse({0.0, 0.0}, std::sqrt(o.x0 * o.x0 + p * p), p, 0.0);
}

std::array<double, 3> cot_alpha_quadratic(const OscillatorParams& o, Point2 pt) {
  const double p2 = o.p() * o.p(), x02 = o.x0 * o.x0;
  return {pt.y * pt.y * (p2 + x02), -2.0 * pt.x * pt.y * p2,
          (pt.x * pt.x - x02) * p2 + x02 * pt.y * pt.y};
}

namespace {

// cot: (0, pi) -> R is a decreasing bijection; invert on that branch.
double alpha_from_cot(double c) { return 0.5 * geom::kPi - std::atan(c); }

Reachability classify_on_axis(const OscillatorParams& o, Point2 pt, double tol) {
  Reachability r;
  const double ax = std::abs(pt.x);
  const double big = std::sqrt(o.x0 * o.x0 + o.p() * o.p());
  if (std::abs(ax - o.x0) <= tol * o.x0) {
    // Every orbit passes through (+-x0, 0).
    r.tag = ReachTag::Interior;
    r.note = AxisNote::AllOrbits;
  } else if (ax <= big * (1.0 + tol)) {
    // Only the degenerate alpha = 0 segment covers the rest of the axis.
    r.tag = std::abs(ax - big) <= tol * big ? ReachTag::Boundary : ReachTag::Interior;
    r.note = AxisNote::SegmentOnly;
  } else {
    r.tag = ReachTag::Exterior;
  }
  return r;
}

}  // namespace

Reachability reach_classification(const OscillatorParams& o, Point2 pt, double tol) {
  if (!geom::is_finite(pt)) throw InvalidParams("reach_classification: non-finite point");
  if (std::abs(pt.y) < 1e-12) return classify_on_axis(o, pt, tol);

  const auto [c2, c1, c0] = cot_alpha_quadratic(o, pt);
  const double disc = c1 * c1 - 4.0 * c2 * c0;
  const double scale = std::max(c1 * c1, std::abs(4.0 * c2 * c0));

  Reachability r;
  if (std::abs(disc) <= tol * scale) {
    r.tag = ReachTag::Boundary;
    r.angles = {alpha_from_cot(-c1 / (2.0 * c2))};
  } else if (disc > 0.0) {
    r.tag = ReachTag::Interior;
    for (double root : oracle::quadratic_real_roots(c2, c1, c0))
      r.angles.push_back(alpha_from_cot(root));
    std::sort(r.angles.begin(), r.angles.end());
  } else {
    r.tag = ReachTag::Exterior;
  }
  return r;
}

CurveSamples sample_orbit(const OscillatorParams& o, double alpha, int n) {
  if (n < 2) throw InvalidParams("sample_orbit: need n >= 2");
  const double period = 2.0 * geom::kPi / o.omega;
  CurveSamples out;
  for (int i = 0; i <= n; ++i) {
    const double t = period * static_cast<double>(i % n) / n;
    out.push(orbit_position(o, alpha, t), {alpha, t, 0});
  }
  return out;
}

CurveSamples sample_safety_ellipse(const OscillatorParams& o, int n) {
  if (n < 2) throw InvalidParams("sample_safety_ellipse: need n >= 2");
  const geom::Ellipse env = safety_ellipse(o);
  CurveSamples out;
  const double nan = std::nan("");
  for (int i = 0; i <= n; ++i) {
    const double t = 2.0 * geom::kPi * static_cast<double>(i % n) / n;
    out.push(env.boundary_point(t), {nan, t, 0});
  }
  return out;
}

}  // namespace harmocass::oscillator
