#include "harmocass/projectile.hpp"

#include <cmath>

namespace harmocass::projectile {

namespace {
constexpr double kHalfPi = 0.5 * geom::kPi;
}

ProjectileParams::ProjectileParams(double g_, double v0_) : g(g_), v0(v0_) {
  if (!(std::isfinite(g) && g > 0.0) || !(std::isfinite(v0) && v0 > 0.0))
    throw InvalidParams("projectile: g and v0 must be positive and finite");
}

LaunchAngle::LaunchAngle(double radians) : alpha(radians) {
  if (!std::isfinite(alpha)) throw InvalidParams("launch angle must be finite");
}

Point2 trajectory_position(const ProjectileParams& p, LaunchAngle a, double t) {
  const double x = p.v0 * std::cos(a.alpha) * t;
  const double y = p.v0 * std::sin(a.alpha) * t - 0.5 * p.g * t * t;
  return {x, y};
}

double trajectory_height(const ProjectileParams& p, LaunchAngle a, double x) {
  const double c = std::cos(a.alpha);
  if (std::abs(c) < 1e-12)
    throw VerticalTrajectory("no Cartesian form for a vertical trajectory");
  return x * std::tan(a.alpha) - p.g * x * x / (2.0 * p.v0 * p.v0 * c * c);
}

double range_on_axis(const ProjectileParams& p, LaunchAngle a) {
  return p.max_range() * std::sin(2.0 * a.alpha);
}

Parabola safety_parabola(const ProjectileParams& p) {
  return Parabola(-p.g / (2.0 * p.v0 * p.v0), 0.0, p.v0 * p.v0 / (2.0 * p.g));
}

double tangency_abscissa(const ProjectileParams& p, LaunchAngle a) {
  if (!(a.alpha > 0.0 && a.alpha < geom::kPi))
    throw OutOfFamily("trajectories with alpha outside (0, pi) never touch the envelope");
  if (a.alpha == kHalfPi) return 0.0;  // vertical shot touches at the vertex
  return p.max_range() / std::tan(a.alpha);
}

Point2 trajectory_focus(const ProjectileParams& p, LaunchAngle a) {
  const double r = p.v0 * p.v0 / (2.0 * p.g);
  return {r * std::sin(2.0 * a.alpha), -r * std::cos(2.0 * a.alpha)};
}

std::array<double, 3> tan_alpha_quadratic(const ProjectileParams& p, Point2 pt) {
  const double h = p.g * pt.x * pt.x / (2.0 * p.v0 * p.v0);
  return {h, -pt.x, pt.y + h};
}

double land_time(const ProjectileParams& p, LaunchAngle a) {
  const double s = std::sin(a.alpha);
  return s > 0.0 ? 2.0 * p.v0 * s / p.g : 0.0;
}

CurveSamples sample_trajectory(const ProjectileParams& p, LaunchAngle a, int n) {
  if (n < 2) throw InvalidParams("sample_trajectory: need n >= 2");
  const double tl = land_time(p, a);
  CurveSamples out;
  for (int i = 0; i < n; ++i) {
    const double t = tl * static_cast<double>(i) / (n - 1);
    out.push(trajectory_position(p, a, t), {a.alpha, t, 0});
  }
  return out;
}

CurveSamples sample_safety_parabola(const ProjectileParams& p, int n) {
  if (n < 2) throw InvalidParams("sample_safety_parabola: need n >= 2");
  const Parabola env = safety_parabola(p);
  const double xmax = p.max_range();
  CurveSamples out;
  const double nan = std::nan("");
  for (int i = 0; i < n; ++i) {
    const double x = -xmax + 2.0 * xmax * static_cast<double>(i) / (n - 1);
    out.push({x, env.eval(x)}, {nan, x, 0});
  }
  return out;
}

CurveSamples sample_focus_circle(const ProjectileParams& p, int n) {
  if (n < 2) throw InvalidParams("sample_focus_circle: need n >= 2");
  CurveSamples out;
  for (int i = 0; i <= n; ++i) {
    // One full turn of foci as alpha runs over [0, pi); closed.
    const double alpha = geom::kPi * static_cast<double>(i % n) / n;
    out.push(trajectory_focus(p, LaunchAngle(alpha)), {alpha, alpha, 0});
  }
  return out;
}

}  // namespace harmocass::projectile
