#pragma once

#include <array>

#include "harmocass/geom.hpp"
#include "harmocass/samples.hpp"

namespace harmocass::projectile {

using geom::Parabola;
using geom::Point2;

/// The Cartesian trajectory form needs cos(alpha) != 0.
struct VerticalTrajectory : Error {
  using Error::Error;
};

/// Launch angle outside (0, pi); such trajectories never touch the envelope.
struct OutOfFamily : Error {
  using Error::Error;
};

/// Gravitational acceleration and launch speed shared by the family. Units
/// are caller-chosen and unchecked.
struct ProjectileParams {
  double g;
  double v0;

  ProjectileParams(double g, double v0);

  /// v0^2/g, the x-intercept of the safety parabola.
  double max_range() const { return v0 * v0 / g; }
};

struct LaunchAngle {
  double alpha;
  explicit LaunchAngle(double radians);
};

/// (v0 cos a t, v0 sin a t - g t^2 / 2).
Point2 trajectory_position(const ProjectileParams& p, LaunchAngle a, double t);

/// y(x) = x tan a - g x^2 / (2 v0^2 cos^2 a). Throws VerticalTrajectory
/// when |cos a| < 1e-12.
double trajectory_height(const ProjectileParams& p, LaunchAngle a, double x);

/// Second x-intercept (v0^2/g) sin 2a.
double range_on_axis(const ProjectileParams& p, LaunchAngle a);

/// Envelope of the family: y = -g x^2/(2 v0^2) + v0^2/(2g), vertex
/// (0, v0^2/2g), focus at the origin.
Parabola safety_parabola(const ProjectileParams& p);

/// Abscissa where trajectory a touches the safety parabola,
/// x = v0^2 / (g tan a); exactly 0 at a = pi/2. Throws OutOfFamily
/// outside (0, pi).
double tangency_abscissa(const ProjectileParams& p, LaunchAngle a);

/// Focus of trajectory a: (v0^2/2g) (sin 2a, -cos 2a). Over all angles the
/// foci fill the circle of radius v0^2/(2g) about the origin.
Point2 trajectory_focus(const ProjectileParams& p, LaunchAngle a);

/// Coefficients {c2, c1, c0} of the trajectory condition through pt read as
/// a quadratic in tan(alpha):
///   (g x^2 / 2 v0^2) T^2 - x T + y + g x^2/(2 v0^2) = 0.
/// Its discriminant vanishes exactly on the safety parabola.
std::array<double, 3> tan_alpha_quadratic(const ProjectileParams& p, Point2 pt);

/// Flight time back to y = 0: 2 v0 sin(a) / g (0 when sin a <= 0).
double land_time(const ProjectileParams& p, LaunchAngle a);

CurveSamples sample_trajectory(const ProjectileParams& p, LaunchAngle a, int n);
CurveSamples sample_safety_parabola(const ProjectileParams& p, int n);
CurveSamples sample_focus_circle(const ProjectileParams& p, int n);

}  // namespace harmocass::projectile
