#pragma once

#include <array>
#include <vector>

#include "harmocass/geom.hpp"
#include "harmocass/samples.hpp"

namespace harmocass::oscillator {

using geom::Point2;

/// alpha = 0 or pi: the orbit collapses to a segment and has no implicit
/// conic form.
struct DegenerateOrbit : Error {
  using Error::Error;
};

/// |sin alpha| below this is treated as a degenerate orbit. Absolute, since
/// alpha is an angle of order 1.
inline constexpr double kDegenerateAngleTol = 1e-12;

/// 2D harmonic oscillator family: initial position (x0, 0), initial speed
/// v0 at angle alpha, angular frequency omega. The orbit geometry depends
/// on v0 and omega only through p = v0/omega.
struct OscillatorParams {
  double x0;
  double v0;
  double omega;

  OscillatorParams(double x0, double v0, double omega);

  double p() const { return v0 / omega; }
};

/// (x0 cos wt + p cos a sin wt, p sin a sin wt).
Point2 orbit_position(const OscillatorParams& o, double alpha, double t);

/// Expanded implicit form of orbit alpha:
///   ((x - y cot a)/x0)^2 + (y/(p sin a))^2 - 1 = 0.
/// Throws DegenerateOrbit when |sin a| < kDegenerateAngleTol.
geom::ConicCoeffs orbit_implicit(const OscillatorParams& o, double alpha);

/// Envelope of the orbit family: center (0,0), semi-axes
/// a = sqrt(x0^2 + p^2), b = p, foci (+-x0, 0).
geom::Ellipse safety_ellipse(const OscillatorParams& o);

enum class ReachTag { Exterior, Boundary, Interior };

/// How a y ~ 0 query point was resolved (the cot-alpha quadratic collapses
/// on the axis):
///  - AllOrbits: pt = (+-x0, 0), crossed by every family member.
///  - SegmentOnly: on the degenerate alpha = 0 segment |x| <= sqrt(x0^2+p^2)
///    and on no non-degenerate orbit.
enum class AxisNote { None, AllOrbits, SegmentOnly };

/// Classification of a point against the orbit family. For off-axis points
/// `angles` holds the launch angles (ascending, in (0, pi)) of the orbits
/// through the point: 0 = Exterior, 1 = Boundary, 2 = Interior. Axis
/// (note != None) results carry no enumerable angle list.
struct Reachability {
  ReachTag tag = ReachTag::Exterior;
  std::vector<double> angles;
  AxisNote note = AxisNote::None;
};

/// Coefficients {c2, c1, c0} of the orbit condition through pt read as a
/// quadratic in cot(alpha):
///   y^2 (p^2 + x0^2) C^2 - 2 x y p^2 C + (x^2 - x0^2) p^2 + x0^2 y^2 = 0.
/// Valid for pt.y != 0.
std::array<double, 3> cot_alpha_quadratic(const OscillatorParams& o, Point2 pt);

/// Solves the cot-alpha quadratic and converts roots to angles; boundary
/// detection uses |discriminant| <= tol * max(c1^2, |4 c2 c0|). Points with
/// |y| < 1e-12 are resolved by the axis case analysis (see AxisNote).
Reachability reach_classification(const OscillatorParams& o, Point2 pt,
                                  double tol = geom::kDefaultTol);

/// One full period of orbit alpha, closed (first point repeated).
CurveSamples sample_orbit(const OscillatorParams& o, double alpha, int n);
CurveSamples sample_safety_ellipse(const OscillatorParams& o, int n);

}  // namespace harmocass::oscillator
