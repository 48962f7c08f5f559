#pragma once

#include <cmath>
#include <utility>

#include "harmocass/errors.hpp"

namespace harmocass::geom {

inline constexpr double kPi = 3.14159265358979323846;

/// Default relative tolerance of geometric comparisons. Tolerances scale
/// with the dominant magnitude of the computation they guard.
inline constexpr double kDefaultTol = 1e-9;

/// Relative axis spread below which an ellipse is treated as a circle
/// (canonical angle 0, coincident foci).
inline constexpr double kCircleTol = 1e-12;

/// b^2/a^2 below this marks a collapsed ellipse (a segment). Sits above
/// double-precision cancellation noise (~1e-15) and below any eccentricity
/// that occurs for non-parallel generators in practice.
inline constexpr double kSegmentTol = 1e-13;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }
  friend Point2 operator-(Point2 a) { return {-a.x, -a.y}; }
};

inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm2(Point2 a) { return dot(a, a); }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }
inline double distance(Point2 a, Point2 b) { return norm(a - b); }
inline bool is_finite(Point2 a) { return std::isfinite(a.x) && std::isfinite(a.y); }

/// Coefficients of A x^2 + B xy + C y^2 + D x + E y + F = 0.
struct ConicCoeffs {
  double A = 0, B = 0, C = 0, D = 0, E = 0, F = 0;

  double eval(Point2 p) const {
    return A * p.x * p.x + B * p.x * p.y + C * p.y * p.y + D * p.x + E * p.y + F;
  }
  /// |eval| divided by the sum of term magnitudes; a scale-free residual.
  double scaled_residual(Point2 p) const;
};

/// The conic's quadratic part is not negative definite, so it has no
/// bounded real point set.
struct NotAnEllipse : Error {
  using Error::Error;
};

/// The conic's point set is empty or a single point.
struct DegenerateConic : Error {
  using Error::Error;
};

/// Folds an angle into [0, pi); a half-turn identifies a line direction.
double normalize_angle_halfturn(double angle);

/// An ellipse as center, semi-axes a >= b >= 0 and major-axis direction in
/// [0, pi). Circles (a == b within kCircleTol relative) get angle 0 and
/// coincident foci. `degenerate` marks the collapsed case b == 0, a segment
/// whose endpoints play the role of the foci.
class Ellipse {
 public:
  Ellipse(Point2 center, double a, double b, double angle, bool degenerate = false);

  Point2 center() const { return center_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double angle() const { return angle_; }
  bool degenerate() const { return degenerate_; }

  /// Center-to-focus distance sqrt(a^2 - b^2); 0 for circles.
  double focal_distance() const;
  std::pair<Point2, Point2> foci() const;

  /// Point at eccentric parameter t: center + a cos(t) u + b sin(t) w, with
  /// u along the major axis and w perpendicular.
  Point2 boundary_point(double t) const;

  /// Value of the normalized implicit form at p (0 on the boundary,
  /// negative inside). Requires b > 0.
  double implicit_residual(Point2 p) const;

 private:
  Point2 center_;
  double a_;
  double b_;
  double angle_;
  bool degenerate_;
};

/// y = q2 x^2 + q1 x + q0 with q2 != 0.
struct Parabola {
  double q2;
  double q1;
  double q0;

  Parabola(double q2, double q1, double q0);

  double eval(double x) const { return (q2 * x + q1) * x + q0; }
  Point2 vertex() const;
  /// Focus of the parabola: vertex offset by 1/(4 q2) along y.
  Point2 focus() const;
};

/// Squared semi-axes of the origin-centered ellipse traced by
/// r(t) = P cos t + Q sin t, and the parameter of a major vertex in [0, pi).
///
/// r(t)^2 = (|P|^2+|Q|^2)/2 + (|P|^2-|Q|^2)/2 cos 2t + (P.Q) sin 2t, so the
/// extrema are mean +- amplitude and t_max solves the phase condition
/// tan 2t = 2 (P.Q) / (|P|^2 - |Q|^2) on the maximizing branch (ties go
/// to t_max = 0, the circle case).
struct GeneratorAxes {
  double a2;
  double b2;
  double t_max;
};
GeneratorAxes generator_axes(Point2 P, Point2 Q);

/// Ellipse traced by r(t) = P cos t + Q sin t (origin-centered). Parallel
/// P, Q yield a degenerate (segment) result rather than an error.
Ellipse ellipse_from_parametric(Point2 P, Point2 Q);

/// Geometry of the real, non-degenerate ellipse described by implicit
/// coefficients. Converts to a parametric generator pair first (via a 2x2
/// Cholesky factor of the centered quadratic form), then reduces as in
/// ellipse_from_parametric.
///
/// Throws NotAnEllipse when B^2 - 4AC >= 0 and DegenerateConic when the
/// point set is empty or a single point.
Ellipse ellipse_from_implicit(const ConicCoeffs& k, double tol = kDefaultTol);

/// Implicit coefficients of a non-degenerate ellipse, normalized so the
/// constant term at the center equals -1.
ConicCoeffs conic_from_ellipse(const Ellipse& e);

/// [(x+lambda)^2 + y^2] [(x-lambda)^2 + y^2] - mu2^2; zero exactly when pt
/// lies on the Cassini oval with foci (+-lambda, 0) and distance product mu2.
double cassini_residual(Point2 pt, double lambda, double mu2);

}  // namespace harmocass::geom
