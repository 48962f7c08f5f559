#pragma once

#include <utility>
#include <vector>

#include "harmocass/geom.hpp"
#include "harmocass/oscillator.hpp"
#include "harmocass/samples.hpp"

namespace harmocass::cassini {

using geom::Point2;
using oscillator::OscillatorParams;

struct DomainError : Error {
  using Error::Error;
};

/// No closed form is available for the requested parameter regime.
struct UnsupportedCase : Error {
  using Error::Error;
};

/// Relative tolerance of the lemniscate (mu2 == lambda^2) classification.
/// The tag is a discrete convenience; near the boundary use the residual.
inline constexpr double kShapeTol = 1e-12;

enum class CassiniShape { TwoOvals, Lemniscate, OneOval };

const char* shape_name(CassiniShape s);

/// Locus of points whose distances to (-lambda, 0) and (lambda, 0) have
/// product mu2. Two separate ovals when mu2 < lambda^2, Bernoulli's
/// lemniscate at mu2 == lambda^2, one closed oval when mu2 > lambda^2.
struct CassiniOval {
  double lambda;
  double mu2;
  CassiniShape shape;

  CassiniOval(double lambda, double mu2);

  /// Product form: [(x+l)^2+y^2][(x-l)^2+y^2] - mu2^2.
  double residual(Point2 pt) const;
  /// Expanded form: (x^2+y^2)^2 - 2 l^2 (x^2-y^2) - (mu2^2 - l^4).
  double residual_expanded(Point2 pt) const;

  /// Real polar radii r >= 0 at angle theta, largest first. Solves
  /// r^4 - 2 l^2 r^2 cos 2θ = mu2^2 - l^4 as a quadratic in r^2; angles
  /// outside the admissible band return no radii.
  std::vector<double> radii_at(double theta) const;
};

/// Squared semi-axes of orbit alpha and the maximizing sample parameter
/// t_star in [0, pi) (in the rescaled time s = omega t):
///   a2, b2 = (x0^2+p^2)/2 +- sqrt((x0^2-p^2)^2/4 + x0^2 p^2 cos^2 a).
/// Always a2 + b2 = x0^2 + p^2.
struct OrbitAxes {
  double a2;
  double b2;
  double t_star;
};
OrbitAxes orbit_axes(const OscillatorParams& o, double alpha);

/// Foci of orbit alpha: +-(c/a) V where V is the major vertex
/// orbit_position(o, alpha, t_star/omega) and c = sqrt(a2 - b2). Circular
/// orbits return both foci at the origin; degenerate (alpha = 0) orbits
/// return the segment endpoints +-(sqrt(x0^2+p^2), 0). For x0 = p and
/// cos a >= 0 the first element is the first-quadrant focus
///   (x0 sqrt(cos a (1+cos a)), x0 sin a sqrt(cos a)/sqrt(1+cos a)).
std::pair<Point2, Point2> orbit_foci(const OscillatorParams& o, double alpha);

/// The Cassini oval traced by the orbit foci as alpha varies:
/// lambda = x0, mu2 = p^2 (the distance product; equals v0^2 when omega=1).
CassiniOval foci_cassini(const OscillatorParams& o);

/// Samples the oval from its polar form, ordered into connected components
/// matching the shape (two for TwoOvals, one otherwise; the lemniscate is
/// emitted as a single figure-eight path through the origin). n is the
/// number of grid angles spent per component sweep; n >= 8.
CurveSamples cassini_sample_polar(const CassiniOval& cv, int n);

/// Polar angle theta = alpha/2 of the first-quadrant focus in the
/// lemniscate case (x0 = p). Throws DomainError outside [-pi/2, pi/2].
double lemniscate_alpha_theta(double alpha);

/// First-quadrant major vertex for the x0 = p case:
///   (x0 (1 + cos a)/sqrt(2), x0 sin a / sqrt(2)).
/// For alpha in [-pi/2, pi/2] it lies on the circle of radius x0/sqrt(2)
/// centered at (x0/sqrt(2), 0). Throws UnsupportedCase when x0 != p.
Point2 vertex_locus(const OscillatorParams& o, double alpha);

}  // namespace harmocass::cassini
