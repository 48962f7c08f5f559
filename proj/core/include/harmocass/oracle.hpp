#pragma once

#include <functional>
#include <vector>

#include "harmocass/geom.hpp"
#include "harmocass/samples.hpp"

namespace harmocass::oracle {

using geom::Point2;

/// Radial binning found an angular bin with no sample in it; raise the
/// sample counts.
struct InsufficientSamples : Error {
  using Error::Error;
};

/// All three quadratic coefficients are zero; every value is a root.
struct IdenticallyZero : Error {
  using Error::Error;
};

/// Maximizes f over [lo, hi] by golden-section search; returns the argmax.
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters);

/// Extrema of |P cos t + Q sin t| over [0, pi), found by a 10^4-point scan
/// plus bracketed golden-section refinement (t resolved to ~1e-10 after 60
/// iterations). Shares no code with the closed-form axis reduction.
struct ExtremaResult {
  double a;
  double b;
  double t_at_max;
};
ExtremaResult numeric_extrema_r(Point2 P, Point2 Q, int refine_iters = 60);

/// A one-parameter family of bounded curves, star-shaped about `center`
/// within the sampled region. Curves are evaluated at (alpha, u) with u in
/// [0, 1] spanning one full sweep of the curve; alpha is sampled strictly
/// inside (alpha_lo, alpha_hi). Radial bins cover [bin_lo, bin_hi];
/// `closed` wraps the estimated boundary.
struct CurveFamily {
  std::function<Point2(double alpha, double u)> eval;
  double alpha_lo = 0.0;
  double alpha_hi = geom::kPi;
  Point2 center{0.0, 0.0};
  double bin_lo = 0.0;
  double bin_hi = 2.0 * geom::kPi;
  bool closed = false;
};

/// Boundary cloud estimated by radial binning, with a polyline Hausdorff
/// distance accessor for comparison against a closed-form curve.
struct EnvelopeEstimate {
  CurveSamples boundary;
  double hausdorff_to(const CurveSamples& reference) const;
};

/// Estimates the envelope of a curve family as the maximal radial extent
/// per angular bin (one bin per t sample): each sampled curve polyline is
/// intersected with the bin rays and the farthest crossing wins, so every
/// boundary point sits on (a chord of) some family member. Requires
/// n_alpha >= 64 and n_t >= 64; throws InsufficientSamples when no curve
/// crosses some bin.
EnvelopeEstimate numeric_envelope(const CurveFamily& family, int n_alpha, int n_t);

/// Real roots of a2 x^2 + a1 x + a0 = 0 with multiplicity, via the
/// cancellation-free q = -(a1 + sign(a1) sqrt(disc))/2 form. Degenerate
/// leading coefficients fall back to the linear/constant cases; throws
/// IdenticallyZero when all three coefficients vanish.
std::vector<double> quadratic_real_roots(double a2, double a1, double a0);

/// Symmetric Hausdorff distance between two sampled curves, measuring each
/// point against the other curve's polyline segments (segments never bridge
/// distinct components).
double polyline_hausdorff(const CurveSamples& a, const CurveSamples& b);

/// Symmetric Hausdorff distance between two bare point sets.
double point_set_hausdorff(const CurveSamples& a, const CurveSamples& b);

}  // namespace harmocass::oracle
