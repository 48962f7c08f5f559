#include "harmocass/geom.hpp"

#include <algorithm>
#include <cmath>

namespace harmocass::geom {

double normalize_angle_halfturn(double angle) {
  double a = std::fmod(angle, kPi);
  if (a < 0.0) a += kPi;
  if (a >= kPi) a -= kPi;  // fmod can land exactly on pi after the shift
  return a;
}

double ConicCoeffs::scaled_residual(Point2 p) const {
  const double value = eval(p);
  const double scale = std::abs(A * p.x * p.x) + std::abs(B * p.x * p.y) +
                       std::abs(C * p.y * p.y) + std::abs(D * p.x) +
                       std::abs(E * p.y) + std::abs(F);
  return scale > 0.0 ? std::abs(value) / scale : std::abs(value);
}

Ellipse::Ellipse(Point2 center, double a, double b, double angle, bool degenerate)
    : center_(center), a_(a), b_(b), angle_(normalize_angle_halfturn(angle)),
      degenerate_(degenerate) {
  if (!is_finite(center) || !std::isfinite(a) || !std::isfinite(b) ||
      !std::isfinite(angle))
    throw InvalidParams("ellipse: non-finite field");
  if (!(a > 0.0) || b < 0.0 || b > a)
    throw InvalidParams("ellipse: need a >= b >= 0 with a > 0");
  if (b == 0.0) degenerate_ = true;
  if (a_ - b_ <= kCircleTol * a_) angle_ = 0.0;  // circles get the canonical axis
}

double Ellipse::focal_distance() const {
  if (a_ - b_ <= kCircleTol * a_) return 0.0;
  return std::sqrt(std::max(0.0, a_ * a_ - b_ * b_));
}

std::pair<Point2, Point2> Ellipse::foci() const {
  const double c = focal_distance();
  const Point2 offset{c * std::cos(angle_), c * std::sin(angle_)};
  return {center_ + offset, center_ - offset};
}

Point2 Ellipse::boundary_point(double t) const {
  const double ca = std::cos(angle_), sa = std::sin(angle_);
  const double u = a_ * std::cos(t), w = b_ * std::sin(t);
  return {center_.x + u * ca - w * sa, center_.y + u * sa + w * ca};
}

double Ellipse::implicit_residual(Point2 p) const {
  if (degenerate_ || b_ == 0.0)
    throw InvalidParams("implicit_residual: degenerate ellipse");
  const double ca = std::cos(angle_), sa = std::sin(angle_);
  const Point2 d = p - center_;
  const double u = d.x * ca + d.y * sa;   // along the major axis
  const double w = -d.x * sa + d.y * ca;  // along the minor axis
  return (u / a_) * (u / a_) + (w / b_) * (w / b_) - 1.0;
}

Parabola::Parabola(double q2_, double q1_, double q0_) : q2(q2_), q1(q1_), q0(q0_) {
  if (!std::isfinite(q2) || !std::isfinite(q1) || !std::isfinite(q0) || q2 == 0.0)
    throw InvalidParams("parabola: q2 must be finite and nonzero");
}

Point2 Parabola::vertex() const {
  const double xv = -q1 / (2.0 * q2);
  return {xv, q0 - q1 * q1 / (4.0 * q2)};
}

Point2 Parabola::focus() const {
  const Point2 v = vertex();
  return {v.x, v.y + 1.0 / (4.0 * q2)};
}

GeneratorAxes generator_axes(Point2 P, Point2 Q) {
  if (norm2(P) == 0.0 && norm2(Q) == 0.0)
    throw InvalidParams("generator_axes: P and Q both zero");

  const double pp = norm2(P), qq = norm2(Q), pq = dot(P, Q);
  const double mean = 0.5 * (pp + qq);
  const double kc = 0.5 * (pp - qq);  // cos-2t component of r^2
  const double ks = pq;               // sin-2t component
  const double amp = std::hypot(kc, ks);

  double a2 = mean + amp;
  double b2 = std::max(0.0, mean - amp);

  // Two extremal parameters a quarter turn apart; keep the maximizer.
  double t1 = 0.5 * std::atan2(ks, kc);
  if (t1 < 0.0) t1 += kPi;
  double t2 = t1 + 0.5 * kPi;
  if (t2 >= kPi) t2 -= kPi;
  const auto r2_at = [&](double t) {
    const Point2 r = std::cos(t) * P + std::sin(t) * Q;
    return norm2(r);
  };
  // Exact circles hit atan2(0, 0) = 0, so the tie lands on t_max = 0.
  const double t_max = r2_at(t1) >= r2_at(t2) ? t1 : t2;

  return {a2, b2, t_max};
}

Ellipse ellipse_from_parametric(Point2 P, Point2 Q) {
  const GeneratorAxes ax = generator_axes(P, Q);

  const bool segment = ax.b2 <= kSegmentTol * ax.a2;
  const double a = std::sqrt(ax.a2);
  const double b = segment ? 0.0 : std::sqrt(ax.b2);

  const Point2 major = std::cos(ax.t_max) * P + std::sin(ax.t_max) * Q;
  const double angle = std::atan2(major.y, major.x);

  return Ellipse({0.0, 0.0}, a, b, normalize_angle_halfturn(angle), segment);
}

Ellipse ellipse_from_implicit(const ConicCoeffs& k, double tol) {
  const double disc = k.B * k.B - 4.0 * k.A * k.C;
  if (!(disc < 0.0)) throw NotAnEllipse("B^2 - 4AC >= 0");

  // Stationary point of the quadratic; 4AC - B^2 > 0 here.
  const double den = -disc;
  const Point2 center{(k.B * k.E - 2.0 * k.C * k.D) / den,
                      (k.B * k.D - 2.0 * k.A * k.E) / den};
  // Value at the center; the linear terms contribute half their value there.
  const double fc = k.F + 0.5 * (k.D * center.x + k.E * center.y);

  const double fscale = std::abs(k.F) + std::abs(k.D * center.x) +
                        std::abs(k.E * center.y) +
                        std::abs(k.A) * norm2(center);
  if (std::abs(fc) <= tol * tol * fscale)
    throw DegenerateConic("point conic: zero set is a single point");
  if (k.A * fc > 0.0) throw DegenerateConic("imaginary ellipse: empty zero set");

  // Centered, normalized form x^T M x = 1 with M positive definite.
  const double s = -1.0 / fc;
  const double ma = k.A * s, mh = 0.5 * k.B * s, mc = k.C * s;

  // Cholesky M = U^T U maps the curve to the unit circle; the columns of
  // U^-1 generate it parametrically.
  const double u11 = std::sqrt(ma);
  const double u12 = mh / u11;
  const double u22 = std::sqrt(mc - u12 * u12);
  const Point2 P{1.0 / u11, 0.0};
  const Point2 Q{-u12 / (u11 * u22), 1.0 / u22};

  const Ellipse e = ellipse_from_parametric(P, Q);
  return Ellipse(center, e.a(), e.b(), e.angle(), e.degenerate());
}

ConicCoeffs conic_from_ellipse(const Ellipse& e) {
  if (e.degenerate() || e.b() == 0.0)
    throw InvalidParams("conic_from_ellipse: degenerate ellipse");
  const double ca = std::cos(e.angle()), sa = std::sin(e.angle());
  const double ia = 1.0 / (e.a() * e.a()), ib = 1.0 / (e.b() * e.b());

  const double A = ca * ca * ia + sa * sa * ib;
  const double B = 2.0 * ca * sa * (ia - ib);
  const double C = sa * sa * ia + ca * ca * ib;
  const double cx = e.center().x, cy = e.center().y;
  const double D = -(2.0 * A * cx + B * cy);
  const double E = -(B * cx + 2.0 * C * cy);
  const double F = A * cx * cx + B * cx * cy + C * cy * cy - 1.0;
  return {A, B, C, D, E, F};
}

double cassini_residual(Point2 pt, double lambda, double mu2) {
  const double d1 = (pt.x + lambda) * (pt.x + lambda) + pt.y * pt.y;
  const double d2 = (pt.x - lambda) * (pt.x - lambda) + pt.y * pt.y;
  return d1 * d2 - mu2 * mu2;
}

}  // namespace harmocass::geom
