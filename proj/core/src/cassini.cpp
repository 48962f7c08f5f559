#include "harmocass/cassini.hpp"

#include <algorithm>
#include <cmath>

namespace harmocass::cassini {

namespace {
constexpr double kHalfPi = 0.5 * geom::kPi;
constexpr double kQuarterPi = 0.25 * geom::kPi;

CassiniShape classify(double lambda, double mu2) {
  const double l2 = lambda * lambda;
  if (std::abs(mu2 - l2) <= kShapeTol * std::max(mu2, l2)) return CassiniShape::Lemniscate;
  return mu2 < l2 ? CassiniShape::TwoOvals : CassiniShape::OneOval;
}
}  // namespace

const char* shape_name(CassiniShape s) {
  switch (s) {
    case CassiniShape::TwoOvals: return "two ovals";
    case CassiniShape::Lemniscate: return "lemniscate";
    case CassiniShape::OneOval: return "one oval";
  }
  return "?";
}

CassiniOval::CassiniOval(double lambda_, double mu2_)
    : lambda(lambda_), mu2(mu2_), shape(classify(lambda_, mu2_)) {
  if (!(std::isfinite(lambda) && lambda >= 0.0) || !(std::isfinite(mu2) && mu2 >= 0.0))
    throw InvalidParams("cassini oval: lambda and mu2 must be nonnegative and finite");
}

double CassiniOval::residual(Point2 pt) const {
  return geom::cassini_residual(pt, lambda, mu2);
}

double CassiniOval::residual_expanded(Point2 pt) const {
  const double r2 = pt.x * pt.x + pt.y * pt.y;
  const double l2 = lambda * lambda;
  return r2 * r2 - 2.0 * l2 * (pt.x * pt.x - pt.y * pt.y) - (mu2 * mu2 - l2 * l2);
}

std::vector<double> CassiniOval::radii_at(double theta) const {
  // r^2 solves u^2 - 2 l^2 cos(2θ) u - (mu2^2 - l^4) = 0.
  const double l2 = lambda * lambda;
  const double half_b = l2 * std::cos(2.0 * theta);
  double rad = half_b * half_b + (mu2 * mu2 - l2 * l2);
  std::vector<double> out;
  const double rad_scale = half_b * half_b + std::abs(mu2 * mu2 - l2 * l2);
  if (rad < 0.0 && rad >= -1e-12 * rad_scale) rad = 0.0;  // band edge
  if (rad < 0.0) return out;
  const double root = std::sqrt(rad);
  for (double u : {half_b + root, half_b - root}) {
    if (u >= 0.0) out.push_back(std::sqrt(u));
  }
  if (out.size() == 2 && out[0] == out[1]) out.pop_back();
  return out;
}

namespace {

// Amplitude-phase reduction of r(s)^2 along the orbit, computed straight
// from the parameters so that x0^2 - p^2 cancels exactly when x0 == p:
//   r^2(s) = mean + kc cos 2s + ks sin 2s.
struct OrbitReduction {
  double mean;
  double amp;  // sqrt(kc^2 + ks^2); c^2 = 2 amp
  double t_star;
};

OrbitReduction reduce_orbit(const OscillatorParams& o, double alpha) {
  const double p = o.p();
  const double mean = 0.5 * (o.x0 * o.x0 + p * p);
  const double kc = 0.5 * (o.x0 * o.x0 - p * p);
  const double ks = o.x0 * p * std::cos(alpha);
  const double amp = std::hypot(kc, ks);

  double t1 = 0.5 * std::atan2(ks, kc);  // exact circles land on 0
  if (t1 < 0.0) t1 += geom::kPi;
  double t2 = t1 + kHalfPi;
  if (t2 >= geom::kPi) t2 -= geom::kPi;
  const auto r2_at = [&](double t) {
    return mean + kc * std::cos(2.0 * t) + ks * std::sin(2.0 * t);
  };
  return {mean, amp, r2_at(t1) >= r2_at(t2) ? t1 : t2};
}

}  // namespace

OrbitAxes orbit_axes(const OscillatorParams& o, double alpha) {
  const OrbitReduction red = reduce_orbit(o, alpha);
  return {red.mean + red.amp, std::max(0.0, red.mean - red.amp), red.t_star};
}

std::pair<Point2, Point2> orbit_foci(const OscillatorParams& o, double alpha) {
  const OrbitReduction red = reduce_orbit(o, alpha);
  if (red.amp == 0.0) return {Point2{0.0, 0.0}, Point2{0.0, 0.0}};  // circle

  const Point2 vertex = orbit_position(o, alpha, red.t_star / o.omega);
  // c^2 = a^2 - b^2 = 2 amp, taken directly to avoid the cancellation.
  const double scale = std::sqrt(2.0 * red.amp / (red.mean + red.amp));  // c/a
  const Point2 f = scale * vertex;
  return {f, -f};
}

CassiniOval foci_cassini(const OscillatorParams& o) {
  // The orbit point set depends on v0 and omega only through p = v0/omega,
  // so the foci trace the oval with distance product p^2 (= v0^2 at omega 1).
  return CassiniOval(o.x0, o.p() * o.p());
}

namespace {

void sweep_branch(const CassiniOval& cv, CurveSamples& out, double th_lo,
                  double th_hi, int n, bool outer, int component) {
  for (int i = 0; i <= n; ++i) {
    const double th = th_lo + (th_hi - th_lo) * static_cast<double>(i) / n;
    const auto radii = cv.radii_at(th);
    if (radii.empty()) continue;
    const double r = outer ? radii.front() : radii.back();
    out.push({r * std::cos(th), r * std::sin(th)},
             {std::nan(""), th, component});
  }
}

}  // namespace

CurveSamples cassini_sample_polar(const CassiniOval& cv, int n) {
  if (n < 8) throw InvalidParams("cassini_sample_polar: need n >= 8");
  CurveSamples out;
  const double l2 = cv.lambda * cv.lambda;

  switch (cv.shape) {
    case CassiniShape::OneOval:
      sweep_branch(cv, out, 0.0, 2.0 * geom::kPi, n, /*outer=*/true, 0);
      break;

    case CassiniShape::Lemniscate: {
      // Figure-eight through the origin: right lobe, then left lobe.
      const int half = std::max(4, n / 2);
      sweep_branch(cv, out, -kQuarterPi, kQuarterPi, half, true, 0);
      sweep_branch(cv, out, 3.0 * kQuarterPi, 5.0 * kQuarterPi, half, true, 0);
      break;
    }

    case CassiniShape::TwoOvals: {
      // Admissible band: |cos 2θ| >= sqrt(l^4 - mu2^2)/l^2, around θ = 0 and π.
      const double cos_band = std::sqrt(l2 * l2 - cv.mu2 * cv.mu2) / l2;
      const double thm = 0.5 * std::acos(std::min(1.0, cos_band));
      const int quarter = std::max(4, n / 4);
      // Each oval: outer branch forward, inner branch back; closed loop.
      sweep_branch(cv, out, -thm, thm, quarter, true, 0);
      sweep_branch(cv, out, thm, -thm, quarter, false, 0);
      sweep_branch(cv, out, geom::kPi - thm, geom::kPi + thm, quarter, true, 1);
      sweep_branch(cv, out, geom::kPi + thm, geom::kPi - thm, quarter, false, 1);
      break;
    }
  }
  return out;
}

double lemniscate_alpha_theta(double alpha) {
  if (!(alpha >= -kHalfPi && alpha <= kHalfPi))
    throw DomainError("lemniscate focus angle map needs alpha in [-pi/2, pi/2]");
  return 0.5 * alpha;
}

Point2 vertex_locus(const OscillatorParams& o, double alpha) {
  const double p = o.p();
  if (std::abs(p - o.x0) > kShapeTol * std::max(p, o.x0))
    throw UnsupportedCase("vertex_locus has a closed form only for x0 = p");
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  return {o.x0 * (1.0 + std::cos(alpha)) * inv_sqrt2,
          o.x0 * std::sin(alpha) * inv_sqrt2};
}

}  // namespace harmocass::cassini
