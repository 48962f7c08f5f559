#include "harmocass/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace harmocass::oracle {

namespace {
constexpr double kTau = 2.0 * geom::kPi;
constexpr int kScanPoints = 10000;

double segment_distance(Point2 p, Point2 a, Point2 b) {
  const Point2 ab = b - a;
  const double len2 = geom::norm2(ab);
  if (len2 == 0.0) return geom::distance(p, a);
  const double t = std::clamp(geom::dot(p - a, ab) / len2, 0.0, 1.0);
  return geom::distance(p, a + t * ab);
}

// Greatest distance from any point of `from` to the polyline of `to`.
double directed_polyline(const CurveSamples& from, const CurveSamples& to) {
  double worst = 0.0;
  for (const Point2 p : from.points) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < to.points.size(); ++i) {
      if (to.meta[i].component != to.meta[i + 1].component) continue;
      best = std::min(best, segment_distance(p, to.points[i], to.points[i + 1]));
    }
    if (!std::isfinite(best))  // no usable segment, fall back to points
      for (const Point2 q : to.points) best = std::min(best, geom::distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}

double directed_points(const CurveSamples& from, const CurveSamples& to) {
  double worst = 0.0;
  for (const Point2 p : from.points) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point2 q : to.points) best = std::min(best, geom::distance(p, q));
    worst = std::max(worst, best);
  }
  return worst;
}
}  // namespace

double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  int iters) {
  if (!(hi > lo)) throw InvalidParams("golden_max: empty bracket");
  static const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c), fd = f(d);
  for (int i = 0; i < iters; ++i) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

ExtremaResult numeric_extrema_r(Point2 P, Point2 Q, int refine_iters) {
  if (geom::norm2(P) == 0.0 && geom::norm2(Q) == 0.0)
    throw InvalidParams("numeric_extrema_r: P and Q both zero");
  if (refine_iters < 1) throw InvalidParams("numeric_extrema_r: refine_iters >= 1");

  const auto r2 = [&](double t) {
    const Point2 r = std::cos(t) * P + std::sin(t) * Q;
    return geom::norm2(r);
  };

  // r^2 has period pi; scan, then refine around the grid extrema.
  const double step = geom::kPi / kScanPoints;
  int imax = 0, imin = 0;
  double vmax = -1.0, vmin = std::numeric_limits<double>::infinity();
  for (int i = 0; i < kScanPoints; ++i) {
    const double v = r2(i * step);
    if (v > vmax) { vmax = v; imax = i; }
    if (v < vmin) { vmin = v; imin = i; }
  }

  const double t_max =
      golden_max(r2, (imax - 1) * step, (imax + 1) * step, refine_iters);
  const auto neg_r2 = [&](double t) { return -r2(t); };
  const double t_min =
      golden_max(neg_r2, (imin - 1) * step, (imin + 1) * step, refine_iters);

  double tm = std::fmod(t_max, geom::kPi);
  if (tm < 0.0) tm += geom::kPi;
  return {std::sqrt(r2(t_max)), std::sqrt(r2(t_min)), tm};
}

EnvelopeEstimate numeric_envelope(const CurveFamily& family, int n_alpha, int n_t) {
  if (n_alpha < 64 || n_t < 64)
    throw InvalidParams("numeric_envelope: need n_alpha >= 64 and n_t >= 64");
  if (!(family.bin_hi > family.bin_lo))
    throw InvalidParams("numeric_envelope: empty bin range");

  // Per angular bin (sector), the maximal radial extent of the sampled
  // polylines is attained either at a sample point inside the sector or
  // where a segment crosses a sector boundary ray (the radius is convex
  // along a segment). Both candidate kinds are collected; each sector
  // emits its argmax at the point's true position.
  const double span = family.bin_hi - family.bin_lo;
  const int n_sectors = n_t;

  struct Sector {
    double r2 = -1.0;
    Point2 pt;
    double alpha = 0.0;
  };
  std::vector<Sector> sectors(n_sectors);

  const auto sector_index = [&](double phi) {
    return (phi - family.bin_lo) / span * n_sectors;
  };
  const auto wrap = [&](int j) {
    if (family.closed) return ((j % n_sectors) + n_sectors) % n_sectors;
    return j;
  };
  const auto offer = [&](int j, Point2 pt, double alpha) {
    j = wrap(j);
    if (j < 0 || j >= n_sectors) return;
    const double r2 = geom::norm2(pt);
    if (r2 > sectors[j].r2) sectors[j] = {r2, pt, alpha};
  };

  // Boundary ray of sector j is at its lower edge; a crossing belongs to
  // the sectors on both sides of the ray.
  const auto cross_ray = [&](int j, Point2 a, Point2 b, double alpha) {
    const int jw = wrap(j);
    if (jw < 0 || jw > n_sectors) return;
    const double phi = family.bin_lo + span * jw / n_sectors;
    const Point2 dir{std::cos(phi), std::sin(phi)};
    const double ca = a.x * dir.y - a.y * dir.x;
    const double cb = b.x * dir.y - b.y * dir.x;
    double s = -1.0;
    if (ca == 0.0 && cb == 0.0) {
      s = std::max(geom::dot(a, dir), geom::dot(b, dir));
    } else if (ca == 0.0) {
      s = geom::dot(a, dir);
    } else if (cb == 0.0) {
      s = geom::dot(b, dir);
    } else if ((ca > 0.0) != (cb > 0.0)) {
      const double w = ca / (ca - cb);
      s = geom::dot(a + w * (b - a), dir);
    }
    if (s <= 0.0) return;
    offer(jw, s * dir, alpha);
    offer(jw - 1, s * dir, alpha);
  };

  for (int ia = 0; ia < n_alpha; ++ia) {
    const double alpha = family.alpha_lo +
        (family.alpha_hi - family.alpha_lo) * (ia + 0.5) / n_alpha;
    Point2 prev = family.eval(alpha, 0.0) - family.center;
    double prev_phi = std::atan2(prev.y, prev.x);
    if (geom::norm2(prev) > 0.0)
      offer(static_cast<int>(std::floor(sector_index(prev_phi))), prev, alpha);
    for (int it = 1; it <= n_t; ++it) {
      const Point2 cur =
          family.eval(alpha, static_cast<double>(it) / n_t) - family.center;
      const double cur_phi = std::atan2(cur.y, cur.x);
      if (geom::norm2(cur) > 0.0)
        offer(static_cast<int>(std::floor(sector_index(cur_phi))), cur, alpha);

      // Boundary rays whose angle lies on the short arc between endpoints.
      double pa = prev_phi, pb = cur_phi;
      if (pb - pa > geom::kPi) pa += kTau;
      else if (pa - pb > geom::kPi) pb += kTau;
      const double ix_lo = sector_index(std::min(pa, pb));
      const double ix_hi = sector_index(std::max(pa, pb));
      const int j_lo = static_cast<int>(std::floor(ix_lo)) - 1;
      const int j_hi = static_cast<int>(std::ceil(ix_hi)) + 1;
      for (int j = j_lo; j <= j_hi; ++j) cross_ray(j, prev, cur, alpha);
      prev = cur;
      prev_phi = cur_phi;
    }
  }

  EnvelopeEstimate est;
  for (int j = 0; j < n_sectors; ++j) {
    if (sectors[j].r2 <= 0.0)
      throw InsufficientSamples("numeric_envelope: empty angular bin");
    est.boundary.push(family.center + sectors[j].pt,
                      {sectors[j].alpha, std::atan2(sectors[j].pt.y, sectors[j].pt.x), 0});
  }
  if (family.closed && !est.boundary.empty())
    est.boundary.push(est.boundary.points.front(), est.boundary.meta.front());
  return est;
}

double EnvelopeEstimate::hausdorff_to(const CurveSamples& reference) const {
  return polyline_hausdorff(boundary, reference);
}

std::vector<double> quadratic_real_roots(double a2, double a1, double a0) {
  if (a2 == 0.0 && a1 == 0.0 && a0 == 0.0)
    throw IdenticallyZero("0 = 0: every value is a root");

  if (a2 == 0.0) {
    if (a1 == 0.0) return {};  // nonzero constant
    return {-a0 / a1};
  }
  const double disc = a1 * a1 - 4.0 * a2 * a0;
  if (disc < 0.0) return {};
  const double sq = std::sqrt(disc);
  const double q = -0.5 * (a1 + (a1 >= 0.0 ? sq : -sq));
  if (q == 0.0) return {0.0, 0.0};  // a1 == 0 and a0 == 0: double root at zero
  return {q / a2, a0 / q};
}

double polyline_hausdorff(const CurveSamples& a, const CurveSamples& b) {
  if (a.empty() || b.empty())
    throw InvalidParams("polyline_hausdorff: empty curve");
  return std::max(directed_polyline(a, b), directed_polyline(b, a));
}

double point_set_hausdorff(const CurveSamples& a, const CurveSamples& b) {
  if (a.empty() || b.empty())
    throw InvalidParams("point_set_hausdorff: empty curve");
  return std::max(directed_points(a, b), directed_points(b, a));
}

}  // namespace harmocass::oracle
