#include <doctest.h>

#include <cmath>
#include <random>

#include "harmocass/geom.hpp"
#include "harmocass/oracle.hpp"

using namespace harmocass;
using geom::ConicCoeffs;
using geom::Ellipse;
using geom::kPi;
using geom::Point2;

namespace {

// Deterministic uniforms (independent of libstdc++ distribution details).
struct Rng {
  std::mt19937_64 gen{424242};
  double uniform(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(gen() >> 11) * 0x1.0p-53;
  }
};

}  // namespace

TEST_SUITE_BEGIN("geom");

TEST_CASE("unit circle from implicit form") {
  const Ellipse e = geom::ellipse_from_implicit({1, 0, 1, 0, 0, -1});
  CHECK(e.center().x == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(e.a() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.b() == doctest::Approx(1.0).epsilon(1e-12));
  const auto [f1, f2] = e.foci();
  CHECK(geom::distance(f1, f2) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(f1.x == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("axis-aligned standard form x^2/4 + y^2 = 1") {
  const Ellipse e = geom::ellipse_from_implicit({0.25, 0, 1, 0, 0, -1});
  CHECK(e.a() == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(e.b() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.angle() == doctest::Approx(0.0).epsilon(1e-12));
  const auto [f1, f2] = e.foci();
  const double c = std::sqrt(3.0);
  CHECK(f1.x == doctest::Approx(c).epsilon(1e-12));
  CHECK(f2.x == doctest::Approx(-c).epsilon(1e-12));
  CHECK(f1.y == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("tilted conic x^2 - (2/sqrt3) xy + (5/3) y^2 = 1") {
  // Same curve as the orbit generators P=(1,0), Q=(cos60, sin60); the
  // numeric extremizer provides the independent axis values.
  const ConicCoeffs k{1.0, -2.0 / std::sqrt(3.0), 5.0 / 3.0, 0.0, 0.0, -1.0};
  const Ellipse e = geom::ellipse_from_implicit(k);
  CHECK(e.a() * e.a() == doctest::Approx(1.5).epsilon(1e-10));
  CHECK(e.b() * e.b() == doctest::Approx(0.5).epsilon(1e-10));

  const auto num = oracle::numeric_extrema_r({1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0});
  CHECK(e.a() == doctest::Approx(num.a).epsilon(1e-9));
  CHECK(e.b() == doctest::Approx(num.b).epsilon(1e-9));
}

TEST_CASE("parametric generators: orthonormal pair gives the unit circle") {
  const Ellipse e = geom::ellipse_from_parametric({1, 0}, {0, 1});
  CHECK(e.a() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.b() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.angle() == 0.0);
  CHECK_FALSE(e.degenerate());
}

TEST_CASE("parametric generators at 60 degrees") {
  const Point2 P{1.0, 0.0}, Q{0.5, std::sqrt(3.0) / 2.0};
  const Ellipse e = geom::ellipse_from_parametric(P, Q);
  CHECK(e.a() * e.a() == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(e.b() * e.b() == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e.focal_distance() == doctest::Approx(1.0).epsilon(1e-12));

  // Dense scan + refinement as the independent route.
  const auto num = oracle::numeric_extrema_r(P, Q);
  CHECK(num.a == doctest::Approx(std::sqrt(1.5)).epsilon(1e-10));
  CHECK(num.b == doctest::Approx(std::sqrt(0.5)).epsilon(1e-10));
}

TEST_CASE("parallel generators collapse to a flagged segment") {
  const Ellipse e = geom::ellipse_from_parametric({1, 0}, {1, 0});
  CHECK(e.degenerate());
  CHECK(e.b() == 0.0);
  CHECK(e.a() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));

  // max |cos t + sin t| over a dense grid is sqrt(2)
  double best = 0.0;
  for (int i = 0; i < 20000; ++i) {
    const double t = kPi * i / 20000.0;
    best = std::max(best, std::abs(std::cos(t) + std::sin(t)));
  }
  CHECK(e.a() == doctest::Approx(best).epsilon(1e-6));

  // Segment endpoints act as the foci.
  const auto [f1, f2] = e.foci();
  CHECK(geom::distance(f1, {std::sqrt(2.0), 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(geom::distance(f2, {-std::sqrt(2.0), 0.0}) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("implicit form rejects non-ellipses and degenerate conics") {
  CHECK_THROWS_AS(geom::ellipse_from_implicit({1, 0, -1, 0, 0, -1}), geom::NotAnEllipse);
  CHECK_THROWS_AS(geom::ellipse_from_implicit({0, 0, 0, 1, 1, -1}), geom::NotAnEllipse);
  CHECK_THROWS_AS(geom::ellipse_from_implicit({1, 0, 1, 0, 0, 0}), geom::DegenerateConic);
  CHECK_THROWS_AS(geom::ellipse_from_implicit({1, 0, 1, 0, 0, 1}), geom::DegenerateConic);
}

TEST_CASE("cassini residual examples") {
  CHECK(geom::cassini_residual({0, 0}, 1.0, 1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(geom::cassini_residual({std::sqrt(2.0), 0.0}, 1.0, 1.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(geom::cassini_residual({0, 1}, 1.0, 1.0) == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("focal distance sum is 2a on sampled boundaries") {
  Rng rng;
  for (int trial = 0; trial < 40; ++trial) {
    const Point2 P{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Point2 Q{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Ellipse e = geom::ellipse_from_parametric(P, Q);
    if (e.degenerate()) continue;
    const auto [f1, f2] = e.foci();
    for (int i = 0; i < 360; ++i) {
      const Point2 pt = e.boundary_point(2.0 * kPi * i / 360.0);
      const double sum = geom::distance(pt, f1) + geom::distance(pt, f2);
      CHECK(std::abs(sum - 2.0 * e.a()) <= 1e-9 * e.a());
    }
  }
}

TEST_CASE("implicit roundtrip recovers center, axes and angle") {
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    const double a = rng.uniform(0.5, 3.0);
    const double b = rng.uniform(0.1, 1.0) * a;
    const Ellipse e({rng.uniform(-2, 2), rng.uniform(-2, 2)}, a, b,
                    rng.uniform(0.0, kPi));
    const Ellipse r = geom::ellipse_from_implicit(geom::conic_from_ellipse(e));
    CHECK(std::abs(r.a() - e.a()) <= 1e-9 * e.a());
    CHECK(std::abs(r.b() - e.b()) <= 1e-9 * e.a());
    CHECK(geom::distance(r.center(), e.center()) <= 1e-9 * e.a());
    // Angle is only defined modulo pi, and arbitrary for circles.
    if (e.a() - e.b() > 1e-6 * e.a()) {
      const double d = std::abs(r.angle() - e.angle());
      CHECK(std::min(d, kPi - d) <= 1e-9);
    }
  }
}

TEST_CASE("generator phase shift leaves the ellipse invariant") {
  Rng rng;
  for (int trial = 0; trial < 60; ++trial) {
    const Point2 P{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const Point2 Q{rng.uniform(-2, 2), rng.uniform(-2, 2)};
    const double s = rng.uniform(0.0, 2.0 * kPi);
    const Point2 P2 = std::cos(s) * P + std::sin(s) * Q;
    const Point2 Q2 = -std::sin(s) * P + std::cos(s) * Q;
    const Ellipse e1 = geom::ellipse_from_parametric(P, Q);
    const Ellipse e2 = geom::ellipse_from_parametric(P2, Q2);
    CHECK(std::abs(e1.a() - e2.a()) <= 1e-9 * e1.a());
    CHECK(std::abs(e1.b() - e2.b()) <= 1e-9 * e1.a());
    if (!e1.degenerate() && e1.a() - e1.b() > 1e-6 * e1.a()) {
      const double d = std::abs(e1.angle() - e2.angle());
      CHECK(std::min(d, kPi - d) <= 1e-8);
    }
  }
}

TEST_CASE("a^2 + b^2 equals |P|^2 + |Q|^2") {
  Rng rng;
  for (int trial = 0; trial < 200; ++trial) {
    const Point2 P{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const Point2 Q{rng.uniform(-3, 3), rng.uniform(-3, 3)};
    const auto ax = geom::generator_axes(P, Q);
    const double expect = geom::norm2(P) + geom::norm2(Q);
    CHECK(std::abs(ax.a2 + ax.b2 - expect) <= 1e-12 * expect);
  }
}

TEST_CASE("half-turn angle normalization") {
  CHECK(geom::normalize_angle_halfturn(0.0) == 0.0);
  CHECK(geom::normalize_angle_halfturn(kPi) == 0.0);
  CHECK(geom::normalize_angle_halfturn(-kPi / 4) ==
        doctest::Approx(3.0 * kPi / 4).epsilon(1e-12));
  CHECK(geom::normalize_angle_halfturn(7.0) == doctest::Approx(7.0 - 2 * kPi).epsilon(1e-12));
}

TEST_CASE("parabola vertex and focus") {
  const geom::Parabola par(-0.05, 0.0, 5.0);
  CHECK(par.vertex().x == 0.0);
  CHECK(par.vertex().y == doctest::Approx(5.0));
  CHECK(par.focus().x == doctest::Approx(0.0));
  CHECK(par.focus().y == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(geom::Parabola(0.0, 1.0, 1.0), InvalidParams);
}

TEST_SUITE_END();
