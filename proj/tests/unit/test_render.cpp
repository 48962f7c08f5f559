#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "harmocass/render.hpp"

using namespace harmocass;
using oscillator::OscillatorParams;
using projectile::ProjectileParams;

namespace {

struct CsvRow {
  int curve_id;
  double alpha, param, x, y;
};

std::vector<CsvRow> parse_csv(const std::string& text) {
  std::vector<CsvRow> rows;
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);  // header
  REQUIRE(line == "curve_id,alpha,t_or_theta,x,y");
  while (std::getline(in, line)) {
    CsvRow r{};
    char* end = nullptr;
    r.curve_id = static_cast<int>(std::strtol(line.c_str(), &end, 10));
    r.alpha = std::strtod(end + 1, &end);
    r.param = std::strtod(end + 1, &end);
    r.x = std::strtod(end + 1, &end);
    r.y = std::strtod(end + 1, &end);
    rows.push_back(r);
  }
  return rows;
}

}  // namespace

TEST_SUITE_BEGIN("render");

TEST_CASE("svg output is deterministic and well formed") {
  const OscillatorParams o(1.0, 1.0, 1.0);
  const auto scene = render::build_oscillator_scene(o, 8, 90);

  std::ostringstream s1, s2;
  render::write_svg(scene, s1);
  render::write_svg(render::build_oscillator_scene(o, 8, 90), s2);
  CHECK(s1.str() == s2.str());

  const std::string svg = s1.str();
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") != std::string::npos);
  CHECK(svg.find("<path") != std::string::npos);
  CHECK(svg.find("<circle") != std::string::npos);  // markers A, B, F1, F2
  CHECK(svg.find(">A</text>") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("projectile scene composition") {
  const ProjectileParams p(10.0, 10.0);
  const auto scene = render::build_projectile_scene(p, 16, 120);
  // 16 trajectories + envelope + focus circle + foci markers
  CHECK(scene.curves.size() == 19);

  int trajectories = 0;
  bool has_envelope = false, has_locus = false;
  for (const auto& c : scene.curves) {
    if (c.style == "trajectory") ++trajectories;
    if (c.style == "envelope") has_envelope = true;
    if (c.style == "locus") has_locus = true;
  }
  CHECK(trajectories == 16);
  CHECK(has_envelope);
  CHECK(has_locus);

  // A single trajectory still comes with the envelope.
  const auto one = render::build_projectile_scene(p, 1, 64);
  int single = 0;
  bool env = false;
  for (const auto& c : one.curves) {
    if (c.style == "trajectory") ++single;
    if (c.style == "envelope") env = true;
  }
  CHECK(single == 1);
  CHECK(env);

  CHECK_THROWS_AS(render::build_projectile_scene(p, 0, 64), InvalidParams);
  CHECK_THROWS_AS(ProjectileParams(0.0, 1.0), InvalidParams);
}

TEST_CASE("csv round trip within printed precision") {
  const OscillatorParams o(1.0, 0.5, 1.0);
  const auto scene = render::build_oscillator_scene(o, 4, 48);

  std::ostringstream out;
  render::write_csv(scene, out);
  const auto rows = parse_csv(out.str());

  std::size_t expect = 0;
  for (const auto& c : scene.curves) expect += c.samples.size();
  REQUIRE(rows.size() == expect);

  std::size_t idx = 0;
  for (std::size_t id = 0; id < scene.curves.size(); ++id) {
    const auto& s = scene.curves[id].samples;
    for (std::size_t i = 0; i < s.size(); ++i, ++idx) {
      const auto& r = rows[idx];
      CHECK(r.curve_id == static_cast<int>(id));
      const double sx = std::max(1.0, std::abs(s.points[i].x));
      CHECK(std::abs(r.x - s.points[i].x) <= 1e-8 * sx);
      const double sy = std::max(1.0, std::abs(s.points[i].y));
      CHECK(std::abs(r.y - s.points[i].y) <= 1e-8 * sy);
      if (std::isnan(s.meta[i].alpha)) {
        CHECK(std::isnan(r.alpha));
      } else {
        CHECK(std::abs(r.alpha - s.meta[i].alpha) <= 1e-8 * geom::kPi);
      }
    }
  }
}

TEST_CASE("viewport fitting pads by five percent") {
  CurveSamples s;
  s.push({0.0, 0.0}, {0, 0, 0});
  s.push({10.0, 2.0}, {0, 1, 0});
  std::vector<render::StyledCurve> curves{{s, "aux", ""}};
  const auto vp = render::fit_viewport(curves);
  CHECK(vp.xmin == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(vp.xmax == doctest::Approx(10.5).epsilon(1e-12));
  CHECK(vp.ymin == doctest::Approx(-0.1).epsilon(1e-12));
  CHECK(vp.ymax == doctest::Approx(2.1).epsilon(1e-12));
}

TEST_CASE("cassini scene carries the shape tag in the title") {
  const auto lem = render::build_cassini_scene(OscillatorParams(1.0, 1.0, 1.0), 90);
  CHECK(lem.title.find("lemniscate") != std::string::npos);
  const auto two = render::build_cassini_scene(OscillatorParams(1.0, 0.5, 1.0), 90);
  CHECK(two.title.find("two ovals") != std::string::npos);
  const auto one = render::build_cassini_scene(OscillatorParams(1.0, 2.0, 1.0), 90);
  CHECK(one.title.find("one oval") != std::string::npos);
}

TEST_SUITE_END();
