#include "harmocass/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>

namespace harmocass::render {

namespace {

// Fixed 9-significant-digit formatting keeps files byte-identical across runs.
std::string num(double v) {
  if (v == 0.0) v = 0.0;  // collapse -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string fmt_label(const char* prefix, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%s%.6g", prefix, v);
  return buf;
}

struct StyleDef {
  const char* stroke;
  double width;
  const char* dash;  // nullptr for solid
};

StyleDef style_for(const std::string& tag) {
  if (tag == "trajectory" || tag == "orbit") return {"#9aa5b1", 1.0, nullptr};
  if (tag == "envelope") return {"#1f6fb2", 2.2, nullptr};
  if (tag == "locus") return {"#c0392b", 1.8, nullptr};
  if (tag == "aux") return {"#b0b0b0", 1.0, "4 3"};
  return {"#444444", 1.2, nullptr};
}

}  // namespace

Viewport fit_viewport(const std::vector<StyledCurve>& curves) {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;
  bool first = true;
  for (const auto& c : curves)
    for (const auto& p : c.samples.points) {
      if (first) {
        xmin = xmax = p.x;
        ymin = ymax = p.y;
        first = false;
      } else {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
      }
    }
  if (first) throw InvalidParams("fit_viewport: no points");
  double dx = xmax - xmin, dy = ymax - ymin;
  if (dx <= 0.0) dx = std::max(1.0, std::abs(xmax));
  if (dy <= 0.0) dy = std::max(1.0, std::abs(ymax));
  return {xmin - 0.05 * dx, xmax + 0.05 * dx, ymin - 0.05 * dy, ymax + 0.05 * dy};
}

Scene build_projectile_scene(const projectile::ProjectileParams& p, int n_angles,
                             int n_samples) {
  if (n_angles < 1) throw InvalidParams("projectile scene: need n_angles >= 1");
  if (n_samples < 8) throw InvalidParams("projectile scene: need n_samples >= 8");

  Scene scene;
  CurveSamples foci;
  for (int k = 1; k <= n_angles; ++k) {
    const double alpha = geom::kPi * k / (n_angles + 1);
    projectile::LaunchAngle a(alpha);
    scene.curves.push_back({projectile::sample_trajectory(p, a, n_samples),
                            "trajectory", fmt_label("trajectory alpha=", alpha)});
    foci.push(projectile::trajectory_focus(p, a), {alpha, alpha, 0});
  }
  scene.curves.push_back({projectile::sample_safety_parabola(p, n_samples),
                          "envelope", "safety parabola"});
  scene.curves.push_back({projectile::sample_focus_circle(p, n_samples), "locus",
                          "focus circle"});
  scene.curves.push_back({std::move(foci), "marker", "trajectory foci"});

  scene.title = fmt_label("projectile family g=", p.g) + fmt_label(" v0=", p.v0);
  scene.viewport = fit_viewport(scene.curves);
  return scene;
}

Scene build_oscillator_scene(const oscillator::OscillatorParams& o, int n_angles,
                             int n_samples) {
  if (n_angles < 1) throw InvalidParams("oscillator scene: need n_angles >= 1");
  if (n_samples < 8) throw InvalidParams("oscillator scene: need n_samples >= 8");

  Scene scene;
  for (int k = 1; k <= n_angles; ++k) {
    const double alpha = geom::kPi * k / (n_angles + 1);
    scene.curves.push_back({oscillator::sample_orbit(o, alpha, n_samples), "orbit",
                            fmt_label("orbit alpha=", alpha)});
  }
  scene.curves.push_back({oscillator::sample_safety_ellipse(o, n_samples),
                          "envelope", "safety ellipse"});

  const cassini::CassiniOval oval = cassini::foci_cassini(o);
  scene.curves.push_back({cassini::cassini_sample_polar(oval, n_samples), "locus",
                          "foci cassini oval"});

  const double big = std::sqrt(o.x0 * o.x0 + o.p() * o.p());
  const auto marker = [](geom::Point2 pt, const char* label) {
    CurveSamples s;
    s.push(pt, {std::nan(""), 0.0, 0});
    return StyledCurve{std::move(s), "marker", label};
  };
  scene.curves.push_back(marker({-o.x0, 0.0}, "A"));
  scene.curves.push_back(marker({o.x0, 0.0}, "B"));
  scene.curves.push_back(marker({big, 0.0}, "F1"));
  scene.curves.push_back(marker({-big, 0.0}, "F2"));

  scene.title = fmt_label("oscillator family x0=", o.x0) +
                fmt_label(" v0=", o.v0) + fmt_label(" omega=", o.omega) + " (" +
                cassini::shape_name(oval.shape) + ")";
  scene.viewport = fit_viewport(scene.curves);
  return scene;
}

Scene build_cassini_scene(const oscillator::OscillatorParams& o, int n_samples) {
  if (n_samples < 8) throw InvalidParams("cassini scene: need n_samples >= 8");

  Scene scene;
  const cassini::CassiniOval oval = cassini::foci_cassini(o);
  scene.curves.push_back({oscillator::sample_safety_ellipse(o, n_samples), "aux",
                          "safety ellipse"});
  scene.curves.push_back({cassini::cassini_sample_polar(oval, n_samples), "locus",
                          "cassini oval"});
  const auto marker = [](geom::Point2 pt, const char* label) {
    CurveSamples s;
    s.push(pt, {std::nan(""), 0.0, 0});
    return StyledCurve{std::move(s), "marker", label};
  };
  scene.curves.push_back(marker({-o.x0, 0.0}, "A"));
  scene.curves.push_back(marker({o.x0, 0.0}, "B"));

  scene.title = fmt_label("cassini oval lambda=", oval.lambda) +
                fmt_label(" mu2=", oval.mu2) + " (" + cassini::shape_name(oval.shape) +
                ")";
  scene.viewport = fit_viewport(scene.curves);
  return scene;
}

void write_svg(const Scene& scene, std::ostream& out) {
  const Viewport& vp = scene.viewport;
  if (!(vp.xmax > vp.xmin) || !(vp.ymax > vp.ymin))
    throw InvalidParams("write_svg: degenerate viewport");

  const double margin = 24.0;
  const double inner_w = 832.0;
  const double sx = inner_w / (vp.xmax - vp.xmin);
  const double inner_h = (vp.ymax - vp.ymin) * sx;
  const double width = inner_w + 2.0 * margin;
  const double height = inner_h + 2.0 * margin;

  const auto X = [&](double x) { return margin + (x - vp.xmin) * sx; };
  const auto Y = [&](double y) { return margin + (vp.ymax - y) * sx; };

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\" viewBox=\"0 0 "
      << num(width) << " " << num(height) << "\">\n";
  out << "<title>" << scene.title << "</title>\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" fill=\"#ffffff\"/>\n";

  // Coordinate axes, where they cross the viewport.
  if (vp.ymin < 0.0 && vp.ymax > 0.0)
    out << "<line x1=\"" << num(X(vp.xmin)) << "\" y1=\"" << num(Y(0)) << "\" x2=\""
        << num(X(vp.xmax)) << "\" y2=\"" << num(Y(0))
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
  if (vp.xmin < 0.0 && vp.xmax > 0.0)
    out << "<line x1=\"" << num(X(0)) << "\" y1=\"" << num(Y(vp.ymin)) << "\" x2=\""
        << num(X(0)) << "\" y2=\"" << num(Y(vp.ymax))
        << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";

  for (const auto& curve : scene.curves) {
    if (curve.samples.empty()) continue;
    if (curve.style == "marker") {
      for (std::size_t i = 0; i < curve.samples.size(); ++i) {
        const auto p = curve.samples.points[i];
        out << "<circle cx=\"" << num(X(p.x)) << "\" cy=\"" << num(Y(p.y))
            << "\" r=\"3\" fill=\"#111111\"/>\n";
      }
      if (!curve.label.empty() && curve.samples.size() == 1) {
        const auto p = curve.samples.points[0];
        out << "<text x=\"" << num(X(p.x) + 6.0) << "\" y=\"" << num(Y(p.y) - 6.0)
            << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#111111\">"
            << curve.label << "</text>\n";
      }
      continue;
    }

    const StyleDef st = style_for(curve.style);
    out << "<path fill=\"none\" stroke=\"" << st.stroke << "\" stroke-width=\""
        << num(st.width) << "\"";
    if (st.dash) out << " stroke-dasharray=\"" << st.dash << "\"";
    out << " d=\"";
    int prev_component = -1;
    bool first_in_path = true;
    for (std::size_t i = 0; i < curve.samples.size(); ++i) {
      const auto p = curve.samples.points[i];
      const int comp = curve.samples.meta[i].component;
      const bool move = first_in_path || comp != prev_component;
      out << (move ? "M" : "L") << num(X(p.x)) << " " << num(Y(p.y));
      prev_component = comp;
      first_in_path = false;
    }
    out << "\"/>\n";
  }

  out << "<text x=\"" << num(margin) << "\" y=\"" << num(16.0)
      << "\" font-family=\"sans-serif\" font-size=\"13\" fill=\"#333333\">"
      << scene.title << "</text>\n";
  out << "</svg>\n";
}

void write_csv(const Scene& scene, std::ostream& out) {
  out << "curve_id,alpha,t_or_theta,x,y\n";
  for (std::size_t id = 0; id < scene.curves.size(); ++id) {
    const auto& s = scene.curves[id].samples;
    for (std::size_t i = 0; i < s.size(); ++i) {
      out << id << "," << num(s.meta[i].alpha) << "," << num(s.meta[i].param) << ","
          << num(s.points[i].x) << "," << num(s.points[i].y) << "\n";
    }
  }
}

namespace {
void save_with(const Scene& scene, const std::string& path,
               void (*writer)(const Scene&, std::ostream&)) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw IoError("cannot open for writing: " + path);
  writer(scene, f);
  f.flush();
  if (!f) throw IoError("write failed: " + path);
}
}  // namespace

void save_svg(const Scene& scene, const std::string& path) {
  save_with(scene, path, &write_svg);
}

void save_csv(const Scene& scene, const std::string& path) {
  save_with(scene, path, &write_csv);
}

}  // namespace harmocass::render
