#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "harmocass/cassini.hpp"
#include "harmocass/oscillator.hpp"
#include "harmocass/projectile.hpp"
#include "harmocass/samples.hpp"

namespace harmocass::render {

/// Style tags understood by the SVG writer: "trajectory", "orbit",
/// "envelope", "locus", "aux", "marker". Unknown tags draw with a default
/// stroke.
struct StyledCurve {
  CurveSamples samples;
  std::string style;
  std::string label;
};

struct Viewport {
  double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
};

struct Scene {
  std::vector<StyledCurve> curves;
  Viewport viewport;
  std::string title;
};

/// Bounding box of all curves padded by 5% on each side.
Viewport fit_viewport(const std::vector<StyledCurve>& curves);

/// n_angles trajectories at angles evenly spaced inside (0, pi), the safety
/// parabola, the focus circle, and the per-trajectory focus markers.
Scene build_projectile_scene(const projectile::ProjectileParams& p, int n_angles,
                             int n_samples);

/// n_angles orbits, the safety ellipse, the Cassini oval of the orbit foci,
/// and markers at the shared foci A, B = (-+x0, 0) and the contact points
/// F1, F2 = (+-sqrt(x0^2+p^2), 0).
Scene build_oscillator_scene(const oscillator::OscillatorParams& o, int n_angles,
                             int n_samples);

/// The foci Cassini oval alone with the safety ellipse for context.
Scene build_cassini_scene(const oscillator::OscillatorParams& o, int n_samples);

/// Deterministic SVG 1.1 emission: fixed 9-significant-digit number
/// formatting, no timestamps; byte-identical across runs for equal scenes.
void write_svg(const Scene& scene, std::ostream& out);

/// CSV with mandatory header `curve_id,alpha,t_or_theta,x,y`, one row per
/// sample, 9 significant digits.
void write_csv(const Scene& scene, std::ostream& out);

/// Writes with the matching writer based on the path; throws IoError when
/// the file cannot be opened.
void save_svg(const Scene& scene, const std::string& path);
void save_csv(const Scene& scene, const std::string& path);

}  // namespace harmocass::render
