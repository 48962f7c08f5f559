#pragma once

#include <cstddef>
#include <vector>

#include "harmocass/geom.hpp"

namespace harmocass {

/// Provenance of one sampled point: the family parameter alpha that selected
/// the curve (NaN when the curve is not an alpha-family member), the sample
/// parameter along the curve (t or theta), and a connected-component index
/// for multi-piece curves.
struct SampleMeta {
  double alpha = 0.0;
  double param = 0.0;
  int component = 0;
};

/// Ordered point list with per-point provenance; the interchange unit for
/// CSV and SVG emission. Points of one component are consecutive; closed
/// components repeat their first point at the end.
struct CurveSamples {
  std::vector<geom::Point2> points;
  std::vector<SampleMeta> meta;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  void push(geom::Point2 p, SampleMeta m) {
    points.push_back(p);
    meta.push_back(m);
  }
};

}  // namespace harmocass
