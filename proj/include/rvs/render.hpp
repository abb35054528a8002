#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rvs/charge.hpp"
#include "rvs/flow.hpp"
#include "rvs/svg.hpp"

namespace rvs {

struct Point2 {
  double x;
  double y;
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// Arrow across a wall from the Below side towards the Above side.
struct Arrow {
  std::size_t wall;
  Point2 tail;
  Point2 head;
};

/// Geodesic of the Poincare disc: a diameter, or an arc of a circle
/// orthogonal to the unit circle.
struct Geodesic {
  RootVec root;
  bool diameter;
  Point2 center;  // unused for diameters
  double radius;  // unused for diameters
  Point2 end1;
  Point2 end2;
};

struct RenderStyle {
  double size = 1000.0;
  double stroke = 1.5;
  std::string wall_color = "#333333";
  std::string arrow_color = "#c0392b";
  std::string fill_color = "#dfe8f1";
};

/// SVG plus the model-space geometry that was drawn.
struct Figure {
  SvgDoc svg{1000.0, 1000.0};
  std::vector<std::vector<Point2>> curves;
  std::vector<Point2> dots;
  std::vector<double> cone_slopes;
  std::vector<std::vector<Point2>> polygons;
  std::vector<Segment> walls;
  std::vector<Geodesic> geodesics;
  std::vector<Arrow> arrows;
  std::vector<Point2> alcove_points;
};

/// Level curve of a rank-2 graph in the (theta_0, theta_1) plane, with the
/// cone boundary and the level points on root hyperplanes.
Figure render_rank2(const RootSystem& rs, double extent = 3.0, int root_radius = 4, const RenderStyle& style = {});

/// Plane of an affine rank-3 level: one triangle per alcove, one segment per wall.
Figure render_affine_rank3(const Region& region, const FlowAssignment* flow = nullptr,
                           const RenderStyle& style = {});

/// Poincare disc picture of a hyperbolic rank-3 level.
Figure render_hyperbolic_rank3(const Region& region, const FlowAssignment* flow = nullptr,
                               const RenderStyle& style = {});

/// Level of a rank-3 hyperbolic graph in Minkowski coordinates
/// y0^2 - y1^2 - y2^2 = Q(theta), with the fundamental alcove at y0 > 0.
class DiscProjection {
 public:
  explicit DiscProjection(const RootSystem& rs);

  std::vector<double> minkowski(const ThetaVec& theta) const;
  Point2 to_disc(const ThetaVec& theta) const;
  /// Geodesic cut out by <theta, beta> = 0.
  Geodesic geodesic(const RootVec& beta) const;

 private:
  // Rows: timelike, then the two spacelike directions, pre-scaled.
  std::vector<std::vector<double>> basis_;
};

/// Whether two geodesics meet at a point strictly inside the disc. Circles
/// tangent within `eps` meet on the boundary and do not count.
bool geodesics_intersect(const Geodesic& g, const Geodesic& h, double eps = 1e-6);

/// Points along a geodesic, endpoints included.
std::vector<Point2> sample_geodesic(const Geodesic& g, int count = 33);

}  // namespace rvs
