#include <doctest.h>

#include <cmath>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "rvs/render.hpp"
#include "support.hpp"

using namespace rvs;
using testing::error_of;

namespace {

std::shared_ptr<const Region> region_of(const std::string& name, int radius) {
  return enumerate_region(RootSystem(catalog(name)), radius);
}

boost::property_tree::ptree parse_xml(const std::string& text) {
  std::istringstream in(text);
  boost::property_tree::ptree tree;
  boost::property_tree::read_xml(in, tree);
  return tree;
}

std::size_t count_children(const boost::property_tree::ptree& svg, const std::string& tag,
                           const std::string& cls) {
  std::size_t n = 0;
  for (const auto& [name, child] : svg)
    if (name == tag && child.get<std::string>("<xmlattr>.class", "") == cls) ++n;
  return n;
}

double dist(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Signed offset of p from the geodesic: zero on it, sign tells the side.
double side(const Geodesic& g, Point2 p) {
  if (g.diameter) return g.end1.x * p.y - g.end1.y * p.x;
  return dist(p, g.center) - g.radius;
}

/// Which side of the line through a, b the point p lies on.
double line_side(Point2 a, Point2 b, Point2 p) { return (b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x); }

}  // namespace

TEST_CASE("rank two level curves") {
  const Figure k1 = render_rank2(RootSystem(catalog("K:1")));
  CHECK(k1.dots.size() == 6);
  CHECK(k1.cone_slopes.empty());
  CHECK(k1.curves.size() == 1);

  const Figure k2 = render_rank2(RootSystem(catalog("K:2")));
  REQUIRE(k2.cone_slopes.size() == 1);
  CHECK(k2.cone_slopes[0] == doctest::Approx(-1.0));
  CHECK(k2.curves.size() == 2);
  for (const auto& c : k2.curves)
    for (const auto& p : c) CHECK(std::abs(std::abs(p.x + p.y) - 1 / std::sqrt(2.0)) < 1e-9);

  const RootSystem k3(catalog("K:3"));
  const Figure f3 = render_rank2(k3);
  REQUIRE(f3.cone_slopes.size() == 2);
  const double kappa = kronecker_constant(3);
  std::vector<double> mags{std::abs(f3.cone_slopes[0]), std::abs(f3.cone_slopes[1])};
  std::sort(mags.begin(), mags.end());
  CHECK(mags[0] == doctest::Approx(1 / kappa));
  CHECK(mags[1] == doctest::Approx(kappa));
  for (const auto& c : f3.curves)
    for (const auto& p : c) CHECK(std::abs(k3.tits_cone_quadratic(ThetaVec{{p.x, p.y}}) - 1) < 1e-9);
  CHECK(f3.dots.size() > 6);

  CHECK(error_of([] { render_rank2(RootSystem(catalog("A_tilde:2"))); }) == Errc::WrongType);
}

TEST_CASE("affine rendering") {
  const auto r = region_of("A_tilde:2", 4);
  const Figure plain = render_affine_rank3(*r);
  CHECK(plain.polygons.size() == r->size());
  CHECK(plain.svg.count("polygon", "alcove") == r->size());
  CHECK(plain.walls.size() == r->walls().size());
  CHECK(plain.arrows.empty());
  CHECK(plain.svg.count("polygon", "arrow") == 0);

  // Shared walls are edges of both neighbouring triangles.
  for (std::size_t w = 0; w < r->walls().size(); ++w) {
    const Wall& wall = r->walls()[w];
    if (!wall.interior()) continue;
    for (const Point2 end : {plain.walls[w].a, plain.walls[w].b}) {
      for (std::size_t side : {wall.base, *wall.neighbor}) {
        const auto& poly = plain.polygons[side];
        const double best = std::min({dist(end, poly[0]), dist(end, poly[1]), dist(end, poly[2])});
        CHECK(best < 1e-9);
      }
    }
  }

  const FlowAssignment flow = bruhat_flow(r);
  const Figure fig = render_affine_rank3(*r, &flow);
  CHECK(fig.arrows.size() == r->interior_wall_count());
  CHECK(fig.svg.count("polygon", "arrow") == r->interior_wall_count());
  const auto& fa = fig.polygons[0];
  const Point2 home{(fa[0].x + fa[1].x + fa[2].x) / 3, (fa[0].y + fa[1].y + fa[2].y) / 3};
  for (const Arrow& a : fig.arrows) {
    const Segment& s = fig.walls[a.wall];
    // The tail is on the side of fA, the head beyond the wall.
    CHECK(line_side(s.a, s.b, a.tail) * line_side(s.a, s.b, home) > 0);
    CHECK(line_side(s.a, s.b, a.head) * line_side(s.a, s.b, home) < 0);
  }

  CHECK(error_of([] { render_affine_rank3(*region_of("A_hyp:1", 2)); }) == Errc::WrongType);
}

TEST_CASE("svg output parses and is deterministic") {
  const auto r = region_of("A_tilde:2", 3);
  const FlowAssignment flow = bruhat_flow(r);
  const std::string text = render_affine_rank3(*r, &flow).svg.str();
  CHECK(text == render_affine_rank3(*r, &flow).svg.str());
  const auto tree = parse_xml(text);
  CHECK(tree.size() == 1);
  const auto& svg = tree.get_child("svg");
  CHECK(count_children(svg, "polygon", "alcove") == r->size());
  CHECK(count_children(svg, "line", "wall") == r->walls().size());

  const auto h = region_of("A_tilde:2,3", 3);
  const std::string disc = render_hyperbolic_rank3(*h, nullptr).svg.str();
  const auto htree = parse_xml(disc);
  CHECK(htree.size() == 1);
  CHECK(count_children(htree.get_child("svg"), "circle", "boundary") == 1);

  SvgDoc doc(10, 10);
  doc.add({"text", {{"class", "a<b"}}, "x & \"y\""});
  CHECK_NOTHROW(parse_xml(doc.str()));
  CHECK(xml_escape("<&>\"'") == "&lt;&amp;&gt;&quot;&apos;");
}

TEST_CASE("disc geodesics") {
  for (const std::string name : {"A_hyp:1", "A_tilde:2,1", "A_tilde:2,2", "A_tilde:2,3", "A_hyp:1,1"}) {
    CAPTURE(name);
    const RootSystem rs(catalog(name));
    const DiscProjection proj(rs);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-1, 1);
    for (const auto& beta : rs.positive_real_roots(3)) {
      const Geodesic g = proj.geodesic(beta);
      CHECK(std::abs(std::hypot(g.end1.x, g.end1.y) - 1) < 1e-9);
      CHECK(std::abs(std::hypot(g.end2.x, g.end2.y) - 1) < 1e-9);
      if (!g.diameter)
        CHECK(std::abs(g.center.x * g.center.x + g.center.y * g.center.y - 1 - g.radius * g.radius) < 1e-6);
      // Level points on the hyperplane land on the arc.
      int hits = 0;
      for (int k = 0; k < 200 && hits < 20; ++k) {
        ThetaVec t{{u(rng), u(rng), u(rng)}};
        const double tb = pairing(t, beta);
        const double bb = static_cast<double>(beta.coords[0] * beta.coords[0] + beta.coords[1] * beta.coords[1] +
                                              beta.coords[2] * beta.coords[2]);
        for (std::size_t i = 0; i < 3; ++i) t.coords[i] -= tb / bb * static_cast<double>(beta.coords[i]);
        if (rs.tits_cone_quadratic(t) < 1e-3) continue;
        const Point2 p = proj.to_disc(normalize_to_level(rs, t));
        CHECK(std::hypot(p.x, p.y) < 1);
        CHECK(std::abs(side(g, p)) < 1e-7);
        ++hits;
      }
      CHECK(hits > 0);
      for (const auto& q : sample_geodesic(g)) CHECK(std::hypot(q.x, q.y) <= 1 + 1e-9);
    }
  }
}

TEST_CASE("geodesic crossings agree with the form") {
  for (const std::string name : {"A_hyp:1", "A_tilde:2,1", "A_tilde:2,2", "A_tilde:2,3"}) {
    CAPTURE(name);
    const RootSystem rs(catalog(name));
    const DiscProjection proj(rs);
    const auto roots = rs.positive_real_roots(3);
    std::size_t crossings = 0;
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = a + 1; b < roots.size(); ++b) {
        const bool meet = std::abs(rs.bilinear_form(roots[a], roots[b])) < 2;
        CHECK(geodesics_intersect(proj.geodesic(roots[a]), proj.geodesic(roots[b])) == meet);
        crossings += meet;
      }
    if (name == "A_tilde:2,3") CHECK(crossings == 0);
    else CHECK(crossings > 0);
  }
}

TEST_CASE("hyperbolic rendering") {
  const auto r = region_of("A_tilde:2,3", 3);
  const Figure fig = render_hyperbolic_rank3(*r);
  CHECK(fig.svg.count("circle", "boundary") == 1);
  CHECK(fig.svg.count("path", "geodesic") == fig.geodesics.size());
  for (std::size_t a = 0; a < fig.geodesics.size(); ++a)
    for (std::size_t b = a + 1; b < fig.geodesics.size(); ++b)
      CHECK_FALSE(geodesics_intersect(fig.geodesics[a], fig.geodesics[b]));
  CHECK(fig.alcove_points.size() == r->size());
  for (const auto& p : fig.alcove_points) CHECK(std::hypot(p.x, p.y) < 1);

  // A_hyp:1 has a commuting pair; its two walls meet at one interior point.
  const auto h = region_of("A_hyp:1", 3);
  const Figure hf = render_hyperbolic_rank3(*h);
  const RootSystem& rs = h->root_system();
  const DiscProjection proj(rs);
  const Point2 corner = proj.to_disc(normalize_to_level(rs, ThetaVec{{0, 1, 0}}));
  std::size_t through = 0;
  for (const auto& g : hf.geodesics) through += std::abs(side(g, corner)) < 1e-7;
  CHECK(through == 2);
  CHECK(geodesics_intersect(proj.geodesic(simple_root(3, 0)), proj.geodesic(simple_root(3, 2))));

  // Adjacent barycentres sit on opposite sides of their shared wall.
  for (const auto& wall : h->walls()) {
    if (!wall.interior()) continue;
    const Geodesic g = proj.geodesic(wall.root);
    CHECK(side(g, hf.alcove_points[wall.base]) * side(g, hf.alcove_points[*wall.neighbor]) < 0);
  }

  const FlowAssignment flow = bruhat_flow(h);
  const Figure arrows = render_hyperbolic_rank3(*h, &flow);
  CHECK(arrows.arrows.size() == h->interior_wall_count());
  CHECK(arrows.svg.count("polygon", "arrow") == h->interior_wall_count());
  CHECK(render_hyperbolic_rank3(*h, &flow).svg.str() == arrows.svg.str());

  CHECK(error_of([] { render_hyperbolic_rank3(*region_of("A_tilde:2", 2)); }) == Errc::WrongType);
}
