#include "rvs/render.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace rvs {

namespace {

double dot3(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Model coordinates in [-extent, extent]^2 to the canvas, y up.
struct Viewport {
  double size;
  double extent;

  Point2 map(Point2 p) const {
    const double s = size / (2.0 * extent);
    return {size / 2.0 + p.x * s, size / 2.0 - p.y * s};
  }
  double scale(double r) const { return r * size / (2.0 * extent); }
};

std::string points_attr(const Viewport& vp, const std::vector<Point2>& pts) {
  std::string out;
  for (const auto& p : pts) {
    const Point2 q = vp.map(p);
    if (!out.empty()) out += ' ';
    out += fmt_num(q.x) + "," + fmt_num(q.y);
  }
  return out;
}

SvgElement line(const Viewport& vp, Point2 a, Point2 b, std::string cls, const std::string& color, double width) {
  const Point2 p = vp.map(a), q = vp.map(b);
  return {"line",
          {{"class", std::move(cls)},
           {"x1", fmt_num(p.x)},
           {"y1", fmt_num(p.y)},
           {"x2", fmt_num(q.x)},
           {"y2", fmt_num(q.y)},
           {"stroke", color},
           {"stroke-width", fmt_num(width)}},
          {}};
}

SvgElement arrow_glyph(const Viewport& vp, const Arrow& a, const std::string& color) {
  const Point2 t = vp.map(a.tail), h = vp.map(a.head);
  double dx = h.x - t.x, dy = h.y - t.y;
  const double len = std::hypot(dx, dy);
  if (len > 0) {
    dx /= len;
    dy /= len;
  }
  const double size = 7.0;
  const Point2 mid{(t.x + h.x) / 2.0, (t.y + h.y) / 2.0};
  const Point2 tip{mid.x + dx * size, mid.y + dy * size};
  const Point2 l{mid.x - dx * size - dy * size * 0.6, mid.y - dy * size + dx * size * 0.6};
  const Point2 r{mid.x - dx * size + dy * size * 0.6, mid.y - dy * size - dx * size * 0.6};
  return {"polygon",
          {{"class", "arrow"},
           {"points", fmt_num(tip.x) + "," + fmt_num(tip.y) + " " + fmt_num(l.x) + "," + fmt_num(l.y) + " " +
                          fmt_num(r.x) + "," + fmt_num(r.y)},
           {"fill", color}},
          {}};
}

SvgElement background(double size) {
  return {"rect", {{"class", "background"}, {"width", fmt_num(size)}, {"height", fmt_num(size)}, {"fill", "white"}}, {}};
}

void require_rank3(const Region& region, TypeKind kind, const char* what) {
  const RootSystem& rs = region.root_system();
  if (rs.rank() != 3 || !rs.type() || rs.type()->kind != kind)
    throw Error(Errc::WrongType, std::string(what) + " needs a rank-3 graph of matching type");
}

}  // namespace

Figure render_rank2(const RootSystem& rs, double extent, int root_radius, const RenderStyle& style) {
  if (rs.rank() != 2) throw Error(Errc::WrongType, "rank-2 rendering needs two vertices");
  Figure fig;
  fig.svg = SvgDoc(style.size, style.size);
  fig.svg.add(background(style.size));
  const Viewport vp{style.size, extent};
  const IntMatrix& adj = rs.adjugate_form();
  auto q = [&](double x, double y) {
    return static_cast<double>(adj(0, 0)) * x * x + 2.0 * static_cast<double>(adj(0, 1)) * x * y +
           static_cast<double>(adj(1, 1)) * y * y;
  };

  // Cone boundary Q = 0 through the origin.
  const double a = static_cast<double>(adj(1, 1)), b = 2.0 * static_cast<double>(adj(0, 1)),
               c = static_cast<double>(adj(0, 0));
  const double disc = b * b - 4.0 * a * c;
  if (a != 0.0 && disc >= 0.0) {
    for (double sgn : {-1.0, 1.0}) {
      const double slope = (-b + sgn * std::sqrt(disc)) / (2.0 * a);
      if (!fig.cone_slopes.empty() && std::abs(fig.cone_slopes.back() - slope) < 1e-12) continue;
      fig.cone_slopes.push_back(slope);
      const double x = std::min(extent, extent / std::max(std::abs(slope), 1e-12));
      SvgElement e = line(vp, {-x, -slope * x}, {x, slope * x}, "cone", style.wall_color, style.stroke);
      e.attrs.emplace_back("stroke-dasharray", "8,6");
      fig.svg.add(std::move(e));
    }
  }

  // Level curve by polar sampling, split where the ray leaves the cone or the view.
  std::vector<Point2> run;
  auto flush = [&] {
    if (run.size() >= 2) fig.curves.push_back(run);
    run.clear();
  };
  const int steps = 2048;
  for (int s = 0; s <= steps; ++s) {
    const double phi = 2.0 * std::numbers::pi * s / steps;
    const double qv = q(std::cos(phi), std::sin(phi));
    if (qv <= 1e-12) {
      flush();
      continue;
    }
    const double r = 1.0 / std::sqrt(qv);
    const Point2 p{r * std::cos(phi), r * std::sin(phi)};
    if (std::abs(p.x) > extent || std::abs(p.y) > extent) {
      flush();
      continue;
    }
    run.push_back(p);
  }
  // phi = 0 and 2 pi are the same ray; rejoin a curve cut there.
  const bool wraps = !run.empty() && !fig.curves.empty() && run.size() >= 2 && fig.curves.front().size() >= 2 &&
                     std::abs(run.back().x - fig.curves.front().front().x) < 1e-12 &&
                     std::abs(run.back().y - fig.curves.front().front().y) < 1e-12;
  if (wraps) {
    run.pop_back();
    fig.curves.front().insert(fig.curves.front().begin(), run.begin(), run.end());
    run.clear();
  }
  flush();
  for (const auto& curve : fig.curves)
    fig.svg.add({"polyline",
                 {{"class", "level"},
                  {"points", points_attr(vp, curve)},
                  {"fill", "none"},
                  {"stroke", style.wall_color},
                  {"stroke-width", fmt_num(style.stroke * 1.5)}},
                 {}});

  // Level points on the hyperplanes <theta, beta> = 0.
  for (const auto& beta : rs.positive_real_roots(root_radius)) {
    const Point2 d{static_cast<double>(beta.coords[1]), -static_cast<double>(beta.coords[0])};
    const double qv = q(d.x, d.y);
    if (qv <= 1e-12) continue;
    const double r = 1.0 / std::sqrt(qv);
    for (double sgn : {1.0, -1.0}) {
      const Point2 p{sgn * r * d.x, sgn * r * d.y};
      if (std::abs(p.x) > extent || std::abs(p.y) > extent) continue;
      fig.dots.push_back(p);
      const Point2 m = vp.map(p);
      fig.svg.add({"circle",
                   {{"class", "root-dot"},
                    {"cx", fmt_num(m.x)},
                    {"cy", fmt_num(m.y)},
                    {"r", "5.000"},
                    {"fill", "white"},
                    {"stroke", style.wall_color},
                    {"stroke-width", fmt_num(style.stroke)}},
                   {}});
    }
  }
  return fig;
}

Figure render_affine_rank3(const Region& region, const FlowAssignment* flow, const RenderStyle& style) {
  require_rank3(region, TypeKind::Affine, "affine rendering");
  const RootSystem& rs = region.root_system();
  const RootVec delta = rs.minimal_imaginary_root();

  // Orthonormal basis of delta-perp: the level is a translate of it.
  std::vector<double> d(delta.coords.begin(), delta.coords.end());
  std::vector<double> u1 = {1.0, -1.0, 0.0};
  std::vector<double> u2 = {1.0, 1.0, -2.0};
  auto orthonormalize = [&](std::vector<double>& u, const std::vector<std::vector<double>>& against) {
    for (const auto& v : against) {
      const double f = dot3(u, v) / dot3(v, v);
      for (std::size_t k = 0; k < 3; ++k) u[k] -= f * v[k];
    }
    const double nrm = std::sqrt(dot3(u, u));
    for (auto& x : u) x /= nrm;
  };
  orthonormalize(u1, {d});
  orthonormalize(u2, {d, u1});
  auto project = [&](const ThetaVec& t) { return Point2{dot3(t.coords, u1), dot3(t.coords, u2)}; };

  // Vertices of fA on the level.
  const double level_sum = 1.0 / std::sqrt(static_cast<double>(affine_level_constant(rs)));
  std::vector<ThetaVec> corners;
  for (std::size_t k = 0; k < 3; ++k) {
    ThetaVec t{{0.0, 0.0, 0.0}};
    t.coords[k] = level_sum / static_cast<double>(delta.coords[k]);
    corners.push_back(t);
  }

  Figure fig;
  double extent = 0.0;
  for (std::size_t a = 0; a < region.size(); ++a) {
    std::vector<Point2> poly;
    for (const auto& c : corners) {
      poly.push_back(project(dual_apply(region.alcove(a), c)));
      extent = std::max({extent, std::abs(poly.back().x), std::abs(poly.back().y)});
    }
    fig.polygons.push_back(std::move(poly));
  }
  extent *= 1.08;
  fig.svg = SvgDoc(style.size, style.size);
  fig.svg.add(background(style.size));
  const Viewport vp{style.size, extent};

  for (std::size_t a = 0; a < region.size(); ++a) {
    const bool fundamental = a == 0;
    fig.svg.add({"polygon",
                 {{"class", "alcove"},
                  {"points", points_attr(vp, fig.polygons[a])},
                  {"fill", fundamental ? style.arrow_color : style.fill_color},
                  {"fill-opacity", fundamental ? "0.35" : "0.6"},
                  {"stroke", "none"}},
                 {}});
  }
  auto centroid = [&](std::size_t a) {
    const auto& p = fig.polygons[a];
    return Point2{(p[0].x + p[1].x + p[2].x) / 3.0, (p[0].y + p[1].y + p[2].y) / 3.0};
  };

  const auto& walls = region.walls();
  for (std::size_t w = 0; w < walls.size(); ++w) {
    const auto& poly = fig.polygons[walls[w].base];
    std::vector<Point2> ends;
    for (std::size_t k = 0; k < 3; ++k)
      if (static_cast<int>(k) != walls[w].gen) ends.push_back(poly[k]);
    fig.walls.push_back({ends[0], ends[1]});
    fig.svg.add(line(vp, ends[0], ends[1], "wall", style.wall_color, style.stroke));
  }

  if (flow) {
    for (std::size_t w = 0; w < walls.size(); ++w) {
      if (!walls[w].interior()) continue;
      const auto dir = flow->direction(w);
      if (!dir) continue;
      const Point2 from = centroid(walls[w].base), to = centroid(*walls[w].neighbor);
      const Point2 lo = *dir == Direction::Above ? from : to;
      const Point2 hi = *dir == Direction::Above ? to : from;
      const Segment& s = fig.walls[w];
      const Point2 mid{(s.a.x + s.b.x) / 2.0, (s.a.y + s.b.y) / 2.0};
      const double dx = (hi.x - lo.x) * 0.15, dy = (hi.y - lo.y) * 0.15;
      fig.arrows.push_back({w, {mid.x - dx, mid.y - dy}, {mid.x + dx, mid.y + dy}});
      fig.svg.add(arrow_glyph(vp, fig.arrows.back(), style.arrow_color));
    }
  }
  return fig;
}

DiscProjection::DiscProjection(const RootSystem& rs) {
  if (rs.rank() != 3) throw Error(Errc::WrongType, "disc projection needs rank 3");
  std::vector<std::vector<double>> adj(3, std::vector<double>(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) adj[i][j] = static_cast<double>(rs.adjugate_form()(i, j));
  const SymmetricEigen eig = jacobi_eigen(adj);
  std::vector<std::size_t> pos, neg;
  for (std::size_t k = 0; k < 3; ++k) {
    if (eig.values[k] > 1e-9)
      pos.push_back(k);
    else if (eig.values[k] < -1e-9)
      neg.push_back(k);
  }
  if (pos.size() != 1 || neg.size() != 2)
    throw Error(Errc::DiagonalizationFailed, "level form does not have signature (1,2)");
  for (std::size_t k : {pos[0], neg[0], neg[1]}) {
    std::vector<double> row(3);
    const double s = std::sqrt(std::abs(eig.values[k]));
    for (std::size_t i = 0; i < 3; ++i) row[i] = s * eig.vectors[i][k];
    basis_.push_back(std::move(row));
  }
  // Put the fundamental chamber on the upper sheet.
  if (dot3(basis_[0], {1.0, 1.0, 1.0}) < 0)
    for (auto& x : basis_[0]) x = -x;
}

std::vector<double> DiscProjection::minkowski(const ThetaVec& theta) const {
  return {dot3(basis_[0], theta.coords), dot3(basis_[1], theta.coords), dot3(basis_[2], theta.coords)};
}

Point2 DiscProjection::to_disc(const ThetaVec& theta) const {
  const auto y = minkowski(theta);
  const double q = y[0] * y[0] - y[1] * y[1] - y[2] * y[2];
  if (q <= 0) throw Error(Errc::NotInCone, "point is not on the level");
  const double s = 1.0 / std::sqrt(q);
  return {y[1] * s / (1.0 + y[0] * s), y[2] * s / (1.0 + y[0] * s)};
}

Geodesic DiscProjection::geodesic(const RootVec& beta) const {
  // theta = sum_k y_k b_k / |b_k|^2 in the scaled basis, so <theta, beta> is
  // linear in y with coefficients n_k = (b_k . beta) / |b_k|^2.
  double n[3];
  for (std::size_t k = 0; k < 3; ++k) {
    double bb = dot3(basis_[k], basis_[k]);
    double bd = 0.0;
    for (std::size_t i = 0; i < 3; ++i) bd += basis_[k][i] * static_cast<double>(beta.coords[i]);
    n[k] = bd / bb;
  }
  Geodesic g{beta, false, {0.0, 0.0}, 0.0, {0.0, 0.0}, {0.0, 0.0}};
  const double nt = std::hypot(n[1], n[2]);
  if (nt <= std::abs(n[0]) * (1.0 + 1e-12))
    throw Error(Errc::ProjectionFailed, "hyperplane misses the hyperbolic level");
  if (std::abs(n[0]) <= 1e-12 * nt) {
    g.diameter = true;
    g.end1 = {n[2] / nt, -n[1] / nt};
    g.end2 = {-n[2] / nt, n[1] / nt};
    return g;
  }
  g.center = {-n[1] / n[0], -n[2] / n[0]};
  const double c2 = g.center.x * g.center.x + g.center.y * g.center.y;
  g.radius = std::sqrt(c2 - 1.0);
  // The circles |p| = 1 and |p - c| = r meet where p . c = 1.
  const double c = std::sqrt(c2);
  const Point2 foot{g.center.x / c2, g.center.y / c2};
  const double half = std::sqrt(std::max(0.0, 1.0 - 1.0 / c2));
  g.end1 = {foot.x - half * g.center.y / c, foot.y + half * g.center.x / c};
  g.end2 = {foot.x + half * g.center.y / c, foot.y - half * g.center.x / c};
  return g;
}

std::vector<Point2> sample_geodesic(const Geodesic& g, int count) {
  std::vector<Point2> out;
  if (g.diameter) {
    for (int k = 0; k < count; ++k) {
      const double t = static_cast<double>(k) / (count - 1);
      out.push_back({g.end1.x + t * (g.end2.x - g.end1.x), g.end1.y + t * (g.end2.y - g.end1.y)});
    }
    return out;
  }
  double a1 = std::atan2(g.end1.y - g.center.y, g.end1.x - g.center.x);
  double a2 = std::atan2(g.end2.y - g.center.y, g.end2.x - g.center.x);
  // The part inside the disc is the minor arc.
  if (a2 - a1 > std::numbers::pi) a2 -= 2.0 * std::numbers::pi;
  if (a1 - a2 > std::numbers::pi) a2 += 2.0 * std::numbers::pi;
  for (int k = 0; k < count; ++k) {
    const double a = a1 + (a2 - a1) * k / (count - 1);
    out.push_back({g.center.x + g.radius * std::cos(a), g.center.y + g.radius * std::sin(a)});
  }
  return out;
}

bool geodesics_intersect(const Geodesic& g, const Geodesic& h, double eps) {
  std::vector<Point2> cand;
  if (g.diameter && h.diameter) {
    const double cross = g.end1.x * h.end1.y - g.end1.y * h.end1.x;
    // Distinct diameters meet at the origin.
    return std::abs(cross) > eps;
  }
  if (g.diameter || h.diameter) {
    const Geodesic& d = g.diameter ? g : h;
    const Geodesic& c = g.diameter ? h : g;
    // p = t u, |t u - c|^2 = r^2.
    const Point2 u = d.end1;
    const double b = u.x * c.center.x + u.y * c.center.y;
    const double cc = c.center.x * c.center.x + c.center.y * c.center.y - c.radius * c.radius;
    const double disc = b * b - cc;
    // Distinct geodesics are never tangent inside the disc.
    if (disc <= eps * eps * (1.0 + cc * cc)) return false;
    for (double s : {-1.0, 1.0}) {
      const double t = b + s * std::sqrt(disc);
      cand.push_back({t * u.x, t * u.y});
    }
  } else {
    const double dx = h.center.x - g.center.x, dy = h.center.y - g.center.y;
    const double dist = std::hypot(dx, dy);
    if (dist < eps) return false;
    if (dist > g.radius + h.radius || dist < std::abs(g.radius - h.radius)) return false;
    const double a = (g.radius * g.radius - h.radius * h.radius + dist * dist) / (2.0 * dist);
    const double hh = std::sqrt(std::max(0.0, g.radius * g.radius - a * a));
    if (hh <= eps * std::max(g.radius, h.radius)) return false;
    const Point2 m{g.center.x + a * dx / dist, g.center.y + a * dy / dist};
    cand.push_back({m.x - hh * dy / dist, m.y + hh * dx / dist});
    cand.push_back({m.x + hh * dy / dist, m.y - hh * dx / dist});
  }
  for (const auto& p : cand)
    if (p.x * p.x + p.y * p.y < 1.0 - eps) return true;
  return false;
}

Figure render_hyperbolic_rank3(const Region& region, const FlowAssignment* flow, const RenderStyle& style) {
  require_rank3(region, TypeKind::Hyperbolic, "disc rendering");
  const RootSystem& rs = region.root_system();
  const DiscProjection proj(rs);

  Figure fig;
  fig.svg = SvgDoc(style.size, style.size);
  fig.svg.add(background(style.size));
  const Viewport vp{style.size, 1.05};
  const Point2 origin = vp.map({0.0, 0.0});
  fig.svg.add({"circle",
               {{"class", "boundary"},
                {"cx", fmt_num(origin.x)},
                {"cy", fmt_num(origin.y)},
                {"r", fmt_num(vp.scale(1.0))},
                {"fill", style.fill_color},
                {"stroke", style.wall_color},
                {"stroke-width", fmt_num(style.stroke * 1.5)}},
               {}});

  // One geodesic per distinct wall root.
  std::map<RootVec, std::size_t> by_root;
  for (const auto& w : region.walls()) {
    if (by_root.contains(w.root)) continue;
    by_root.emplace(w.root, fig.geodesics.size());
    fig.geodesics.push_back(proj.geodesic(w.root));
  }
  for (const auto& g : fig.geodesics) {
    const Point2 p = vp.map(g.end1), q = vp.map(g.end2);
    std::string d = "M " + fmt_num(p.x) + " " + fmt_num(p.y) + " ";
    if (g.diameter) {
      d += "L " + fmt_num(q.x) + " " + fmt_num(q.y);
    } else {
      const Point2 c = vp.map(g.center);
      const double cross = (q.x - p.x) * (c.y - p.y) - (q.y - p.y) * (c.x - p.x);
      const std::string r = fmt_num(vp.scale(g.radius));
      d += "A " + r + " " + r + " 0 0 " + (cross > 0 ? "1" : "0") + " " + fmt_num(q.x) + " " + fmt_num(q.y);
    }
    fig.svg.add({"path",
                 {{"class", "geodesic"},
                  {"d", d},
                  {"fill", "none"},
                  {"stroke", style.wall_color},
                  {"stroke-width", fmt_num(style.stroke)}},
                 {}});
  }

  const ThetaVec bary = normalize_to_level(rs, ThetaVec{{1.0, 1.0, 1.0}});
  for (std::size_t a = 0; a < region.size(); ++a) {
    fig.alcove_points.push_back(proj.to_disc(dual_apply(region.alcove(a), bary)));
    const Point2 m = vp.map(fig.alcove_points.back());
    fig.svg.add({"circle",
                 {{"class", a == 0 ? "fundamental" : "alcove"},
                  {"cx", fmt_num(m.x)},
                  {"cy", fmt_num(m.y)},
                  {"r", a == 0 ? "4.000" : "1.500"},
                  {"fill", a == 0 ? style.arrow_color : style.wall_color}},
                 {}});
  }

  if (flow) {
    const auto& walls = region.walls();
    for (std::size_t w = 0; w < walls.size(); ++w) {
      if (!walls[w].interior()) continue;
      const auto dir = flow->direction(w);
      if (!dir) continue;
      const Point2 from = fig.alcove_points[walls[w].base], to = fig.alcove_points[*walls[w].neighbor];
      const Point2 lo = *dir == Direction::Above ? from : to;
      const Point2 hi = *dir == Direction::Above ? to : from;
      const Point2 mid{(lo.x + hi.x) / 2.0, (lo.y + hi.y) / 2.0};
      const double dx = (hi.x - lo.x) * 0.15, dy = (hi.y - lo.y) * 0.15;
      fig.arrows.push_back({w, {mid.x - dx, mid.y - dy}, {mid.x + dx, mid.y + dy}});
      fig.svg.add(arrow_glyph(vp, fig.arrows.back(), style.arrow_color));
    }
  }
  return fig;
}

}  // namespace rvs
