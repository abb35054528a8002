#include <algorithm>
#include <numeric>

#include "rvs/graph.hpp"

namespace rvs {

Graph::Graph(std::string name, IntMatrix edge_mult, std::vector<std::int64_t> loops)
    : name_(std::move(name)), edge_mult_(std::move(edge_mult)), loops_(std::move(loops)) {
  const std::size_t n = edge_mult_.rows();
  if (n == 0) throw Error(Errc::BadParams, "graph needs at least one vertex");
  if (n > kMaxRank) throw Error(Errc::RankTooLarge, "rank " + std::to_string(n) + " exceeds 16");
  if (!edge_mult_.symmetric()) throw Error(Errc::BadParams, "edge multiplicities must be symmetric");
  if (loops_.empty()) loops_.assign(n, 0);
  if (loops_.size() != n) throw Error(Errc::BadParams, "loop counts must have one entry per vertex");
  for (std::size_t i = 0; i < n; ++i) {
    if (edge_mult_(i, i) != 0) throw Error(Errc::BadParams, "diagonal edge multiplicity must be zero");
    if (loops_[i] < 0) throw Error(Errc::BadParams, "negative loop count");
    for (std::size_t j = 0; j < n; ++j)
      if (edge_mult_(i, j) < 0) throw Error(Errc::BadParams, "negative edge multiplicity");
  }
}

Graph Graph::from_edges(std::string name, std::size_t n, std::span<const Edge> edges,
                        std::vector<std::int64_t> loops) {
  if (n == 0) throw Error(Errc::BadParams, "graph needs at least one vertex");
  if (n > kMaxRank) throw Error(Errc::RankTooLarge, "rank " + std::to_string(n) + " exceeds 16");
  IntMatrix m(n, n);
  for (const auto& e : edges) {
    if (e.i < 0 || e.j < 0 || static_cast<std::size_t>(e.i) >= n || static_cast<std::size_t>(e.j) >= n)
      throw Error(Errc::BadParams, "edge endpoint out of range");
    if (e.i == e.j) throw Error(Errc::BadParams, "self-edges must be given as loops");
    if (e.mult < 0) throw Error(Errc::BadParams, "negative edge multiplicity");
    m(e.i, e.j) = checked::add(m(e.i, e.j), e.mult);
    m(e.j, e.i) = m(e.i, e.j);
  }
  return Graph(std::move(name), std::move(m), std::move(loops));
}

bool Graph::loop_free() const noexcept {
  return std::all_of(loops_.begin(), loops_.end(), [](auto l) { return l == 0; });
}

bool Graph::connected() const {
  std::vector<int> all(rank());
  std::iota(all.begin(), all.end(), 0);
  return components(all).size() == 1;
}

Graph Graph::induced(std::span<const int> vertices) const {
  const std::size_t k = vertices.size();
  IntMatrix m(k, k);
  std::vector<std::int64_t> l(k);
  for (std::size_t a = 0; a < k; ++a) {
    l[a] = loops_[vertices[a]];
    for (std::size_t b = 0; b < k; ++b) m(a, b) = edge_mult_(vertices[a], vertices[b]);
  }
  return Graph(name_ + "|sub", std::move(m), std::move(l));
}

std::vector<std::vector<int>> Graph::components(std::span<const int> vertices) const {
  std::vector<std::vector<int>> comps;
  std::vector<bool> in(rank(), false), seen(rank(), false);
  for (int v : vertices) in[v] = true;
  for (int start : vertices) {
    if (seen[start]) continue;
    std::vector<int> comp{start};
    seen[start] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      const int v = comp[head];
      for (std::size_t u = 0; u < rank(); ++u) {
        if (in[u] && !seen[u] && edge_mult_(v, u) > 0) {
          seen[u] = true;
          comp.push_back(static_cast<int>(u));
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::vector<Graph::Edge> Graph::edge_list() const {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = i + 1; j < rank(); ++j)
      if (edge_mult_(i, j) > 0) out.push_back({static_cast<int>(i), static_cast<int>(j), edge_mult_(i, j)});
  return out;
}

IntMatrix gcm(const Graph& graph) {
  const std::size_t n = graph.rank();
  IntMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a(i, j) = (i == j) ? checked::sub(2, checked::mul(2, graph.loops()[i])) : -graph.edge_mult()(i, j);
    }
  }
  return a;
}

std::string_view to_string(TypeKind kind) noexcept {
  switch (kind) {
    case TypeKind::Finite: return "Finite";
    case TypeKind::Affine: return "Affine";
    case TypeKind::Hyperbolic: return "Hyperbolic";
    case TypeKind::IndefiniteNonHyperbolic: return "IndefiniteNonHyperbolic";
  }
  return "?";
}

namespace {

// Type of a connected graph ignoring the hyperbolic refinement.
GraphType definite_type(const Graph& g) {
  const Definiteness d = definiteness(gcm(g));
  switch (d.kind) {
    case Definiteness::Kind::PositiveDefinite:
      return {TypeKind::Finite, {}};
    case Definiteness::Kind::PositiveSemidefinite:
      if (d.kernel.size() == 1) return {TypeKind::Affine, d.kernel.front()};
      return {TypeKind::IndefiniteNonHyperbolic, {}};
    case Definiteness::Kind::Indefinite:
      break;
  }
  return {TypeKind::IndefiniteNonHyperbolic, {}};
}

}  // namespace

GraphType classify(const Graph& graph) {
  if (!graph.connected()) throw Error(Errc::DisconnectedGraph, graph.name());
  GraphType t = definite_type(graph);
  if (t.kind != TypeKind::IndefiniteNonHyperbolic) return t;
  if (definiteness(gcm(graph)).kind != Definiteness::Kind::Indefinite) return t;

  // Full subgraphs of finite/affine components are again finite/affine, so
  // it is enough to inspect the n maximal proper full subgraphs.
  const int n = static_cast<int>(graph.rank());
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (v != drop) rest.push_back(v);
    for (const auto& comp : graph.components(rest)) {
      if (definite_type(graph.induced(comp)).kind == TypeKind::IndefiniteNonHyperbolic)
        return {TypeKind::IndefiniteNonHyperbolic, {}};
    }
  }
  return {TypeKind::Hyperbolic, {}};
}

}  // namespace rvs
