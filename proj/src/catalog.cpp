#include <charconv>
#include <string>

#include "rvs/graph.hpp"

namespace rvs {

namespace {

using Edges = std::vector<Graph::Edge>;

[[noreturn]] void bad(std::string_view family, std::string_view why) {
  throw Error(Errc::BadParams, std::string(family) + ": " + std::string(why));
}

std::string label(std::string_view family, std::span<const int> params) {
  std::string s(family);
  for (std::size_t k = 0; k < params.size(); ++k) s += (k == 0 ? ":" : ",") + std::to_string(params[k]);
  return s;
}

Edges path_edges(int first, int count) {
  Edges e;
  for (int v = first; v + 1 < first + count; ++v) e.push_back({v, v + 1, 1});
  return e;
}

// Finite ADE; vertex 0 is the end of the longest arm.
Edges finite_edges(char kind, int n) {
  switch (kind) {
    case 'A':
      return path_edges(0, n);
    case 'D': {
      Edges e = path_edges(0, n - 1);
      e.push_back({n - 3, n - 1, 1});
      return e;
    }
    default: {  // E6, E7, E8: chain 0..n-2, branch n-1 at the third-from-far end.
      Edges e = path_edges(0, n - 1);
      e.push_back({n - 4, n - 1, 1});
      return e;
    }
  }
}

// Extended ADE on n+1 vertices; vertex 0 is the extending vertex.
Edges affine_edges(char kind, int n) {
  switch (kind) {
    case 'A': {
      if (n == 1) return {{0, 1, 2}};
      Edges e = path_edges(0, n + 1);
      e.push_back({0, n, 1});
      return e;
    }
    case 'D': {
      // 0 and 1 on vertex 2; chain 2..n-2; n-1 and n on vertex n-2.
      Edges e{{0, 2, 1}, {1, 2, 1}};
      for (int v = 2; v < n - 2; ++v) e.push_back({v, v + 1, 1});
      e.push_back({n - 2, n - 1, 1});
      e.push_back({n - 2, n, 1});
      return e;
    }
    default: {
      if (n == 6) return {{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 4, 1}, {2, 5, 1}, {5, 6, 1}};
      if (n == 7) {
        Edges e = path_edges(0, 7);
        e.push_back({3, 7, 1});
        return e;
      }
      Edges e = path_edges(0, 8);
      e.push_back({5, 8, 1});
      return e;
    }
  }
}

Edges shifted(const Edges& e, int by) {
  Edges out;
  for (const auto& x : e) out.push_back({x.i + by, x.j + by, x.mult});
  return out;
}

Graph overextended(std::string name, char kind, int n) {
  Edges e = shifted(affine_edges(kind, n), 1);
  e.push_back({0, 1, 1});
  return Graph::from_edges(std::move(name), static_cast<std::size_t>(n + 2), e);
}

int single(std::string_view family, std::span<const int> p) {
  if (p.size() != 1) bad(family, "expects exactly one parameter");
  return p[0];
}

}  // namespace

Graph catalog(std::string_view family, std::span<const int> p) {
  const std::string name = label(family, p);

  if (family == "A" || family == "D" || family == "E") {
    const int n = single(family, p);
    const char k = family[0];
    if ((k == 'A' && n < 1) || (k == 'D' && n < 4) || (k == 'E' && (n < 6 || n > 8)))
      bad(family, "rank out of range");
    return Graph::from_edges(name, static_cast<std::size_t>(n), finite_edges(k, n));
  }

  if (family == "A_tilde" || family == "A_tilde_extra") {
    if (p.size() == 2) {
      // Triangle 0 (top), 1, 2 with k of the edges doubled: 0-1, then 1-2, then 0-2.
      if (p[0] != 2 || p[1] < 1 || p[1] > 3) bad(family, "exceptional triangle needs 2,k with k in 1..3");
      const int k = p[1];
      Edges e{{0, 1, 2}, {1, 2, k >= 2 ? 2 : 1}, {0, 2, k >= 3 ? 2 : 1}};
      return Graph::from_edges(name, 3, e);
    }
    if (family == "A_tilde_extra") bad(family, "expects 2,k");
  }

  if (family == "A_tilde" || family == "D_tilde" || family == "E_tilde") {
    const int n = single(family, p);
    const char k = family[0];
    if ((k == 'A' && n < 1) || (k == 'D' && n < 4) || (k == 'E' && (n < 6 || n > 8)))
      bad(family, "rank out of range");
    return Graph::from_edges(name, static_cast<std::size_t>(n + 1), affine_edges(k, n));
  }

  if (family == "A_hyp" && p.size() == 2) {
    // Vertex 0 is the overextended vertex in every exceptional diagram.
    if (p[0] == 1 && p[1] == 1) return Graph::from_edges(name, 3, Edges{{0, 1, 2}, {1, 2, 2}});
    if (p[0] == 2 && p[1] == 1)
      return Graph::from_edges(name, 4, Edges{{0, 1, 1}, {0, 2, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    if (p[0] == 2 && p[1] == 2)
      return Graph::from_edges(name, 4,
                               Edges{{0, 1, 1}, {0, 2, 1}, {0, 3, 1}, {1, 2, 1}, {1, 3, 1}, {2, 3, 1}});
    if (p[0] == 3 && p[1] == 1)
      // 0 = overextended, 1 = top, 2,3,4 = bottom chain.
      return Graph::from_edges(name, 5,
                               Edges{{0, 1, 1}, {0, 3, 1}, {1, 2, 1}, {1, 4, 1}, {2, 3, 1}, {3, 4, 1}});
    bad(family, "unknown exceptional diagram");
  }

  if (family == "A_hyp" || family == "D_hyp" || family == "E_hyp") {
    const int n = single(family, p);
    const char k = family[0];
    if ((k == 'A' && (n < 1 || n > 7)) || (k == 'D' && (n < 4 || n > 8)) || (k == 'E' && (n < 6 || n > 8)))
      bad(family, "rank out of range");
    return overextended(name, k, n);
  }

  if (family == "Star") {
    const int leaves = single(family, p);
    if (leaves < 1 || leaves + 1 > static_cast<int>(kMaxRank)) bad(family, "leaf count out of range");
    Edges e;
    for (int v = 1; v <= leaves; ++v) e.push_back({0, v, 1});
    return Graph::from_edges(name, static_cast<std::size_t>(leaves + 1), e);
  }

  if (family == "L") {
    const int m = single(family, p);
    if (m < 1) bad(family, "needs at least one loop");
    return Graph::from_edges(name, 1, Edges{}, {m});
  }

  if (family == "K") {
    if (p.empty() || p.size() > 2) bad(family, "expects m or m,l");
    const int m = p[0];
    if (m < 1) bad(family, "needs m >= 1");
    const int l = p.size() == 2 ? p[1] : 0;
    if (l < 0 || l > 2) bad(family, "loop parameter must be 1 or 2");
    std::vector<std::int64_t> loops{l >= 1 ? 1 : 0, l >= 2 ? 1 : 0};
    return Graph::from_edges(name, 2, Edges{{0, 1, m}}, loops);
  }

  throw Error(Errc::UnknownName, std::string(family));
}

Graph catalog(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view family = spec.substr(0, colon);
  std::vector<int> params;
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      const std::string_view tok = rest.substr(0, comma);
      int v = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw Error(Errc::Parse, "bad catalog parameter '" + std::string(tok) + "'");
      params.push_back(v);
      if (comma == std::string_view::npos) break;
      rest = rest.substr(comma + 1);
    }
  }
  return catalog(family, params);
}

std::vector<std::string> catalog_families() {
  return {"A:n",       "D:n",       "E:n",       "A_tilde:n", "D_tilde:n", "E_tilde:n",
          "A_hyp:n",   "D_hyp:n",   "E_hyp:n",   "A_hyp:1,1", "A_hyp:2,1", "A_hyp:2,2",
          "A_hyp:3,1", "A_tilde:2,k", "Star:5",  "L:m",       "K:m",       "K:m,1",
          "K:m,2"};
}

}  // namespace rvs
