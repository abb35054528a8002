#include "rvs/json_io.hpp"

#include <fstream>
#include <map>

namespace rvs {

namespace {

template <class T>
T get_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(Errc::Parse, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, std::string("field '") + key + "': " + e.what());
  }
}

}  // namespace

Graph graph_from_json(const Json& j) {
  const auto name = j.contains("name") ? get_field<std::string>(j, "name") : std::string("graph");
  const auto n = get_field<std::int64_t>(j, "vertices");
  if (n < 1) throw Error(Errc::BadParams, "graph needs at least one vertex");
  if (static_cast<std::size_t>(n) > kMaxRank)
    throw Error(Errc::RankTooLarge, "rank " + std::to_string(n) + " exceeds " + std::to_string(kMaxRank));
  const auto nn = static_cast<std::size_t>(n);

  IntMatrix mult(nn, nn, 0);
  std::map<std::pair<int, int>, std::int64_t> seen;
  const auto edges = j.contains("edges") ? get_field<std::vector<std::vector<std::int64_t>>>(j, "edges")
                                         : std::vector<std::vector<std::int64_t>>{};
  for (const auto& e : edges) {
    if (e.size() != 3) throw Error(Errc::Parse, "edges are [i, j, mult] triples");
    if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n) throw Error(Errc::Parse, "edge endpoint out of range");
    if (e[0] == e[1]) throw Error(Errc::Parse, "self-edges go in \"loops\"");
    if (e[2] < 0) throw Error(Errc::Parse, "edge multiplicity must be non-negative");
    const std::pair<int, int> key{static_cast<int>(std::min(e[0], e[1])), static_cast<int>(std::max(e[0], e[1]))};
    auto [it, fresh] = seen.emplace(key, e[2]);
    if (!fresh && it->second != e[2])
      throw Error(Errc::Parse, "conflicting multiplicities for edge " + std::to_string(key.first) + "-" +
                                   std::to_string(key.second));
    mult(static_cast<std::size_t>(key.first), static_cast<std::size_t>(key.second)) = e[2];
    mult(static_cast<std::size_t>(key.second), static_cast<std::size_t>(key.first)) = e[2];
  }
  std::vector<std::int64_t> loops(nn, 0);
  if (j.contains("loops")) {
    loops = get_field<std::vector<std::int64_t>>(j, "loops");
    if (loops.size() != nn) throw Error(Errc::Parse, "\"loops\" needs one entry per vertex");
  }
  return Graph(name, std::move(mult), std::move(loops));
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edge_list()) edges.push_back({e.i, e.j, e.mult});
  return Json{{"name", g.name()}, {"vertices", g.rank()}, {"edges", edges}, {"loops", g.loops()}};
}

Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(Errc::Parse, "cannot open " + path);
  try {
    return Json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::Parse, path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream f(path);
  if (!f) throw Error(Errc::BadParams, "cannot write " + path);
  f << j.dump(2) << "\n";
}

Graph load_graph(const std::string& path) { return graph_from_json(read_json_file(path)); }

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

Json root_to_json(const RootVec& r) { return r.coords; }

Json signed_word_to_json(const SignedWord& w) {
  Json out = Json::array();
  for (const auto& l : w) out.push_back({l.gen, l.sign});
  return out;
}

Json region_to_json(const Region& region) {
  Json alcoves = Json::array();
  for (std::size_t k = 0; k < region.size(); ++k) alcoves.push_back(region.word(k));
  Json walls = Json::array();
  for (const auto& w : region.walls()) {
    walls.push_back({{"alcove", w.base},
                     {"gen", w.gen},
                     {"neighbor", w.neighbor ? Json(*w.neighbor) : Json(nullptr)},
                     {"root", root_to_json(w.root)}});
  }
  Json flats = Json::array();
  for (const auto& f : region.flats())
    flats.push_back({{"base", region.word(f.base)}, {"pair", {f.i, f.j}}, {"m", f.m}, {"complete", f.complete}});
  return Json{{"graph", region.root_system().graph().name()},
              {"radius", region.radius()},
              {"alcove_count", region.size()},
              {"interior_wall_count", region.interior_wall_count()},
              {"alcoves", alcoves},
              {"walls", walls},
              {"flats", flats}};
}

Json flow_to_json(const FlowAssignment& flow) {
  const Region& region = flow.region();
  Json out = Json::array();
  const auto& walls = region.walls();
  for (std::size_t w = 0; w < walls.size(); ++w) {
    const auto d = flow.direction(w);
    if (!d) continue;
    out.push_back({{"alcove", region.word(walls[w].base)}, {"gen", walls[w].gen}, {"above", *d == Direction::Above}});
  }
  return out;
}

FlowAssignment flow_from_json(std::shared_ptr<const Region> region, const Json& input) {
  const Json& j = input.is_object() && input.contains("flow") ? input.at("flow") : input;
  if (!j.is_array()) throw Error(Errc::Parse, "flow file must be an array");
  const RootSystem& rs = region->root_system();
  std::vector<std::optional<Direction>> dirs(region->walls().size());
  for (const auto& entry : j) {
    const auto word = get_field<Word>(entry, "alcove");
    const auto gen = get_field<int>(entry, "gen");
    const auto above = get_field<bool>(entry, "above");
    if (gen < 0 || static_cast<std::size_t>(gen) >= rs.rank()) throw Error(Errc::Parse, "generator out of range");
    for (int g : word)
      if (g < 0 || static_cast<std::size_t>(g) >= rs.rank()) throw Error(Errc::Parse, "alcove word letter out of range");
    const auto k = region->index_of(rs.element(word));
    if (!k) throw Error(Errc::Parse, "alcove outside the region");
    const std::size_t wi = region->wall_index(*k, gen);
    const bool base_side = region->walls()[wi].base == *k;
    const Direction d = (above == base_side) ? Direction::Above : Direction::Below;
    if (dirs[wi] && *dirs[wi] != d) throw Error(Errc::Parse, "contradictory entries for one wall");
    dirs[wi] = d;
  }
  FlowAssignment flow(std::move(region), std::move(dirs));
  if (!flow.total_on_interior()) throw Error(Errc::IncompleteAssignment, "flow file misses interior walls");
  return flow;
}

Json validation_to_json(const Region& region, const FlowValidation& v) {
  Json flats = Json::array();
  for (const auto& r : v.reports) {
    const Flat& f = region.flats()[r.flat];
    flats.push_back({{"base", region.word(f.base)},
                     {"pair", {f.i, f.j}},
                     {"m", f.m},
                     {"sources", r.sources},
                     {"sinks", r.sinks},
                     {"antipodal", r.antipodal},
                     {"valid", r.valid}});
  }
  return Json{{"valid", v.valid},
              {"complete_flats", v.reports.size()},
              {"boundary_flats", v.boundary_flats.size()},
              {"flats", flats}};
}

Json positivity_to_json(const Region& region, const PositivityReport& r) {
  Json out{{"pass", r.pass}, {"min_pairing", r.min_pairing}};
  if (r.worst_alcove) out["worst_alcove"] = region.word(*r.worst_alcove);
  Json failing = Json::array();
  for (const auto& a : r.alcoves)
    if (!a.pass)
      failing.push_back({{"alcove", region.word(a.alcove)}, {"min_pairing", a.min_pairing}, {"class", a.worst_class}});
  out["failing_alcoves"] = failing;
  return out;
}

Json wall_report_to_json(const Region& region, const WallVanishingReport& r) {
  return Json{{"alcove", region.word(r.alcove)},
              {"gen", r.gen},
              {"root", root_to_json(r.root)},
              {"samples", r.samples},
              {"max_residual", r.max_residual},
              {"min_other", r.min_other},
              {"pass", r.pass}};
}

Json sign_patterns_to_json(FlatType type, const std::vector<SignPattern>& patterns) {
  Json rows = Json::array();
  for (const auto& p : patterns)
    rows.push_back({{"lhs", to_string(lhs_word(p))}, {"rhs", to_string(rhs_word(p))}, {"signs", to_string(p)}});
  return Json{{"type", type == FlatType::A1A1 ? "A1A1" : "A2"}, {"count", patterns.size()}, {"equalities", rows}};
}

}  // namespace rvs
