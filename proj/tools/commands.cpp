#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "rvs/render.hpp"

namespace rvs::cli {

namespace {

// Identity tolerances for param-check.
constexpr double kRank2Tol = 1e-10;
constexpr double kHyperboloidTol = 1e-8;

Json envelope(const RunConfig& cfg) {
  return Json{{"schema_version", kSchemaVersion}, {"command", cfg.command}, {"config", cfg.to_json()}};
}

std::string pass_word(bool ok) { return ok ? "PASS" : "FAIL"; }

bool is_usage_error(Errc c) {
  switch (c) {
    case Errc::Parse:
    case Errc::UnknownName:
    case Errc::BadParams:
    case Errc::RankTooLarge:
    case Errc::WrongType:
    case Errc::LoopedVertex:
    case Errc::DisconnectedGraph:
      return true;
    default:
      return false;
  }
}

FlowAssignment make_flow(const RunConfig& cfg, std::shared_ptr<const Region> region) {
  const std::string& f = cfg.flow;
  if (f == "bruhat") return bruhat_flow(std::move(region));
  if (f.rfind("random:", 0) == 0) {
    std::uint64_t seed = 0;
    try {
      std::size_t used = 0;
      seed = std::stoull(f.substr(7), &used);
      if (used != f.size() - 7) throw std::invalid_argument(f);
    } catch (const std::exception&) {
      throw Error(Errc::Parse, "bad random flow seed in '" + f + "'");
    }
    return random_flow(std::move(region), seed);
  }
  if (f.rfind("file:", 0) == 0) return flow_from_json(std::move(region), read_json_file(f.substr(5)));
  throw Error(Errc::Parse, "flow must be bruhat, random:<seed> or file:<path>");
}

std::string word_str(const Word& w) {
  if (w.empty()) return "e";
  std::string s;
  for (int g : w) s += (s.empty() ? "" : ".") + std::to_string(g);
  return s;
}

}  // namespace

Json RunConfig::to_json() const {
  Json j{{"catalog", catalog}, {"graph_path", graph_path}, {"radius", radius},     {"seed", seed},
         {"samples", samples}, {"tol", tol},               {"nonzero_tol", nonzero_tol}, {"flow", flow},
         {"loop_length", loop_length}, {"loop_base", loop_base}, {"search_budget", search_budget},
         {"braid_type", braid_type}, {"m", ms}, {"trials", trials}, {"kind", kind},
         {"json_path", json_path}, {"svg_path", svg_path}};
  return j;
}

Graph resolve_graph(const RunConfig& cfg) {
  if (cfg.catalog.empty() == cfg.graph_path.empty())
    throw Error(Errc::BadParams, "give exactly one of --catalog and --graph");
  return cfg.catalog.empty() ? load_graph(cfg.graph_path) : catalog(cfg.catalog);
}

CommandResult cmd_classify(const RunConfig& cfg) {
  const Graph g = resolve_graph(cfg);
  const GraphType t = classify(g);
  const IntMatrix a = gcm(g);
  CommandResult res;
  res.report = envelope(cfg);
  res.report["graph"] = graph_to_json(g);
  res.report["type"] = std::string(to_string(t.kind));
  res.report["gcm"] = matrix_to_json(a);
  res.report["determinant"] = determinant(a).str();
  res.report["adjugate"] = matrix_to_json(adjugate(a));
  if (t.kind == TypeKind::Affine) res.report["null_root"] = t.null_root;

  std::ostringstream os;
  os << g.name() << ": " << to_string(t.kind) << "\n"
     << "determinant " << determinant(a).str() << "\n";
  auto dump = [&](const char* label, const IntMatrix& m) {
    os << label << "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      os << " ";
      for (std::size_t c = 0; c < m.cols(); ++c) os << std::setw(5) << m(r, c);
      os << "\n";
    }
  };
  dump("gcm", a);
  dump("adjugate", adjugate(a));
  if (t.kind == TypeKind::Affine) {
    os << "null root";
    for (auto x : t.null_root) os << " " << x;
    os << "\n";
  }
  res.text = os.str();
  return res;
}

CommandResult cmd_region(const RunConfig& cfg) {
  const RootSystem rs(resolve_graph(cfg));
  const auto region = enumerate_region(rs, cfg.radius);
  CommandResult res;
  res.report = envelope(cfg);
  res.report["region"] = region_to_json(*region);
  const auto complete = std::count_if(region->flats().begin(), region->flats().end(),
                                      [](const Flat& f) { return f.complete; });
  std::ostringstream os;
  os << rs.graph().name() << " radius " << cfg.radius << ": " << region->size() << " alcoves, "
     << region->walls().size() << " walls (" << region->interior_wall_count() << " interior), "
     << region->flats().size() << " flats (" << complete << " complete)\n";
  res.text = os.str();
  return res;
}

CommandResult cmd_flow(const RunConfig& cfg) {
  const RootSystem rs(resolve_graph(cfg));
  const auto region = enumerate_region(rs, cfg.radius);
  const FlowAssignment flow = make_flow(cfg, region);
  const FlowValidation v = validate_flow(flow);
  CommandResult res;
  res.report = envelope(cfg);
  res.report["flow"] = flow_to_json(flow);
  res.report["validation"] = validation_to_json(*region, v);
  res.exit_code = v.valid ? kPass : kMathFailure;
  std::ostringstream os;
  os << "flow " << cfg.flow << " on " << rs.graph().name() << " radius " << cfg.radius << ": "
     << flow_to_json(flow).size() << " walls oriented, validation " << pass_word(v.valid) << "\n";
  res.text = os.str();
  return res;
}

CommandResult cmd_certify(const RunConfig& cfg) {
  const RootSystem rs(resolve_graph(cfg));
  const auto region = enumerate_region(rs, cfg.radius);
  const FlowAssignment flow = make_flow(cfg, region);

  CommandResult res;
  res.report = envelope(cfg);
  res.report["graph"] = graph_to_json(rs.graph());
  res.report["type"] = std::string(to_string(rs.type()->kind));
  res.report["region"] = {{"alcoves", region->size()},
                          {"walls", region->walls().size()},
                          {"interior_walls", region->interior_wall_count()},
                          {"flats", region->flats().size()}};
  Json checks = Json::object();
  std::ostringstream os;
  os << "certify " << rs.graph().name() << " radius " << cfg.radius << " flow " << cfg.flow << "\n";
  bool all = true;
  auto line = [&](const std::string& name, bool ok, const std::string& detail) {
    all = all && ok;
    os << "  " << std::left << std::setw(18) << name << pass_word(ok) << "  " << detail << "\n";
  };

  // Flow validation.
  const FlowValidation validation = validate_flow(flow);
  checks["flow_validation"] = validation_to_json(*region, validation);
  {
    std::ostringstream d;
    d << validation.reports.size() << " complete flats, " << validation.boundary_flats.size() << " boundary";
    for (const auto& r : validation.reports)
      if (!r.valid) {
        const Flat& f = region->flats()[r.flat];
        d << "; invalid flat at " << word_str(region->word(f.base)) << " pair (" << f.i << "," << f.j << ")";
        break;
      }
    line("flow_validation", validation.valid, d.str());
  }

  // Matsumoto compatibility on every element of the region.
  {
    Json m{{"pass", true}};
    std::size_t moves = 0;
    bool ok = true;
    try {
      for (std::size_t k = 0; k < region->size(); ++k) {
        const MatsumotoReport r = matsumoto_compatibility(flow, region->alcove(k));
        moves += r.moves;
        if (!r.compatible && ok) {
          ok = false;
          m["witness"] = {{"element", region->word(k)}, {"word", r.witness->first}, {"moved_to", r.witness->second}};
        }
      }
    } catch (const Error& e) {
      ok = false;
      m["error"] = e.what();
    }
    m["pass"] = ok;
    m["elements"] = region->size();
    m["moves"] = moves;
    checks["matsumoto"] = m;
    line("matsumoto", ok, std::to_string(region->size()) + " elements, " + std::to_string(moves) + " braid moves");
  }

  // Positivity of the heart classes.
  if (validation.valid) {
    const PositivityReport p = positivity_check(flow, cfg.samples, cfg.seed, cfg.tol);
    checks["positivity"] = positivity_to_json(*region, p);
    std::ostringstream d;
    d << cfg.samples << " samples/alcove, min pairing " << p.min_pairing;
    line("positivity", p.pass, d.str());
  } else {
    checks["positivity"] = {{"pass", false}, {"skipped", "flow is not valid"}};
    line("positivity", false, "skipped: flow is not valid");
  }

  // Wall vanishing on every wall.
  {
    Json failing = Json::array();
    double max_res = 0.0, min_other = std::numeric_limits<double>::infinity();
    bool ok = true;
    for (const auto& w : region->walls()) {
      try {
        const auto r = wall_vanishing_check(*region, w.base, w.gen, cfg.samples, cfg.seed, cfg.tol, cfg.nonzero_tol);
        max_res = std::max(max_res, r.max_residual);
        min_other = std::min(min_other, r.min_other);
        if (!r.pass) {
          ok = false;
          failing.push_back(wall_report_to_json(*region, r));
        }
      } catch (const Error& e) {
        ok = false;
        failing.push_back({{"alcove", region->word(w.base)}, {"gen", w.gen}, {"error", e.what()}});
      }
    }
    checks["wall_vanishing"] = {{"pass", ok},
                                {"walls", region->walls().size()},
                                {"max_residual", max_res},
                                {"min_other", min_other},
                                {"failing", failing}};
    std::ostringstream d;
    d << region->walls().size() << " walls, max residual " << max_res << ", min other " << min_other;
    line("wall_vanishing", ok, d.str());
  }

  // Monodromy of short loops.
  {
    Json failing = Json::array();
    std::size_t loops = 0, max_states = 0;
    bool ok = true;
    std::vector<std::size_t> bases;
    if (cfg.loop_base == "identity")
      bases.push_back(0);
    else
      for (std::size_t k = 0; k < region->size(); ++k) bases.push_back(k);
    for (std::size_t b : bases) {
      for (const auto& loop : enumerate_loops(*region, b, cfg.loop_length)) {
        ++loops;
        try {
          const auto r = monodromy_reduce(flow, b, loop, cfg.search_budget);
          max_states = std::max(max_states, r.states);
          if (!r.word.empty()) {
            ok = false;
            if (failing.size() < 20)
              failing.push_back({{"base", region->word(b)}, {"loop", loop}, {"reduced", signed_word_to_json(r.word)}});
          }
        } catch (const Error& e) {
          ok = false;
          if (failing.size() < 20) failing.push_back({{"base", region->word(b)}, {"loop", loop}, {"error", e.what()}});
        }
      }
    }
    checks["monodromy"] = {{"pass", ok},
                           {"loops", loops},
                           {"max_length", cfg.loop_length},
                           {"max_states", max_states},
                           {"failing", failing}};
    line("monodromy", ok, std::to_string(loops) + " loops of length <= " + std::to_string(cfg.loop_length));
  }

  res.report["checks"] = checks;
  res.report["pass"] = all;
  res.exit_code = all ? kPass : kMathFailure;
  os << (all ? "certificate: PASS\n" : "certificate: FAIL\n");
  res.text = os.str();
  return res;
}

CommandResult cmd_braid_table(const RunConfig& cfg) {
  std::vector<FlatType> types;
  if (cfg.braid_type == "A1A1" || cfg.braid_type == "all") types.push_back(FlatType::A1A1);
  if (cfg.braid_type == "A2" || cfg.braid_type == "all") types.push_back(FlatType::A2);
  if (types.empty()) throw Error(Errc::Parse, "braid type must be A1A1, A2 or all");

  CommandResult res;
  res.report = envelope(cfg);
  Json tables = Json::array();
  std::ostringstream os;
  bool ok = true;
  for (FlatType t : types) {
    const auto patterns = enumerate_sign_patterns(t);
    const std::size_t expected = t == FlatType::A1A1 ? 4 : 6;
    ok = ok && patterns.size() == expected;
    tables.push_back(sign_patterns_to_json(t, patterns));
    os << (t == FlatType::A1A1 ? "A1 x A1" : "A2") << ": " << patterns.size() << " of "
       << (1u << (2 * flat_m(t))) << " sign choices hold\n";
    for (const auto& p : patterns)
      os << "  " << std::left << std::setw(22) << to_string(lhs_word(p)) << "= " << std::setw(22)
         << to_string(rhs_word(p)) << to_string(p) << "\n";
  }
  res.report["tables"] = tables;
  res.exit_code = ok ? kPass : kMathFailure;
  res.text = os.str();
  return res;
}

CommandResult cmd_param_check(const RunConfig& cfg) {
  CommandResult res;
  res.report = envelope(cfg);
  std::ostringstream os;
  bool ok = true;
  std::mt19937_64 rng(cfg.seed);

  Json rank2 = Json::array();
  std::uniform_real_distribution<double> xs(-3.0, 3.0);
  for (double m : cfg.ms) {
    double worst = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) worst = std::max(worst, std::abs(rank2_residual(m, xs(rng))));
    const bool pass = worst < kRank2Tol;
    ok = ok && pass;
    rank2.push_back({{"m", m}, {"kronecker_constant", kronecker_constant(m)}, {"max_residual", worst}, {"pass", pass}});
    os << "m = " << m << ": kappa " << std::setprecision(15) << kronecker_constant(m) << ", max |Z1^2 + m Z1 Z2 + Z2^2 - 1| "
       << std::setprecision(3) << worst << "  " << pass_word(pass) << "\n";
  }
  res.report["rank2"] = rank2;

  if (!cfg.catalog.empty() || !cfg.graph_path.empty()) {
    const Graph g = resolve_graph(cfg);
    const IntMatrix a = gcm(g);
    std::vector<std::vector<double>> ad(a.rows(), std::vector<double>(a.cols()));
    for (std::size_t i = 0; i < a.rows(); ++i)
      for (std::size_t j = 0; j < a.cols(); ++j) ad[i][j] = static_cast<double>(a(i, j));
    std::vector<double> eig = jacobi_eigen(ad).values;
    std::sort(eig.begin(), eig.end(), [](double x, double y) { return x > y; });
    std::vector<double> lambdas;
    for (double e : eig) lambdas.push_back(std::abs(e));
    std::uniform_real_distribution<double> angle(-2.0, 2.0);
    double worst = 0.0;
    for (std::size_t t = 0; t < cfg.trials; ++t) {
      std::vector<double> sigma(lambdas.size() - 1);
      for (auto& s : sigma) s = angle(rng);
      worst = std::max(worst, std::abs(hyperboloid_residual(lambdas, hyperboloid_param(lambdas, sigma))));
    }
    const bool pass = worst < kHyperboloidTol;
    ok = ok && pass;
    res.report["hyperboloid"] = {{"graph", g.name()}, {"eigenvalues", eig}, {"max_residual", worst}, {"pass", pass}};
    os << g.name() << " hyperboloid: max residual " << worst << "  " << pass_word(pass) << "\n";
  }
  res.report["pass"] = ok;
  res.exit_code = ok ? kPass : kMathFailure;
  res.text = os.str();
  return res;
}

CommandResult cmd_render(const RunConfig& cfg) {
  if (cfg.svg_path.empty()) throw Error(Errc::BadParams, "render needs --svg");
  const RootSystem rs(resolve_graph(cfg));
  std::string kind = cfg.kind;
  if (kind.empty()) {
    if (rs.rank() == 2)
      kind = "rank2";
    else if (rs.type() && rs.type()->kind == TypeKind::Affine)
      kind = "affine";
    else
      kind = "hyperbolic";
  }
  CommandResult res;
  res.report = envelope(cfg);
  res.report["kind"] = kind;
  Figure fig;
  if (kind == "rank2") {
    fig = render_rank2(rs);
    res.report["dots"] = fig.dots.size();
    res.report["cone_slopes"] = fig.cone_slopes;
  } else if (kind == "affine" || kind == "hyperbolic") {
    const auto region = enumerate_region(rs, cfg.radius);
    std::optional<FlowAssignment> flow;
    if (cfg.flow != "none") flow.emplace(make_flow(cfg, region));
    const FlowAssignment* fp = flow ? &*flow : nullptr;
    fig = kind == "affine" ? render_affine_rank3(*region, fp) : render_hyperbolic_rank3(*region, fp);
    res.report["alcoves"] = region->size();
    res.report["polygons"] = fig.polygons.size();
    res.report["walls"] = fig.walls.size();
    res.report["geodesics"] = fig.geodesics.size();
    res.report["arrows"] = fig.arrows.size();
    if (kind == "hyperbolic") {
      std::size_t crossings = 0;
      for (std::size_t a = 0; a < fig.geodesics.size(); ++a)
        for (std::size_t b = a + 1; b < fig.geodesics.size(); ++b)
          crossings += geodesics_intersect(fig.geodesics[a], fig.geodesics[b]) ? 1 : 0;
      res.report["interior_crossings"] = crossings;
    }
  } else {
    throw Error(Errc::Parse, "render kind must be rank2, affine or hyperbolic");
  }
  fig.svg.save(cfg.svg_path);
  res.text = "wrote " + cfg.svg_path + " (" + kind + ", " + std::to_string(fig.svg.elements().size()) + " elements)\n";
  return res;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Coxeter arrangements, real flows and central charges"};
  app.require_subcommand(1);
  RunConfig cfg;
  bool print_json = false;

  auto graph_opts = [&](CLI::App* sub) {
    sub->add_option("--catalog", cfg.catalog, "catalog graph, e.g. A_tilde:2 or K:3");
    sub->add_option("--graph", cfg.graph_path, "graph JSON file");
  };
  auto common = [&](CLI::App* sub) {
    sub->add_option("--json", cfg.json_path, "write the JSON report here");
    sub->add_flag("--print-json", print_json, "print the JSON report instead of the summary");
  };

  auto* classify_cmd = app.add_subcommand("classify", "type, GCM, determinant and adjugate");
  graph_opts(classify_cmd);
  common(classify_cmd);

  auto* region_cmd = app.add_subcommand("region", "enumerate the alcoves of a ball");
  graph_opts(region_cmd);
  common(region_cmd);
  region_cmd->add_option("--radius", cfg.radius, "maximal alcove length")->check(CLI::NonNegativeNumber);

  auto* flow_cmd = app.add_subcommand("flow", "build a flow and export it");
  graph_opts(flow_cmd);
  common(flow_cmd);
  flow_cmd->add_option("--radius", cfg.radius, "maximal alcove length")->check(CLI::NonNegativeNumber);
  flow_cmd->add_option("--flow", cfg.flow, "bruhat | random:<seed> | file:<path>");

  auto* certify_cmd = app.add_subcommand("certify", "check a flow and its central charge");
  graph_opts(certify_cmd);
  common(certify_cmd);
  certify_cmd->add_option("--radius", cfg.radius, "maximal alcove length")->check(CLI::NonNegativeNumber);
  certify_cmd->add_option("--flow", cfg.flow, "bruhat | random:<seed> | file:<path>");
  certify_cmd->add_option("--samples", cfg.samples, "sample points per alcove")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--seed", cfg.seed, "sampling seed");
  certify_cmd->add_option("--tol", cfg.tol, "wall residual tolerance")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--nonzero-tol", cfg.nonzero_tol, "smallest pairing counted as positive")->check(CLI::PositiveNumber);
  certify_cmd->add_option("--loop-length", cfg.loop_length, "longest closed loop checked")->check(CLI::NonNegativeNumber);
  certify_cmd->add_option("--loop-base", cfg.loop_base, "base points of the loops")->check(CLI::IsMember({"all", "identity"}));
  certify_cmd->add_option("--search-budget", cfg.search_budget, "states per monodromy search")->check(CLI::PositiveNumber);

  auto* braid_cmd = app.add_subcommand("braid-table", "sign patterns of rank-2 braid relations");
  common(braid_cmd);
  braid_cmd->add_option("--type", cfg.braid_type, "flat type")->check(CLI::IsMember({"A1A1", "A2", "all"}));

  auto* param_cmd = app.add_subcommand("param-check", "rank-2 charge and hyperboloid identities");
  graph_opts(param_cmd);
  common(param_cmd);
  param_cmd->add_option("--m", cfg.ms, "values of m >= 2");
  param_cmd->add_option("--trials", cfg.trials, "random points per identity")->check(CLI::PositiveNumber);
  param_cmd->add_option("--seed", cfg.seed, "sampling seed");

  auto* render_cmd = app.add_subcommand("render", "SVG picture of a rank-2 or rank-3 level");
  graph_opts(render_cmd);
  common(render_cmd);
  render_cmd->add_option("--kind", cfg.kind, "picture type")->check(CLI::IsMember({"rank2", "affine", "hyperbolic"}));
  render_cmd->add_option("--radius", cfg.radius, "maximal alcove length")->check(CLI::NonNegativeNumber);
  render_cmd->add_option("--flow", cfg.flow, "bruhat | random:<seed> | file:<path> | none");
  render_cmd->add_option("--svg", cfg.svg_path, "output SVG path")->required();

  std::vector<const char*> argv{"rvs"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  const auto* sub = app.get_subcommands().front();
  cfg.command = sub->get_name();
  try {
    CommandResult res;
    if (cfg.command == "classify") res = cmd_classify(cfg);
    else if (cfg.command == "region") res = cmd_region(cfg);
    else if (cfg.command == "flow") res = cmd_flow(cfg);
    else if (cfg.command == "certify") res = cmd_certify(cfg);
    else if (cfg.command == "braid-table") res = cmd_braid_table(cfg);
    else if (cfg.command == "param-check") res = cmd_param_check(cfg);
    else res = cmd_render(cfg);
    res.report["exit_code"] = res.exit_code;
    if (!cfg.json_path.empty()) write_json_file(cfg.json_path, res.report);
    if (print_json)
      out << res.report.dump(2) << "\n";
    else
      out << res.text;
    return res.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_usage_error(e.code()) ? kUsage : kMathFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kMathFailure;
  }
}

}  // namespace rvs::cli
