#include "rvs/flow.hpp"

#include <algorithm>
#include <random>

namespace rvs {

FlowAssignment::FlowAssignment(std::shared_ptr<const Region> region, std::vector<std::optional<Direction>> dirs)
    : region_(std::move(region)), dirs_(std::move(dirs)) {
  if (!region_) throw Error(Errc::BadParams, "flow needs a region");
  if (dirs_.size() != region_->walls().size())
    throw Error(Errc::BadParams, "flow has " + std::to_string(dirs_.size()) + " directions for " +
                                     std::to_string(region_->walls().size()) + " walls");
}

bool FlowAssignment::above(std::size_t k, int gen) const {
  const std::size_t wi = region_->wall_index(k, gen);
  const auto d = dirs_[wi];
  if (!d)
    throw Error(Errc::IncompleteAssignment,
                "no direction on wall " + std::to_string(gen) + " of alcove " + std::to_string(k));
  const bool base_side = region_->walls()[wi].base == k;
  return base_side ? *d == Direction::Above : *d == Direction::Below;
}

bool FlowAssignment::total_on_interior() const {
  const auto& walls = region_->walls();
  for (std::size_t w = 0; w < walls.size(); ++w)
    if (walls[w].interior() && !dirs_[w]) return false;
  return true;
}

FlowAssignment bruhat_flow(std::shared_ptr<const Region> region) {
  const RootSystem& rs = region->root_system();
  std::vector<std::optional<Direction>> dirs;
  for (const auto& w : region->walls())
    dirs.push_back(rs.is_right_descent(region->alcove(w.base), w.gen) ? Direction::Below : Direction::Above);
  return FlowAssignment(std::move(region), std::move(dirs));
}

FlowAssignment random_flow(std::shared_ptr<const Region> region, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<std::optional<Direction>> dirs;
  for (std::size_t w = 0; w < region->walls().size(); ++w)
    dirs.push_back(coin(rng) ? Direction::Above : Direction::Below);
  return FlowAssignment(std::move(region), std::move(dirs));
}

FlatReport classify_cycle(const std::vector<bool>& up) {
  const int len = static_cast<int>(up.size());
  FlatReport r{0, {}, {}, false, false};
  for (int k = 0; k < len; ++k) {
    const bool next_above = up[static_cast<std::size_t>(k)];
    const bool prev_above = !up[static_cast<std::size_t>((k + len - 1) % len)];
    if (next_above && prev_above) r.sources.push_back(k);
    if (!next_above && !prev_above) r.sinks.push_back(k);
  }
  if (r.sources.size() == 1 && r.sinks.size() == 1) {
    const int gap = ((r.sinks[0] - r.sources[0]) % len + len) % len;
    r.antipodal = gap == len / 2;
  }
  r.valid = r.sources.size() == 1 && r.sinks.size() == 1 && r.antipodal;
  return r;
}

FlowValidation validate_flow(const FlowAssignment& flow) {
  const Region& region = flow.region();
  if (!flow.total_on_interior()) throw Error(Errc::IncompleteAssignment, "flow leaves interior walls unassigned");
  FlowValidation out;
  const auto& flats = region.flats();
  for (std::size_t f = 0; f < flats.size(); ++f) {
    if (!flats[f].complete) {
      out.boundary_flats.push_back(f);
      continue;
    }
    const auto cycle = region.flat_cycle_indices(flats[f]);
    std::vector<bool> up;
    for (std::size_t k = 0; k < cycle.size(); ++k) up.push_back(flow.above(*cycle[k], k % 2 == 0 ? flats[f].i : flats[f].j));
    FlatReport r = classify_cycle(up);
    r.flat = f;
    out.valid = out.valid && r.valid;
    out.reports.push_back(std::move(r));
  }
  return out;
}

SignedWord free_reduce(const SignedWord& w) {
  SignedWord out;
  for (const auto& l : w) {
    if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

SignedWord inverse(const SignedWord& w) {
  SignedWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.sign = -l.sign;
  return out;
}

std::string to_string(const SignedWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const auto& l : w) {
    if (!out.empty()) out += ' ';
    out += std::to_string(l.gen) + (l.sign > 0 ? "+" : "-");
  }
  return out;
}

std::size_t path_end(const Region& region, std::size_t start, const Word& crossings) {
  std::size_t cur = start;
  for (int g : crossings) {
    const auto nb = region.neighbor(cur, g);
    if (!nb) throw Error(Errc::BrokenPath, "path leaves the region at alcove " + std::to_string(cur));
    cur = *nb;
  }
  return cur;
}

SignedWord signed_word(const FlowAssignment& flow, const std::vector<PathStep>& path) {
  const Region& region = flow.region();
  SignedWord out;
  std::optional<std::size_t> expected;
  for (const auto& [k, g] : path) {
    if (k >= region.size()) throw Error(Errc::BrokenPath, "alcove index out of range");
    if (expected && *expected != k) throw Error(Errc::BrokenPath, "path is not contiguous at alcove " + std::to_string(k));
    const auto nb = region.neighbor(k, g);
    if (!nb) throw Error(Errc::BrokenPath, "path leaves the region at alcove " + std::to_string(k));
    out.push_back({g, flow.above(k, g) ? -1 : 1});
    expected = *nb;
  }
  return out;
}

SignedWord signed_word(const FlowAssignment& flow, std::size_t start, const Word& crossings) {
  std::vector<PathStep> path;
  std::size_t cur = start;
  for (int g : crossings) {
    path.emplace_back(cur, g);
    const auto nb = flow.region().neighbor(cur, g);
    if (!nb) throw Error(Errc::BrokenPath, "path leaves the region at alcove " + std::to_string(cur));
    cur = *nb;
  }
  return signed_word(flow, path);
}

namespace {

BraidWord to_braid(const SignedWord& segment) {
  BraidWord out;
  const int first = segment.front().gen;
  for (const auto& l : segment) out.push_back({l.gen == first ? 1 : 2, l.sign});
  return out;
}

}  // namespace

MatsumotoReport matsumoto_compatibility(const FlowAssignment& flow, const WeylElt& w, std::size_t cap) {
  const Region& region = flow.region();
  const RootSystem& rs = region.root_system();
  const PathSet paths = all_reduced_paths(rs, rs.identity(), w, cap);
  if (paths.truncated) throw Error(Errc::TruncatedEnumeration, "more than " + std::to_string(cap) + " reduced words");
  const std::size_t origin = *region.index_of(rs.identity());

  MatsumotoReport report;
  report.words = paths.words.size();
  for (const auto& u : paths.words) {
    const SignedWord su = signed_word(flow, origin, u);
    for (const auto& v : rs.matsumoto_neighbors(u)) {
      if (!(u < v)) continue;
      ++report.moves;
      const SignedWord sv = signed_word(flow, origin, v);
      std::size_t p = 0;
      while (u[p] == v[p]) ++p;
      const int m = *rs.m(u[p], u[p + 1]);
      bool ok = std::equal(su.begin(), su.begin() + static_cast<std::ptrdiff_t>(p), sv.begin()) &&
                std::equal(su.begin() + static_cast<std::ptrdiff_t>(p + m), su.end(),
                           sv.begin() + static_cast<std::ptrdiff_t>(p + m));
      if (ok) {
        const SignedWord a(su.begin() + static_cast<std::ptrdiff_t>(p), su.begin() + static_cast<std::ptrdiff_t>(p + m));
        const SignedWord b(sv.begin() + static_cast<std::ptrdiff_t>(p), sv.begin() + static_cast<std::ptrdiff_t>(p + m));
        // Both segments are relabelled from their own first letter; the
        // swap of generators is an automorphism of either group.
        BraidWord lhs = to_braid(a);
        BraidWord rhs = to_braid(b);
        for (auto& l : rhs) l.gen = 3 - l.gen;
        ok = equal_braid(m == 2 ? FlatType::A1A1 : FlatType::A2, lhs, rhs);
      }
      if (!ok && report.compatible) {
        report.compatible = false;
        report.witness = std::make_pair(u, v);
      }
    }
  }
  return report;
}

std::vector<Word> enumerate_loops(const Region& region, std::size_t start, int max_len) {
  std::vector<Word> out;
  Word path;
  const int n = static_cast<int>(region.root_system().rank());
  auto dfs = [&](auto&& self, std::size_t cur) -> void {
    if (!path.empty() && cur == start) {
      out.push_back(path);
      return;
    }
    if (static_cast<int>(path.size()) >= max_len) return;
    for (int g = 0; g < n; ++g) {
      if (!path.empty() && path.back() == g) continue;
      const auto nb = region.neighbor(cur, g);
      if (!nb) continue;
      path.push_back(g);
      self(self, *nb);
      path.pop_back();
    }
  };
  dfs(dfs, start);
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<RootVec> heart_descriptor(const RootSystem& rs, const WeylElt& w) {
  std::vector<RootVec> out;
  for (std::size_t i = 0; i < rs.rank(); ++i) out.push_back(w.image_of_simple(static_cast<int>(i)));
  return out;
}

std::vector<RootVec> heart_descriptor(const FlowAssignment& flow, std::size_t alcove) {
  return heart_descriptor(flow.region().root_system(), flow.region().alcove(alcove));
}

std::vector<RootVec> heart_descriptor_along(const RootSystem& rs, const Word& crossings) {
  WeylElt w = rs.identity();
  for (int g : crossings) w = rs.right_multiply(w, g);
  return heart_descriptor(rs, w);
}

}  // namespace rvs
