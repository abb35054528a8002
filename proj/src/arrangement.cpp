#include "rvs/arrangement.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace rvs {

WeylElt neighbor(const RootSystem& rs, const WeylElt& a, int i) { return rs.right_multiply(a, i); }

RootVec wall_root(const RootSystem& rs, const WeylElt& w, int i) {
  rs.require_loop_free(i);
  RootVec r = w.image_of_simple(i);
  return r.is_negative() ? -r : r;
}

std::vector<WeylElt> flat_cycle(const RootSystem& rs, const WeylElt& base, int i, int j) {
  const CoxeterOrder m = rs.m(i, j);
  if (!m) throw Error(Errc::BadParams, "flat needs a finite m_ij");
  std::vector<WeylElt> out{base};
  for (int k = 1; k < 2 * *m; ++k) out.push_back(rs.right_multiply(out.back(), (k % 2 == 1) ? i : j));
  return out;
}

WeylElt coset_minimum(const RootSystem& rs, const WeylElt& w, int i, int j) {
  WeylElt cur = w;
  while (true) {
    if (rs.is_right_descent(cur, i))
      cur = rs.right_multiply(cur, i);
    else if (rs.is_right_descent(cur, j))
      cur = rs.right_multiply(cur, j);
    else
      return cur;
  }
}

Word reduced_path(const RootSystem& rs, const WeylElt& a, const WeylElt& b) {
  return rs.canonical_word(a.inverse() * b);
}

namespace {

void collect_words(const RootSystem& rs, const WeylElt& g, Word& suffix, std::size_t cap, PathSet& out) {
  if (out.truncated) return;
  const auto desc = rs.right_descents(g);
  if (desc.empty()) {
    if (out.words.size() >= cap) {
      out.truncated = true;
      return;
    }
    out.words.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : desc) {
    suffix.push_back(i);
    collect_words(rs, rs.right_multiply(g, i), suffix, cap, out);
    suffix.pop_back();
    if (out.truncated) return;
  }
}

}  // namespace

PathSet all_reduced_paths(const RootSystem& rs, const WeylElt& a, const WeylElt& b, std::size_t cap) {
  PathSet out;
  Word suffix;
  collect_words(rs, a.inverse() * b, suffix, cap, out);
  std::sort(out.words.begin(), out.words.end());
  return out;
}

std::optional<std::size_t> Region::index_of(const WeylElt& w) const {
  auto it = index_.find(w);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::optional<std::size_t> Region::neighbor(std::size_t k, int gen) const {
  rs_.check_vertex(gen);
  return adjacency_.at(k)[static_cast<std::size_t>(gen)];
}

std::size_t Region::wall_index(std::size_t k, int gen) const {
  rs_.check_vertex(gen);
  return wall_of_.at(k)[static_cast<std::size_t>(gen)];
}

std::size_t Region::interior_wall_count() const {
  return static_cast<std::size_t>(
      std::count_if(walls_.begin(), walls_.end(), [](const Wall& w) { return w.interior(); }));
}

std::vector<std::optional<std::size_t>> Region::flat_cycle_indices(const Flat& f) const {
  std::vector<std::optional<std::size_t>> out;
  for (const auto& w : flat_cycle(rs_, alcoves_.at(f.base), f.i, f.j)) out.push_back(index_of(w));
  return out;
}

std::shared_ptr<const Region> enumerate_region(const RootSystem& rs, int radius) {
  if (radius < 0) throw Error(Errc::BadParams, "radius must be non-negative");
  if (!rs.graph().loop_free()) throw Error(Errc::WrongType, "arrangements need a loop-free graph");
  if (!rs.type()) throw Error(Errc::WrongType, "arrangements need a connected graph");
  if (rs.type()->kind == TypeKind::Finite)
    throw Error(Errc::WrongType, "finite type has no alcove arrangement of this kind");

  const std::size_t n = rs.rank();
  std::vector<WeylElt> elems{rs.identity()};
  std::unordered_map<WeylElt, std::size_t, WeylEltHash> seen{{elems[0], 0}};
  std::size_t level_begin = 0;
  for (int len = 0; len < radius; ++len) {
    const std::size_t level_end = elems.size();
    for (std::size_t k = level_begin; k < level_end; ++k) {
      for (std::size_t i = 0; i < n; ++i) {
        if (rs.is_right_descent(elems[k], static_cast<int>(i))) continue;
        WeylElt next = rs.right_multiply(elems[k], static_cast<int>(i));
        if (seen.emplace(next, elems.size()).second) elems.push_back(std::move(next));
      }
    }
    level_begin = level_end;
  }

  std::vector<Word> words;
  words.reserve(elems.size());
  for (const auto& w : elems) words.push_back(rs.canonical_word(w));
  std::vector<std::size_t> order(elems.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (words[a].size() != words[b].size()) return words[a].size() < words[b].size();
    return words[a] < words[b];
  });

  std::shared_ptr<Region> region(new Region(rs, radius));
  Region& r = *region;
  for (std::size_t k : order) {
    r.index_.emplace(elems[k], r.alcoves_.size());
    r.alcoves_.push_back(std::move(elems[k]));
    r.words_.push_back(std::move(words[k]));
  }

  const std::size_t count = r.alcoves_.size();
  r.adjacency_.assign(count, std::vector<std::optional<std::size_t>>(n));
  r.wall_of_.assign(count, std::vector<std::size_t>(n));
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const int gi = static_cast<int>(i);
      const auto nb = r.index_of(rs.right_multiply(r.alcoves_[k], gi));
      r.adjacency_[k][i] = nb;
      if (nb && *nb < k) {
        r.wall_of_[k][i] = r.wall_of_[*nb][i];
        continue;
      }
      r.wall_of_[k][i] = r.walls_.size();
      r.walls_.push_back(Wall{k, gi, nb, wall_root(rs, r.alcoves_[k], gi)});
    }
  }

  for (std::size_t k = 0; k < count; ++k) {
    const auto desc = rs.right_descents(r.alcoves_[k]);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const int gi = static_cast<int>(i), gj = static_cast<int>(j);
        const CoxeterOrder m = rs.m(gi, gj);
        if (!m) continue;
        if (std::find(desc.begin(), desc.end(), gi) != desc.end()) continue;
        if (std::find(desc.begin(), desc.end(), gj) != desc.end()) continue;
        r.flats_.push_back(Flat{k, gi, gj, *m, r.length(k) + *m <= radius});
      }
    }
  }
  return region;
}

}  // namespace rvs
