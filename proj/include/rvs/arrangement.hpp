#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "rvs/root_system.hpp"

namespace rvs {

/// Wall between alcove `base` and its neighbour across `gen`. The base is
/// the side that sorts first; boundary walls keep the inside alcove as base
/// and have no neighbour index.
struct Wall {
  std::size_t base;
  int gen;
  std::optional<std::size_t> neighbor;
  RootVec root;

  bool interior() const noexcept { return neighbor.has_value(); }
};

/// Codimension-two flat: the coset u W_{ij} with u its minimal representative.
struct Flat {
  std::size_t base;
  int i;
  int j;
  int m;
  bool complete;
};

/// Alcoves w fA with l(w) <= radius, sorted by (length, canonical word).
class Region {
 public:
  const RootSystem& root_system() const noexcept { return rs_; }
  int radius() const noexcept { return radius_; }

  std::size_t size() const noexcept { return alcoves_.size(); }
  const WeylElt& alcove(std::size_t k) const { return alcoves_.at(k); }
  const Word& word(std::size_t k) const { return words_.at(k); }
  int length(std::size_t k) const { return words_.at(k).size(); }
  std::optional<std::size_t> index_of(const WeylElt& w) const;

  /// Index of the alcove across wall `gen` of alcove k, if it lies in the region.
  std::optional<std::size_t> neighbor(std::size_t k, int gen) const;

  const std::vector<Wall>& walls() const noexcept { return walls_; }
  std::size_t wall_index(std::size_t k, int gen) const;
  const Wall& wall(std::size_t k, int gen) const { return walls_[wall_index(k, gen)]; }
  std::size_t interior_wall_count() const;

  const std::vector<Flat>& flats() const noexcept { return flats_; }

  /// The 2m alcoves u, u s_i, u s_i s_j, ... of a flat. Members outside the
  /// region are nullopt.
  std::vector<std::optional<std::size_t>> flat_cycle_indices(const Flat& f) const;

  friend std::shared_ptr<const Region> enumerate_region(const RootSystem& rs, int radius);

 private:
  Region(RootSystem rs, int radius) : rs_(std::move(rs)), radius_(radius) {}

  RootSystem rs_;
  int radius_;
  std::vector<WeylElt> alcoves_;
  std::vector<Word> words_;
  std::unordered_map<WeylElt, std::size_t, WeylEltHash> index_;
  std::vector<std::vector<std::optional<std::size_t>>> adjacency_;
  std::vector<std::vector<std::size_t>> wall_of_;
  std::vector<Wall> walls_;
  std::vector<Flat> flats_;
};

/// BFS ball of the given radius. Requires a connected loop-free graph of
/// affine or hyperbolic (or wild) type.
std::shared_ptr<const Region> enumerate_region(const RootSystem& rs, int radius);

/// w s_i.
WeylElt neighbor(const RootSystem& rs, const WeylElt& a, int i);

/// Positive form of w(alpha_i), the root of the wall of w fA across i.
RootVec wall_root(const RootSystem& rs, const WeylElt& w, int i);

/// The 2m elements of the flat cycle, starting at the base.
std::vector<WeylElt> flat_cycle(const RootSystem& rs, const WeylElt& base, int i, int j);

/// Minimal representative of w W_{ij}.
WeylElt coset_minimum(const RootSystem& rs, const WeylElt& w, int i, int j);

/// Canonical reduced crossing sequence from a to b.
Word reduced_path(const RootSystem& rs, const WeylElt& a, const WeylElt& b);

struct PathSet {
  std::vector<Word> words;  // sorted
  bool truncated = false;
};

inline constexpr std::size_t kDefaultPathCap = 10'000;

/// Every reduced word of a^{-1} b, up to `cap` of them.
PathSet all_reduced_paths(const RootSystem& rs, const WeylElt& a, const WeylElt& b,
                          std::size_t cap = kDefaultPathCap);

}  // namespace rvs
