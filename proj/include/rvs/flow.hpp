#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rvs/arrangement.hpp"
#include "rvs/braid.hpp"

namespace rvs {

/// Position of the neighbour across a wall relative to the wall's base alcove.
enum class Direction { Above, Below };

inline Direction opposite(Direction d) noexcept { return d == Direction::Above ? Direction::Below : Direction::Above; }

/// Orientation of the walls of a region, indexed like Region::walls().
class FlowAssignment {
 public:
  FlowAssignment(std::shared_ptr<const Region> region, std::vector<std::optional<Direction>> dirs);

  const Region& region() const noexcept { return *region_; }
  const std::shared_ptr<const Region>& region_ptr() const noexcept { return region_; }
  const std::vector<std::optional<Direction>>& directions() const noexcept { return dirs_; }
  std::optional<Direction> direction(std::size_t wall) const { return dirs_.at(wall); }

  /// Whether the alcove across `gen` from alcove k is above it.
  bool above(std::size_t k, int gen) const;

  bool total_on_interior() const;

 private:
  std::shared_ptr<const Region> region_;
  std::vector<std::optional<Direction>> dirs_;
};

/// Longer side above; boundary walls included.
FlowAssignment bruhat_flow(std::shared_ptr<const Region> region);

/// Independent fair coin per wall from a seeded mt19937_64.
FlowAssignment random_flow(std::shared_ptr<const Region> region, std::uint64_t seed);

struct FlatReport {
  std::size_t flat;  // index into Region::flats()
  std::vector<int> sources;
  std::vector<int> sinks;
  bool valid;
  bool antipodal;
};

struct FlowValidation {
  std::vector<FlatReport> reports;          // complete flats
  std::vector<std::size_t> boundary_flats;  // incomplete, not judged
  bool valid = true;
};

/// Source/sink test on every complete flat. Throws IncompleteAssignment
/// when an interior wall has no direction.
FlowValidation validate_flow(const FlowAssignment& flow);

/// Source/sink positions of an orientation of a 2m-cycle. `up[k]` says
/// whether position k+1 is above position k.
FlatReport classify_cycle(const std::vector<bool>& up);

struct SignedLetter {
  int gen;
  int sign;

  friend bool operator==(const SignedLetter&, const SignedLetter&) = default;
  friend auto operator<=>(const SignedLetter&, const SignedLetter&) = default;
};

using SignedWord = std::vector<SignedLetter>;

SignedWord free_reduce(const SignedWord& w);
SignedWord inverse(const SignedWord& w);
std::string to_string(const SignedWord& w);

/// Crossing (alcove index, generator).
using PathStep = std::pair<std::size_t, int>;

/// Upward crossings give sign -1, downward +1. Throws BrokenPath when a step
/// leaves the region or does not start where the previous one ended.
SignedWord signed_word(const FlowAssignment& flow, const std::vector<PathStep>& path);
SignedWord signed_word(const FlowAssignment& flow, std::size_t start, const Word& crossings);

/// Alcove reached from `start` after the crossings.
std::size_t path_end(const Region& region, std::size_t start, const Word& crossings);

struct MatsumotoReport {
  bool compatible = true;
  std::size_t words = 0;
  std::size_t moves = 0;
  /// First failing move, when any.
  std::optional<std::pair<Word, Word>> witness;
};

/// Checks every braid move between reduced words of w against the braid
/// group of the pivoting flat.
MatsumotoReport matsumoto_compatibility(const FlowAssignment& flow, const WeylElt& w,
                                        std::size_t cap = kDefaultPathCap);

inline constexpr std::size_t kDefaultSearchBudget = 100'000;

struct MonodromyResult {
  SignedWord word;
  std::size_t states = 0;
};

/// Best-first search over free cancellation and flat rewrites licensed by
/// the braid tables. Returns the shortest word reached.
MonodromyResult monodromy_reduce(const RootSystem& rs, const SignedWord& word,
                                 std::size_t budget = kDefaultSearchBudget);
MonodromyResult monodromy_reduce(const FlowAssignment& flow, std::size_t start, const Word& loop,
                                 std::size_t budget = kDefaultSearchBudget);

/// Non-backtracking closed walks from `start` of length 1..max_len inside
/// the region, as crossing sequences.
std::vector<Word> enumerate_loops(const Region& region, std::size_t start, int max_len);

/// Classes {w alpha_i} of the simples of the heart at w fA.
std::vector<RootVec> heart_descriptor(const RootSystem& rs, const WeylElt& w);
std::vector<RootVec> heart_descriptor(const FlowAssignment& flow, std::size_t alcove);

/// Same classes accumulated along a crossing path from fA.
std::vector<RootVec> heart_descriptor_along(const RootSystem& rs, const Word& crossings);

}  // namespace rvs
