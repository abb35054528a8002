#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rvs/matrix.hpp"

namespace rvs {

using BigInt = boost::multiprecision::cpp_int;

/// Hard cap on the rank of user-supplied graphs.
inline constexpr std::size_t kMaxRank = 16;

/// Loop-permitting multigraph on vertices 0..n-1. Edge multiplicities are
/// symmetric with zero diagonal; loops are counted separately per vertex.
class Graph {
 public:
  struct Edge {
    int i;
    int j;
    std::int64_t mult;
  };

  Graph(std::string name, IntMatrix edge_mult, std::vector<std::int64_t> loops = {});

  static Graph from_edges(std::string name, std::size_t n, std::span<const Edge> edges,
                          std::vector<std::int64_t> loops = {});

  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return edge_mult_.rows(); }
  const IntMatrix& edge_mult() const noexcept { return edge_mult_; }
  std::int64_t edges(int i, int j) const { return edge_mult_(i, j); }
  const std::vector<std::int64_t>& loops() const noexcept { return loops_; }
  std::int64_t loops(int i) const { return loops_[i]; }

  bool loop_free() const noexcept;
  bool connected() const;

  /// Full subgraph on the given vertices, relabelled 0..k-1 in the given order.
  Graph induced(std::span<const int> vertices) const;

  /// Connected components of the full subgraph on `vertices`.
  std::vector<std::vector<int>> components(std::span<const int> vertices) const;

  /// Edge list with i < j, in lexicographic order.
  std::vector<Edge> edge_list() const;

 private:
  std::string name_;
  IntMatrix edge_mult_;
  std::vector<std::int64_t> loops_;
};

/// 2I - Adj, with diagonal 2 - 2*loops.
IntMatrix gcm(const Graph& graph);

BigInt determinant(const IntMatrix& m);
IntMatrix adjugate(const IntMatrix& m);

struct Definiteness {
  enum class Kind { PositiveDefinite, PositiveSemidefinite, Indefinite };
  Kind kind;
  /// Primitive integer basis of the kernel; filled for PositiveSemidefinite only.
  std::vector<std::vector<std::int64_t>> kernel;
};

/// Exact inertia test by symmetric-pivoted rational LDL^T.
Definiteness definiteness(const IntMatrix& symmetric);

/// Primitive integer basis of the rational nullspace, each vector with its
/// first nonzero entry positive.
std::vector<std::vector<std::int64_t>> integer_kernel(const IntMatrix& m);

enum class TypeKind { Finite, Affine, Hyperbolic, IndefiniteNonHyperbolic };

std::string_view to_string(TypeKind kind) noexcept;

struct GraphType {
  TypeKind kind;
  /// Strictly positive primitive kernel generator (Affine only).
  std::vector<std::int64_t> null_root;
};

/// Finite / affine / hyperbolic / other classification of a connected graph.
GraphType classify(const Graph& graph);

/// Named graph builders. Overextended vertices come first.
///
///   A:n D:n E:n                finite ADE
///   A_tilde:n D_tilde:n E_tilde:n   extended ADE
///   A_hyp:n (1..7) D_hyp:n (4..8) E_hyp:n (6..8)   overextended
///   A_hyp:1,1  A_hyp:2,1  A_hyp:2,2  A_hyp:3,1  A_tilde:2,k (k=1..3)  Star:5
///   L:m   K:m   K:m,1   K:m,2
Graph catalog(std::string_view family, std::span<const int> params);

/// Parses `family:p1,p2,...`.
Graph catalog(std::string_view spec);

/// Every catalog specification string understood by `catalog`, for listings.
std::vector<std::string> catalog_families();

}  // namespace rvs
