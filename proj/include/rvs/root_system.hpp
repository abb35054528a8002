#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "rvs/graph.hpp"
#include "rvs/matrix.hpp"

namespace rvs {

/// Element of the root lattice in the simple-root basis.
struct RootVec {
  std::vector<std::int64_t> coords;

  std::size_t rank() const noexcept { return coords.size(); }
  bool is_zero() const noexcept;
  bool is_positive() const noexcept;  // nonzero, all coords >= 0
  bool is_negative() const noexcept;
  RootVec operator-() const;

  friend bool operator==(const RootVec&, const RootVec&) = default;
  friend auto operator<=>(const RootVec&, const RootVec&) = default;
};

/// Point of the real dual space in the dual basis.
struct ThetaVec {
  std::vector<double> coords;

  std::size_t rank() const noexcept { return coords.size(); }
};

double pairing(const ThetaVec& theta, const RootVec& v);

/// Generator indices, read left to right as the product s_{w[0]} s_{w[1]} ...
using Word = std::vector<int>;

RootVec simple_root(std::size_t rank, int i);

/// Weyl group element as the integer matrix of its action on the root
/// lattice (column i is the image of alpha_i). The inverse is carried along
/// so the contragredient action needs no inversion.
class WeylElt {
 public:
  WeylElt() = default;
  static WeylElt identity(std::size_t rank);

  std::size_t rank() const noexcept { return mat_.rows(); }
  const IntMatrix& matrix() const noexcept { return mat_; }
  const IntMatrix& inverse_matrix() const noexcept { return inv_; }
  bool is_identity() const;

  WeylElt inverse() const { return WeylElt(inv_, mat_); }
  RootVec image_of_simple(int i) const;

  friend WeylElt operator*(const WeylElt& a, const WeylElt& b);
  friend bool operator==(const WeylElt& a, const WeylElt& b) { return a.mat_ == b.mat_; }

 private:
  friend class RootSystem;
  WeylElt(IntMatrix mat, IntMatrix inv) : mat_(std::move(mat)), inv_(std::move(inv)) {}

  IntMatrix mat_;
  IntMatrix inv_;
};

struct WeylEltHash {
  std::size_t operator()(const WeylElt& w) const noexcept { return w.matrix().hash(); }
};

RootVec apply(const WeylElt& w, const RootVec& v);

/// Contragredient action (w^{-1})^T theta, preserving the pairing.
ThetaVec dual_apply(const WeylElt& w, const ThetaVec& theta);

/// Coxeter exponent m_ij; nullopt stands for infinity.
using CoxeterOrder = std::optional<int>;

/// Root datum of a graph: bilinear form, simple reflections and the
/// descent-based algorithms on the Weyl group.
class RootSystem {
 public:
  explicit RootSystem(Graph graph);

  const Graph& graph() const noexcept { return graph_; }
  std::size_t rank() const noexcept { return graph_.rank(); }
  const IntMatrix& gcm() const noexcept { return gcm_; }
  /// Classification, when the graph is connected.
  const std::optional<GraphType>& type() const noexcept { return type_; }

  std::int64_t bilinear_form(const RootVec& u, const RootVec& v) const;

  WeylElt identity() const { return WeylElt::identity(rank()); }
  const WeylElt& simple_reflection(int i) const;
  WeylElt element(std::span<const int> word) const;
  /// w * s_i in O(n^2).
  WeylElt right_multiply(const WeylElt& w, int i) const;

  bool is_right_descent(const WeylElt& w, int i) const;
  std::vector<int> right_descents(const WeylElt& w) const;
  int length(const WeylElt& w) const;
  bool is_reduced(std::span<const int> word) const;
  /// Peels the smallest right descent until the identity is reached.
  Word canonical_word(const WeylElt& w) const;

  CoxeterOrder m(int i, int j) const;
  bool bruhat_covers(const WeylElt& w, int i) const;
  std::vector<Word> matsumoto_neighbors(std::span<const int> word) const;

  /// {w(alpha_i) : l(w) <= radius} restricted to positive roots, sorted.
  std::vector<RootVec> positive_real_roots(int radius) const;

  double tits_cone_quadratic(const ThetaVec& theta) const;
  const IntMatrix& adjugate_form() const noexcept { return adj_; }
  RootVec minimal_imaginary_root() const;

  std::int64_t ext_dim(int i, int j, int degree) const;
  std::int64_t euler_form(int i, int j) const;

  /// Upper bound on descent chains, guarding runaway inputs.
  int max_length() const noexcept { return max_length_; }
  void set_max_length(int limit) noexcept { max_length_ = limit; }

  void require_loop_free(int i) const;
  void check_vertex(int i) const;

 private:
  Graph graph_;
  IntMatrix gcm_;
  IntMatrix adj_;
  std::optional<GraphType> type_;
  std::vector<WeylElt> reflections_;
  int max_length_ = 1'000'000;
};

}  // namespace rvs
