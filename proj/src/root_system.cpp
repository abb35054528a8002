#include <algorithm>
#include <set>
#include <string>

#include "rvs/root_system.hpp"

namespace rvs {

bool RootVec::is_zero() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](auto x) { return x == 0; });
}

bool RootVec::is_positive() const noexcept {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](auto x) { return x >= 0; });
}

bool RootVec::is_negative() const noexcept {
  return !is_zero() && std::all_of(coords.begin(), coords.end(), [](auto x) { return x <= 0; });
}

RootVec RootVec::operator-() const {
  RootVec out = *this;
  for (auto& x : out.coords) x = checked::sub(0, x);
  return out;
}

double pairing(const ThetaVec& theta, const RootVec& v) {
  if (theta.rank() != v.rank()) throw Error(Errc::BadParams, "pairing rank mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < v.rank(); ++i) s += theta.coords[i] * static_cast<double>(v.coords[i]);
  return s;
}

RootVec simple_root(std::size_t rank, int i) {
  RootVec r{std::vector<std::int64_t>(rank, 0)};
  r.coords.at(static_cast<std::size_t>(i)) = 1;
  return r;
}

WeylElt WeylElt::identity(std::size_t rank) {
  return WeylElt(IntMatrix::identity(rank), IntMatrix::identity(rank));
}

bool WeylElt::is_identity() const { return mat_ == IntMatrix::identity(rank()); }

RootVec WeylElt::image_of_simple(int i) const { return RootVec{mat_.column(static_cast<std::size_t>(i))}; }

WeylElt operator*(const WeylElt& a, const WeylElt& b) { return WeylElt(a.mat_ * b.mat_, b.inv_ * a.inv_); }

RootVec apply(const WeylElt& w, const RootVec& v) { return RootVec{multiply(w.matrix(), v.coords)}; }

ThetaVec dual_apply(const WeylElt& w, const ThetaVec& theta) {
  const IntMatrix& inv = w.inverse_matrix();
  const std::size_t n = inv.rows();
  if (theta.rank() != n) throw Error(Errc::BadParams, "dual_apply rank mismatch");
  ThetaVec out{std::vector<double>(n, 0.0)};
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out.coords[r] += static_cast<double>(inv(c, r)) * theta.coords[c];
  return out;
}

RootSystem::RootSystem(Graph graph)
    : graph_(std::move(graph)), gcm_(rvs::gcm(graph_)), adj_(rvs::adjugate(gcm_)) {
  if (graph_.connected()) type_ = classify(graph_);
  const std::size_t n = rank();
  reflections_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    IntMatrix s = IntMatrix::identity(n);
    if (graph_.loops()[i] == 0) {
      for (std::size_t j = 0; j < n; ++j) s(i, j) = checked::sub(s(i, j), gcm_(i, j));
    }
    reflections_.push_back(WeylElt(s, s));
  }
}

void RootSystem::check_vertex(int i) const {
  if (i < 0 || static_cast<std::size_t>(i) >= rank())
    throw Error(Errc::BadParams, "vertex " + std::to_string(i) + " out of range");
}

void RootSystem::require_loop_free(int i) const {
  check_vertex(i);
  if (graph_.loops()[static_cast<std::size_t>(i)] != 0)
    throw Error(Errc::LoopedVertex, "vertex " + std::to_string(i) + " carries loops");
}

std::int64_t RootSystem::bilinear_form(const RootVec& u, const RootVec& v) const {
  if (u.rank() != rank() || v.rank() != rank()) throw Error(Errc::BadParams, "bilinear_form rank mismatch");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (u.coords[i] == 0) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      s = checked::add(s, checked::mul(u.coords[i], checked::mul(gcm_(i, j), v.coords[j])));
  }
  return s;
}

const WeylElt& RootSystem::simple_reflection(int i) const {
  require_loop_free(i);
  return reflections_[static_cast<std::size_t>(i)];
}

WeylElt RootSystem::element(std::span<const int> word) const {
  WeylElt w = identity();
  for (int i : word) w = right_multiply(w, i);
  return w;
}

WeylElt RootSystem::right_multiply(const WeylElt& w, int i) const {
  require_loop_free(i);
  const std::size_t n = rank();
  const auto ii = static_cast<std::size_t>(i);
  IntMatrix mat = w.mat_;
  IntMatrix inv = w.inv_;
  // Column j of w s_i is w(alpha_j) - A_ij w(alpha_i).
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t a = gcm_(ii, j);
    if (a == 0) continue;
    for (std::size_t r = 0; r < n; ++r) mat(r, j) = checked::sub(mat(r, j), checked::mul(a, w.mat_(r, ii)));
  }
  // Row i of s_i w^{-1} is row_i - sum_k A_ik row_k.
  for (std::size_t c = 0; c < n; ++c) {
    std::int64_t acc = w.inv_(ii, c);
    for (std::size_t k = 0; k < n; ++k) acc = checked::sub(acc, checked::mul(gcm_(ii, k), w.inv_(k, c)));
    inv(ii, c) = acc;
  }
  return WeylElt(std::move(mat), std::move(inv));
}

bool RootSystem::is_right_descent(const WeylElt& w, int i) const {
  require_loop_free(i);
  const auto ii = static_cast<std::size_t>(i);
  for (std::size_t r = 0; r < rank(); ++r)
    if (w.matrix()(r, ii) < 0) return true;
  return false;
}

std::vector<int> RootSystem::right_descents(const WeylElt& w) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (graph_.loops()[i] != 0) continue;
    if (is_right_descent(w, static_cast<int>(i))) out.push_back(static_cast<int>(i));
  }
  return out;
}

Word RootSystem::canonical_word(const WeylElt& w) const {
  Word peeled;
  WeylElt cur = w;
  while (true) {
    const auto desc = right_descents(cur);
    if (desc.empty()) break;
    if (static_cast<int>(peeled.size()) >= max_length_)
      throw Error(Errc::LengthLimit, "descent chain exceeds " + std::to_string(max_length_));
    cur = right_multiply(cur, desc.front());
    peeled.push_back(desc.front());
  }
  // Only the identity has no right descent.
  if (!cur.is_identity()) throw Error(Errc::BadParams, "matrix is not a Weyl group element");
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

int RootSystem::length(const WeylElt& w) const { return static_cast<int>(canonical_word(w).size()); }

bool RootSystem::is_reduced(std::span<const int> word) const {
  return length(element(word)) == static_cast<int>(word.size());
}

CoxeterOrder RootSystem::m(int i, int j) const {
  require_loop_free(i);
  require_loop_free(j);
  if (i == j) throw Error(Errc::SameVertex, "m_ii is undefined");
  const std::int64_t a = gcm_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  if (a == 0) return 2;
  if (a == -1) return 3;
  return std::nullopt;
}

bool RootSystem::bruhat_covers(const WeylElt& w, int i) const { return !is_right_descent(w, i); }

std::vector<Word> RootSystem::matsumoto_neighbors(std::span<const int> word) const {
  if (!is_reduced(word)) throw Error(Errc::NotReduced, "matsumoto_neighbors needs a reduced word");
  std::set<Word> out;
  for (std::size_t p = 0; p + 1 < word.size(); ++p) {
    const int a = word[p], b = word[p + 1];
    const CoxeterOrder mab = m(a, b);
    if (mab == 2) {
      Word w(word.begin(), word.end());
      std::swap(w[p], w[p + 1]);
      out.insert(std::move(w));
    } else if (mab == 3 && p + 2 < word.size() && word[p + 2] == a) {
      Word w(word.begin(), word.end());
      w[p] = b;
      w[p + 1] = a;
      w[p + 2] = b;
      out.insert(std::move(w));
    }
  }
  return {out.begin(), out.end()};
}

std::vector<RootVec> RootSystem::positive_real_roots(int radius) const {
  if (radius < 0) throw Error(Errc::BadParams, "radius must be non-negative");
  std::set<RootVec> seen;
  std::vector<RootVec> frontier;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (graph_.loops()[i] != 0) continue;
    frontier.push_back(simple_root(rank(), static_cast<int>(i)));
    seen.insert(frontier.back());
  }
  for (int level = 0; level < radius; ++level) {
    std::vector<RootVec> next;
    for (const auto& beta : frontier) {
      for (std::size_t j = 0; j < rank(); ++j) {
        if (graph_.loops()[j] != 0) continue;
        RootVec img = apply(reflections_[j], beta);
        if (seen.insert(img).second) next.push_back(std::move(img));
      }
    }
    frontier = std::move(next);
  }
  std::vector<RootVec> out;
  for (const auto& r : seen)
    if (r.is_positive()) out.push_back(r);
  return out;
}

double RootSystem::tits_cone_quadratic(const ThetaVec& theta) const {
  if (theta.rank() != rank()) throw Error(Errc::BadParams, "theta rank mismatch");
  double q = 0.0;
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j) q += theta.coords[i] * static_cast<double>(adj_(i, j)) * theta.coords[j];
  return q;
}

RootVec RootSystem::minimal_imaginary_root() const {
  if (!type_ || type_->kind != TypeKind::Affine)
    throw Error(Errc::WrongType, "minimal imaginary root needs an affine graph");
  return RootVec{type_->null_root};
}

std::int64_t RootSystem::ext_dim(int i, int j, int degree) const {
  require_loop_free(i);
  require_loop_free(j);
  if (type_ && type_->kind == TypeKind::Finite)
    throw Error(Errc::WrongType, "Ext dimensions are tabulated for non-finite graphs only");
  switch (degree) {
    case 0:
    case 2:
      return i == j ? 1 : 0;
    case 1:
      return i == j ? 0 : graph_.edges(i, j);
    default:
      throw Error(Errc::BadDegree, "degree " + std::to_string(degree) + " not in {0,1,2}");
  }
}

std::int64_t RootSystem::euler_form(int i, int j) const {
  return ext_dim(i, j, 0) - ext_dim(i, j, 1) + ext_dim(i, j, 2);
}

}  // namespace rvs
