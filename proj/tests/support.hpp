#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rvs/error.hpp"
#include "rvs/root_system.hpp"

namespace testing {

/// Code of the rvs::Error thrown by f, or nullopt when nothing is thrown.
template <class F>
std::optional<rvs::Errc> error_of(F&& f) {
  try {
    f();
  } catch (const rvs::Error& e) {
    return e.code();
  }
  return std::nullopt;
}

inline oracle::Mat to_oracle(const rvs::Graph& g) {
  std::vector<std::array<std::int64_t, 3>> edges;
  for (const auto& e : g.edge_list()) edges.push_back({e.i, e.j, e.mult});
  return oracle::gcm_from_edges(g.rank(), edges, g.loops());
}

inline oracle::Mat to_oracle(const rvs::IntMatrix& m) {
  oracle::Mat out(m.rows(), oracle::Vec(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c);
  return out;
}

inline rvs::Word random_word(std::mt19937_64& rng, std::size_t rank, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(rank) - 1);
  rvs::Word w(static_cast<std::size_t>(len(rng)));
  for (auto& g : w) g = gen(rng);
  return w;
}

/// Catalog graphs of hyperbolic type by rank, as listed in the classification table.
inline std::vector<std::string> hyperbolic_table() {
  return {"L:2",       "L:3",       "L:4",       "K:3",       "K:4",       "K:5",       "K:1,1",
          "K:2,1",     "K:3,1",     "K:1,2",     "K:2,2",     "K:3,2",     "A_hyp:1",   "A_hyp:1,1",
          "A_tilde:2,1", "A_tilde:2,2", "A_tilde:2,3", "A_hyp:2", "A_hyp:2,1", "A_hyp:2,2", "A_hyp:3",
          "A_hyp:3,1", "A_hyp:4",   "D_hyp:4",   "Star:5",    "A_hyp:5",   "D_hyp:5",   "A_hyp:6",
          "D_hyp:6",   "E_hyp:6",   "A_hyp:7",   "D_hyp:7",   "E_hyp:7",   "D_hyp:8",   "E_hyp:8"};
}

inline std::vector<std::string> finite_table() {
  std::vector<std::string> out;
  for (int n = 1; n <= 9; ++n) out.push_back("A:" + std::to_string(n));
  for (int n = 4; n <= 9; ++n) out.push_back("D:" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E:" + std::to_string(n));
  out.push_back("K:1");
  return out;
}

inline std::vector<std::string> affine_table() {
  std::vector<std::string> out;
  for (int n = 1; n <= 9; ++n) out.push_back("A_tilde:" + std::to_string(n));
  for (int n = 4; n <= 9; ++n) out.push_back("D_tilde:" + std::to_string(n));
  for (int n = 6; n <= 8; ++n) out.push_back("E_tilde:" + std::to_string(n));
  out.push_back("K:2");
  out.push_back("L:1");
  return out;
}

}  // namespace testing
