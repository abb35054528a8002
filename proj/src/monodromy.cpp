#include <map>
#include <queue>
#include <set>

#include "rvs/flow.hpp"

namespace rvs {

namespace {

using SignTuple = std::vector<int>;

// Replacements for an alternating segment read with its first letter as
// generator 1, each result starting with the other generator.
const std::map<SignTuple, std::vector<SignTuple>>& rewrite_table(FlatType type) {
  static const auto build = [](FlatType t) {
    std::map<SignTuple, std::vector<SignTuple>> table;
    for (const auto& p : enumerate_sign_patterns(t)) table[p.lhs].push_back(p.rhs);
    return table;
  };
  static const auto a1a1 = build(FlatType::A1A1);
  static const auto a2 = build(FlatType::A2);
  return type == FlatType::A1A1 ? a1a1 : a2;
}

struct ByLength {
  bool operator()(const SignedWord& a, const SignedWord& b) const {
    return a.size() != b.size() ? a.size() > b.size() : a > b;
  }
};

}  // namespace

MonodromyResult monodromy_reduce(const RootSystem& rs, const SignedWord& word, std::size_t budget) {
  std::priority_queue<SignedWord, std::vector<SignedWord>, ByLength> queue;
  std::set<SignedWord> seen;
  SignedWord start = free_reduce(word);
  SignedWord best = start;
  queue.push(start);
  seen.insert(start);
  MonodromyResult result;

  while (!queue.empty()) {
    SignedWord cur = queue.top();
    queue.pop();
    ++result.states;
    if (cur.size() < best.size()) best = cur;
    if (cur.empty()) break;
    if (result.states > budget)
      throw Error(Errc::SearchBudgetExceeded,
                  "explored " + std::to_string(budget) + " states, shortest word " + to_string(best));

    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      const int i = cur[p].gen, j = cur[p + 1].gen;
      if (i == j) continue;
      const CoxeterOrder m = rs.m(i, j);
      if (!m || p + static_cast<std::size_t>(*m) > cur.size()) continue;
      SignTuple signs;
      bool alternating = true;
      for (int k = 0; k < *m; ++k) {
        const auto& l = cur[p + static_cast<std::size_t>(k)];
        alternating = alternating && l.gen == (k % 2 == 0 ? i : j);
        signs.push_back(l.sign);
      }
      if (!alternating) continue;
      const auto& table = rewrite_table(*m == 2 ? FlatType::A1A1 : FlatType::A2);
      auto it = table.find(signs);
      if (it == table.end()) continue;
      for (const auto& rep : it->second) {
        SignedWord next = cur;
        for (int k = 0; k < *m; ++k) next[p + static_cast<std::size_t>(k)] = {k % 2 == 0 ? j : i, rep[static_cast<std::size_t>(k)]};
        next = free_reduce(next);
        if (seen.insert(next).second) queue.push(std::move(next));
      }
    }
  }
  result.word = best;
  return result;
}

MonodromyResult monodromy_reduce(const FlowAssignment& flow, std::size_t start, const Word& loop,
                                 std::size_t budget) {
  if (path_end(flow.region(), start, loop) != start) throw Error(Errc::BrokenPath, "path is not a loop");
  return monodromy_reduce(flow.region().root_system(), signed_word(flow, start, loop), budget);
}

}  // namespace rvs
