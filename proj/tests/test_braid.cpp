#include <doctest.h>

#include <set>

#include "rvs/braid.hpp"
#include "rvs/flow.hpp"
#include "support.hpp"

using namespace rvs;

namespace {

BraidWord bw(std::initializer_list<std::pair<int, int>> xs) {
  BraidWord w;
  for (auto [g, s] : xs) w.push_back({g, s});
  return w;
}

BraidWord random_braid(std::mt19937_64& rng, int min_len, int max_len) {
  std::uniform_int_distribution<int> len(min_len, max_len), gen(1, 2), coin(0, 1);
  BraidWord w(static_cast<std::size_t>(len(rng)));
  for (auto& x : w) x = {gen(rng), coin(rng) ? 1 : -1};
  return w;
}

BraidWord concat(BraidWord a, const BraidWord& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

/// One relation applied at a random spot: insert x x^-1, or swap a braid triple.
BraidWord perturb(std::mt19937_64& rng, BraidWord w) {
  std::uniform_int_distribution<std::size_t> pos(0, w.size());
  std::uniform_int_distribution<int> gen(1, 2), coin(0, 1);
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    const auto a = w[k];
    const auto b = w[k + 1];
    const auto c = w[k + 2];
    if (coin(rng) && a.sign == 1 && b.sign == 1 && c.sign == 1 && a.gen == c.gen && a.gen != b.gen) {
      w[k] = {b.gen, 1};
      w[k + 1] = {a.gen, 1};
      w[k + 2] = {b.gen, 1};
      return w;
    }
  }
  const int g = gen(rng), s = coin(rng) ? 1 : -1;
  const auto at = static_cast<std::ptrdiff_t>(pos(rng));
  w.insert(w.begin() + at, {{g, s}, {g, -s}});
  return w;
}

// Mapping a pattern onto a 2m-cycle: the left side runs from position 0 to m,
// the right side from 0 backwards to m. A letter with sign -1 is an upward crossing.
std::vector<bool> cycle_of(const SignPattern& p) {
  const std::size_t m = p.lhs.size();
  std::vector<bool> up(2 * m);
  for (std::size_t k = 0; k < m; ++k) {
    up[k] = p.lhs[k] == -1;
    up[2 * m - 1 - k] = p.rhs[k] != -1;
  }
  return up;
}

}  // namespace

TEST_CASE("braid word utilities") {
  CHECK(free_reduce(bw({{1, 1}, {2, 1}, {2, -1}, {1, -1}})).empty());
  CHECK(inverse(bw({{1, 1}, {2, -1}})) == bw({{2, 1}, {1, -1}}));
  CHECK_THROWS(check_letters(bw({{3, 1}})));
}

TEST_CASE("worked equalities") {
  const BraidWord aba = bw({{1, 1}, {2, 1}, {1, 1}});
  const BraidWord bab = bw({{2, 1}, {1, 1}, {2, 1}});
  CHECK(equal_braid(FlatType::A2, aba, bab));
  CHECK_FALSE(equal_braid(FlatType::A2, bw({{1, 1}, {2, 1}}), bw({{2, 1}, {1, 1}})));
  CHECK_FALSE(burau(bw({{1, 1}, {2, 1}})) == burau(bw({{2, 1}, {1, 1}})));
  CHECK(equal_braid(FlatType::A2, bw({{1, 1}, {1, -1}}), {}));
  CHECK(burau(bw({{1, 1}})) * burau(bw({{1, -1}})) == LaurentMat::identity());
  CHECK(burau(aba) == burau(bab));
  CHECK(equal_braid(FlatType::A1A1, bw({{1, 1}, {2, 1}}), bw({{2, 1}, {1, 1}})));
  CHECK_FALSE(equal_braid(FlatType::A1A1, bw({{1, 1}}), bw({{2, 1}})));
}

TEST_CASE("garside normal form") {
  const GarsideNF delta = garside_nf(bw({{1, 1}, {2, 1}, {1, 1}}));
  CHECK(delta.infimum == 1);
  CHECK(delta.factors.empty());
  const GarsideNF inv = garside_nf(bw({{1, -1}}));
  CHECK(inv.infimum == -1);
  CHECK(inv.factors.size() == 1);
  CHECK(garside_nf({}) == GarsideNF{});

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord w = random_braid(rng, 0, 12);
    const GarsideNF nf = garside_nf(w);
    for (auto f : nf.factors) CHECK((f != Simple::E && f != Simple::Delta));
    CHECK(garside_nf(to_word(nf)) == nf);
    CHECK(burau(to_word(nf)) == burau(w));
    CHECK(garside_nf(perturb(rng, w)) == nf);
    CHECK(garside_nf(concat(w, inverse(w))) == GarsideNF{});
  }
}

TEST_CASE("garside and burau agree") {
  std::mt19937_64 rng(2024);
  int equal = 0, different = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    BraidWord u, v;
    if (trial % 3 == 0) {
      u = random_braid(rng, 0, 8);
      v = perturb(rng, perturb(rng, u));
      if (v.size() > 12) v = perturb(rng, u);
    } else {
      u = random_braid(rng, 0, trial % 3 == 1 ? 3 : 12);
      v = random_braid(rng, 0, trial % 3 == 1 ? 3 : 12);
    }
    REQUIRE(v.size() <= 12);
    const bool g = equal_braid(FlatType::A2, u, v);
    CHECK(g == (burau(u) == burau(v)));
    (g ? equal : different) += 1;
  }
  CHECK(equal > 300);
  CHECK(different > 300);
}

TEST_CASE("braid equality refines the symmetric group") {
  std::mt19937_64 rng(99);
  auto s3 = [](const BraidWord& w) {
    std::vector<std::pair<int, int>> xs;
    for (const auto& x : w) xs.emplace_back(x.gen, x.sign);
    return oracle::to_s3(xs);
  };
  for (int trial = 0; trial < 500; ++trial) {
    const BraidWord u = random_braid(rng, 0, 6);
    const BraidWord v = trial % 2 ? perturb(rng, u) : random_braid(rng, 0, 6);
    if (equal_braid(FlatType::A2, u, v)) CHECK(s3(u) == s3(v));
  }
}

TEST_CASE("burau determinant") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const BraidWord w = random_braid(rng, 0, 12);
    int k = 0;
    for (const auto& x : w) k += x.sign;
    const std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    CHECK(burau(w).det() == Laurent::monomial(sign, k));
  }
  CHECK(burau(bw({{1, 1}, {2, 1}, {1, 1}})).det() == Laurent::monomial(-1, 3));
}

TEST_CASE("sign tables") {
  const std::set<SignPattern> a1a1 = {{{1, 1}, {1, 1}}, {{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}}, {{-1, -1}, {-1, -1}}};
  const std::set<SignPattern> a2 = {
      {{1, 1, 1}, {1, 1, 1}},     {{1, 1, -1}, {-1, 1, 1}},   {{-1, 1, 1}, {1, 1, -1}},
      {{1, -1, -1}, {-1, -1, 1}}, {{-1, -1, 1}, {1, -1, -1}}, {{-1, -1, -1}, {-1, -1, -1}}};
  const auto got1 = enumerate_sign_patterns(FlatType::A1A1);
  const auto got2 = enumerate_sign_patterns(FlatType::A2);
  CHECK(got1.size() == 4);
  CHECK(got2.size() == 6);
  CHECK(std::set<SignPattern>(got1.begin(), got1.end()) == a1a1);
  CHECK(std::set<SignPattern>(got2.begin(), got2.end()) == a2);
  CHECK_FALSE(pattern_holds(FlatType::A2, {{1, 1, 1}, {-1, -1, -1}}));
  CHECK(to_string(lhs_word(SignPattern{{1, 1, -1}, {-1, 1, 1}})) == to_string(bw({{1, 1}, {2, 1}, {1, -1}})));
}

TEST_CASE("holding patterns are exactly the valid flat orientations") {
  for (const auto type : {FlatType::A1A1, FlatType::A2}) {
    const int m = flat_m(type);
    const auto holding = enumerate_sign_patterns(type);
    std::size_t valid = 0;
    for (int mask = 0; mask < (1 << (2 * m)); ++mask) {
      SignPattern p;
      for (int k = 0; k < m; ++k) {
        p.lhs.push_back(mask & (1 << k) ? -1 : 1);
        p.rhs.push_back(mask & (1 << (m + k)) ? -1 : 1);
      }
      const FlatReport r = classify_cycle(cycle_of(p));
      const bool holds = std::find(holding.begin(), holding.end(), p) != holding.end();
      CHECK(holds == pattern_holds(type, p));
      CAPTURE(to_string(p));
      CHECK(holds == r.valid);
      if (holds) {
        CHECK(r.sources.size() == 1);
        CHECK(r.sinks.size() == 1);
        CHECK(r.antipodal);
        ++valid;
      }
    }
    CHECK(valid == holding.size());
  }
}
