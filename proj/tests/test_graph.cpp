#include <doctest.h>

#include <numeric>

#include "rvs/graph.hpp"
#include "rvs/json_io.hpp"
#include "support.hpp"

using namespace rvs;
using testing::error_of;

namespace {

oracle::Kind expected(TypeKind k) {
  switch (k) {
    case TypeKind::Finite: return oracle::Kind::Finite;
    case TypeKind::Affine: return oracle::Kind::Affine;
    case TypeKind::Hyperbolic: return oracle::Kind::Hyperbolic;
    default: return oracle::Kind::Other;
  }
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = r; c < n; ++c) m(r, c) = m(c, r) = d(rng);
  return m;
}

}  // namespace

TEST_CASE("gcm of worked graphs") {
  CHECK(gcm(catalog("K:3")) == IntMatrix{{2, -3}, {-3, 2}});
  CHECK(gcm(catalog("A:1")) == IntMatrix{{2}});
  CHECK(gcm(catalog("A_tilde:2")) == IntMatrix{{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}});
  CHECK(gcm(catalog("L:3")) == IntMatrix{{-4}});
  CHECK(gcm(catalog("K:2,1")) == IntMatrix{{0, -2}, {-2, 2}});
}

TEST_CASE("gcm agrees with the oracle construction on the whole table") {
  for (const auto& name : testing::hyperbolic_table()) {
    const Graph g = catalog(name);
    CAPTURE(name);
    CHECK(testing::to_oracle(gcm(g)) == testing::to_oracle(g));
    CHECK(gcm(g).symmetric());
  }
}

TEST_CASE("adjugate of worked matrices") {
  const IntMatrix a = gcm(catalog("A_hyp:1"));
  CHECK(adjugate(a) == IntMatrix{{0, 2, 2}, {2, 4, 4}, {2, 4, 3}});
  CHECK(determinant(a) == -2);
  for (int m = 1; m <= 6; ++m) {
    const IntMatrix k = gcm(catalog("K:" + std::to_string(m)));
    CHECK(adjugate(k) == IntMatrix{{2, m}, {m, 2}});
    CHECK(determinant(k) == 4 - m * m);
  }
  CHECK(adjugate(IntMatrix{{5}}) == IntMatrix{{1}});
  CHECK(adjugate(gcm(catalog("A_tilde:2"))) == IntMatrix{{3, 3, 3}, {3, 3, 3}, {3, 3, 3}});
  CHECK(determinant(gcm(catalog("A_tilde:2"))) == 0);
}

TEST_CASE("adjugate identity and determinant on random symmetric matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const IntMatrix m = random_symmetric(rng, n);
    const IntMatrix adj = adjugate(m);
    const auto d = oracle::det(testing::to_oracle(m));
    CHECK(determinant(m) == static_cast<long long>(d));
    const IntMatrix prod = m * adj;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) CHECK(prod(r, c) == (r == c ? static_cast<long long>(d) : 0));
  }
}

TEST_CASE("definiteness") {
  CHECK(definiteness(gcm(catalog("K:1"))).kind == Definiteness::Kind::PositiveDefinite);
  const auto aff = definiteness(gcm(catalog("A_tilde:2")));
  REQUIRE(aff.kind == Definiteness::Kind::PositiveSemidefinite);
  REQUIRE(aff.kernel.size() == 1);
  CHECK(aff.kernel[0] == std::vector<std::int64_t>{1, 1, 1});
  CHECK(definiteness(gcm(catalog("A_hyp:1"))).kind == Definiteness::Kind::Indefinite);
}

TEST_CASE("definiteness agrees with Sylvester minors") {
  std::mt19937_64 rng(5);
  int psd = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + trial % 5;
    IntMatrix m = random_symmetric(rng, n);
    // Gram matrices push a good share of cases onto the semidefinite boundary.
    if (trial % 2 == 0) {
      IntMatrix b = random_symmetric(rng, n);
      for (std::size_t c = 0; c < n; ++c) b(n - 1, c) = 0;
      m = b.transpose() * b;
    }
    const auto ours = definiteness(m);
    const auto ref = oracle::definiteness(testing::to_oracle(m));
    using K = Definiteness::Kind;
    const auto want = ref == oracle::Def::PD ? K::PositiveDefinite
                      : ref == oracle::Def::PSD ? K::PositiveSemidefinite
                                                : K::Indefinite;
    CHECK(ours.kind == want);
    if (ours.kind == K::PositiveSemidefinite) {
      ++psd;
      CHECK(ours.kernel.size() == oracle::nullity(testing::to_oracle(m)));
      for (const auto& v : ours.kernel) {
        const auto mv = multiply(m, v);
        CHECK(std::all_of(mv.begin(), mv.end(), [](auto x) { return x == 0; }));
      }
    }
  }
  CHECK(psd > 50);
}

TEST_CASE("classify worked examples") {
  CHECK(classify(catalog("K:2")).kind == TypeKind::Affine);
  CHECK(classify(catalog("K:3")).kind == TypeKind::Hyperbolic);
  CHECK(classify(catalog("K:1")).kind == TypeKind::Finite);

  // K_3 with a pendant vertex: indefinite, and the K_3 inside is itself wild.
  const Graph::Edge e[] = {{0, 1, 3}, {1, 2, 1}};
  const Graph g = Graph::from_edges("K3+pendant", 3, e);
  CHECK(classify(g).kind == TypeKind::IndefiniteNonHyperbolic);
  const int sub[] = {0, 1};
  CHECK(definiteness(gcm(g.induced(sub))).kind == Definiteness::Kind::Indefinite);
  CHECK(oracle::classify(testing::to_oracle(g)) == oracle::Kind::Other);

  const Graph::Edge split[] = {{0, 1, 1}};
  CHECK(error_of([&] { classify(Graph::from_edges("split", 3, split)); }) == Errc::DisconnectedGraph);
}

TEST_CASE("catalog builders") {
  const Graph h = catalog("A_hyp:1");
  CHECK(h.rank() == 3);
  CHECK(h.edges(0, 1) == 1);
  CHECK(h.edges(1, 2) == 2);
  CHECK(h.edges(0, 2) == 0);

  const Graph t = catalog("A_tilde:2");
  CHECK(t.edges(0, 1) == 1);
  CHECK(t.edges(1, 2) == 1);
  CHECK(t.edges(0, 2) == 1);

  const Graph x = catalog("A_tilde_extra:2,3");
  CHECK(x.edges(0, 1) == 2);
  CHECK(x.edges(1, 2) == 2);
  CHECK(x.edges(0, 2) == 2);
  CHECK(classify(x).kind == TypeKind::Hyperbolic);

  const Graph star = catalog("Star:5");
  CHECK(star.rank() == 6);
  for (int v = 1; v <= 5; ++v) CHECK(star.edges(0, v) == 1);

  CHECK(error_of([] { catalog("Q:3"); }) == Errc::UnknownName);
  CHECK(error_of([] { catalog("K:0"); }) == Errc::BadParams);
  CHECK(error_of([] { catalog("A_hyp:8"); }) == Errc::BadParams);
  CHECK(error_of([] { catalog("K:x"); }) == Errc::Parse);
}

TEST_CASE("every table entry is hyperbolic") {
  std::vector<std::string> names = testing::hyperbolic_table();
  for (int m = 3; m <= 5; ++m) names.push_back("K:" + std::to_string(m));
  for (int m = 1; m <= 3; ++m) {
    names.push_back("K:" + std::to_string(m) + ",1");
    names.push_back("K:" + std::to_string(m) + ",2");
  }
  for (int m = 2; m <= 3; ++m) names.push_back("L:" + std::to_string(m));
  for (const auto& name : names) {
    CAPTURE(name);
    const Graph g = catalog(name);
    CHECK(g.rank() <= 10);
    const auto kind = classify(g).kind;
    CHECK(kind == TypeKind::Hyperbolic);
    // Brute-force cross-check over every proper subset where it stays cheap.
    if (g.rank() <= 7) CHECK(oracle::classify(testing::to_oracle(g)) == expected(kind));
  }
}

TEST_CASE("table ranks") {
  const std::vector<std::pair<std::string, std::size_t>> ranks = {
      {"A_hyp:1", 3}, {"A_hyp:1,1", 3}, {"A_tilde:2,1", 3}, {"A_hyp:2", 4},  {"A_hyp:2,1", 4},
      {"A_hyp:2,2", 4}, {"A_hyp:3", 5}, {"A_hyp:3,1", 5},   {"A_hyp:4", 6},  {"D_hyp:4", 6},
      {"Star:5", 6},  {"A_hyp:5", 7},   {"D_hyp:5", 7},     {"A_hyp:6", 8},  {"D_hyp:6", 8},
      {"E_hyp:6", 8}, {"A_hyp:7", 9},   {"D_hyp:7", 9},     {"E_hyp:7", 9},  {"D_hyp:8", 10},
      {"E_hyp:8", 10}};
  for (const auto& [name, n] : ranks) CHECK_MESSAGE(catalog(name).rank() == n, name);
}

TEST_CASE("overextended vertex sits on an extended diagram") {
  for (const auto& name : testing::hyperbolic_table()) {
    const Graph g = catalog(name);
    if (g.rank() < 3 || name.rfind("A_tilde", 0) == 0 || name == "Star:5") continue;
    std::vector<int> rest(g.rank() - 1);
    std::iota(rest.begin(), rest.end(), 1);
    CAPTURE(name);
    CHECK(classify(g.induced(rest)).kind == TypeKind::Affine);
  }
}

TEST_CASE("finite and affine entries") {
  for (const auto& name : testing::finite_table()) {
    CAPTURE(name);
    const Graph g = catalog(name);
    CHECK(classify(g).kind == TypeKind::Finite);
    if (g.rank() <= 7) CHECK(oracle::classify(testing::to_oracle(g)) == oracle::Kind::Finite);
  }
  for (const auto& name : testing::affine_table()) {
    CAPTURE(name);
    const Graph g = catalog(name);
    const GraphType t = classify(g);
    REQUIRE(t.kind == TypeKind::Affine);
    if (g.rank() <= 7) CHECK(oracle::classify(testing::to_oracle(g)) == oracle::Kind::Affine);
    // Kernel generator: strictly positive, primitive, annihilated by the GCM.
    REQUIRE(t.null_root.size() == g.rank());
    std::int64_t gcd = 0;
    for (auto x : t.null_root) {
      CHECK(x > 0);
      gcd = std::gcd(gcd, x);
    }
    CHECK(gcd == 1);
    const auto v = multiply(gcm(g), t.null_root);
    CHECK(std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; }));
  }
}

TEST_CASE("graph json reader") {
  const Json good = Json::parse(R"({"name":"tri","vertices":3,"edges":[[0,1,1],[1,2,1],[2,0,1],[1,0,1]]})");
  const Graph g = graph_from_json(good);
  CHECK(g.rank() == 3);
  CHECK(g.edges(0, 2) == 1);
  CHECK(classify(g).kind == TypeKind::Affine);

  const Graph back = graph_from_json(graph_to_json(catalog("A_hyp:2,1")));
  CHECK(back.edge_mult() == catalog("A_hyp:2,1").edge_mult());

  CHECK(error_of([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[0,1,1],[1,0,2]]})")); }) ==
        Errc::Parse);
  CHECK(error_of([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[1,1,1]]})")); }) == Errc::Parse);
  CHECK(error_of([] { graph_from_json(Json::parse(R"({"vertices":2,"edges":[[0,5,1]]})")); }) == Errc::Parse);
  CHECK(error_of([] { graph_from_json(Json::parse(R"({"edges":[]})")); }) == Errc::Parse);
  CHECK(error_of([] { graph_from_json(Json::parse(R"({"vertices":17,"edges":[]})")); }) == Errc::RankTooLarge);
  const Graph looped = graph_from_json(Json::parse(R"({"vertices":1,"edges":[],"loops":[2]})"));
  CHECK(classify(looped).kind == TypeKind::Hyperbolic);
}
