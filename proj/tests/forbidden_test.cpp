#include <doctest.h>

#include <memory>
#include <random>

#include "igt/build.hpp"
#include "igt/errors.hpp"
#include "igt/forbidden.hpp"
#include "igt/igraph.hpp"
#include "igt/lattice.hpp"
#include "oracles.hpp"

using namespace igt;

namespace {

Graph random_graph(std::mt19937& rng, std::size_t n, double density) {
  std::bernoulli_distribution edge(density);
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

Graph complete(std::size_t n) {
  Graph g(n);
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gamma_graph(const std::string& text) {
  auto l = enumerate_subgroups(std::make_shared<const FiniteGroup>(build(text)));
  return build_intersection_graph(l).graph;
}

}  // namespace

TEST_SUITE("patterns") {
  TEST_CASE("parsing") {
    CHECK(parse_pattern("K3,3") == Pattern{CompleteBipartite{3, 3}});
    CHECK(parse_pattern("K5") == Pattern{Clique{5}});
    CHECK(parse_pattern("K4,2") == Pattern{CompleteBipartite{2, 4}});
    CHECK(parse_pattern("K12") == Pattern{Clique{12}});
    CHECK(parse_pattern("k3,3") == Pattern{CompleteBipartite{3, 3}});
    CHECK(pattern_name(CompleteBipartite{3, 3}) == "K3,3");
    CHECK(pattern_name(Clique{5}) == "K5");
    for (const char* bad : {"", "K", "3,3", "K3,", "K,3", "K0", "K0,3", "K3,3,3", "K 5", "Kx"}) {
      const std::string text = bad;
      CAPTURE(text);
      CHECK_THROWS_AS(parse_pattern(text), InputError);
    }
  }

  TEST_CASE("argument checks") {
    Graph g(4);
    CHECK_THROWS_AS(find_complete_bipartite(g, 0, 3), InputError);
    CHECK_THROWS_AS(find_complete_bipartite(g, 3, 2), InputError);
    CHECK_THROWS_AS(find_clique(g, 0), InputError);
  }
}

TEST_SUITE("search") {
  TEST_CASE("small hosts") {
    CHECK(find_clique(complete(5), 5).has_value());
    CHECK_FALSE(find_clique(complete(5), 6).has_value());
    CHECK(is_k33_free(complete(5)));
    CHECK_FALSE(is_k33_free(complete(6)));
    CHECK_FALSE(find_clique(Graph(0), 1).has_value());
    CHECK(find_clique(Graph(1), 1).has_value());
    Graph k33(6);
    for (std::size_t u = 0; u < 3; ++u)
      for (std::size_t v = 3; v < 6; ++v) k33.add_edge(u, v);
    auto w = find_complete_bipartite(k33, 3, 3);
    REQUIRE(w.has_value());
    CHECK(w->side_a == std::vector<std::size_t>{0, 1, 2});
    CHECK(w->side_b == std::vector<std::size_t>{3, 4, 5});
    CHECK_FALSE(find_clique(k33, 3).has_value());
  }

  TEST_CASE("intersection graph examples") {
    CHECK(is_k33_free(gamma_graph("C(24)")));
    CHECK(find_clique(gamma_graph("C(24)"), 5).has_value());
    CHECK_FALSE(find_clique(gamma_graph("C(24)"), 6).has_value());
    CHECK_FALSE(is_k33_free(gamma_graph("C(36)")));
    CHECK(find_clique(gamma_graph("C(2)*C(2)*C(2)"), 7).has_value());
    CHECK(find_clique(gamma_graph("Dic(4)"), 9).has_value());
    CHECK(is_k33_free(gamma_graph("C(9)*C(3)")));
    CHECK(is_k33_free(gamma_graph("SDE(3,3,2)")));
    CHECK_FALSE(is_k33_free(gamma_graph("Perm(4;(1 2),(1 2 3 4))")));
  }

  TEST_CASE("agrees with exhaustive search on random graphs") {
    std::mt19937 rng(20240917);
    for (int trial = 0; trial < 120; ++trial) {
      const std::size_t n = 1 + rng() % 11;
      const double density = 0.2 + 0.7 * (rng() % 100) / 100.0;
      auto g = random_graph(rng, n, density);
      CAPTURE(trial);
      for (auto [m, k] : std::vector<std::pair<std::size_t, std::size_t>>{{1, 1}, {1, 3}, {2, 2}, {2, 3}, {3, 3}}) {
        auto naive = oracle::naive_bipartite(g, m, k);
        auto found = find_complete_bipartite(g, m, k);
        REQUIRE(found.has_value() == naive.has_value());
        if (found) {
          CHECK(found->side_a == naive->first);
          CHECK(found->side_b == naive->second);
          CHECK(witness_is_valid(g, *found));
        }
      }
      for (std::size_t k = 1; k <= 6; ++k) {
        auto naive = oracle::naive_clique(g, k);
        auto found = find_clique(g, k);
        REQUIRE(found.has_value() == naive.has_value());
        if (found) {
          CHECK(found->side_a == *naive);
          CHECK(witness_is_valid(g, *found));
        }
      }
    }
  }

  TEST_CASE("adding edges never destroys a copy") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      const std::size_t n = 6 + rng() % 7;
      auto g = random_graph(rng, n, 0.45);
      auto before = find_complete_bipartite(g, 3, 3);
      auto clique_before = find_clique(g, 4);
      std::size_t u = rng() % n, v = rng() % n;
      if (u != v) g.add_edge(u, v);
      if (before) {
        CHECK(witness_is_valid(g, *before));
        CHECK(find_complete_bipartite(g, 3, 3).has_value());
      }
      if (clique_before) CHECK(find_clique(g, 4).has_value());
    }
  }

  TEST_CASE("a 6-clique contains K3,3") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 60; ++trial) {
      auto g = random_graph(rng, 6 + rng() % 7, 0.7);
      if (find_clique(g, 6)) CHECK_FALSE(is_k33_free(g));
    }
  }

  TEST_CASE("deterministic") {
    auto g = gamma_graph("C(36)");
    CHECK(find_complete_bipartite(g, 3, 3) == find_complete_bipartite(g, 3, 3));
  }

  TEST_CASE("invalid witnesses are rejected") {
    auto g = complete(6);
    PatternWitness ok{CompleteBipartite{3, 3}, {0, 1, 2}, {3, 4, 5}};
    CHECK(witness_is_valid(g, ok));
    PatternWitness overlap{CompleteBipartite{3, 3}, {0, 1, 2}, {2, 3, 4}};
    CHECK_FALSE(witness_is_valid(g, overlap));
    PatternWitness short_side{CompleteBipartite{3, 3}, {0, 1}, {3, 4, 5}};
    CHECK_FALSE(witness_is_valid(g, short_side));
    Graph sparse(6);
    CHECK_FALSE(witness_is_valid(sparse, ok));
    PatternWitness clique{Clique{3}, {0, 1, 2}, {}};
    CHECK(witness_is_valid(g, clique));
    CHECK_FALSE(witness_is_valid(sparse, clique));
  }
}
