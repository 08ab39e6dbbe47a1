#include <doctest.h>

#include <memory>
#include <sstream>

#include "igt/build.hpp"
#include "igt/igraph.hpp"
#include "igt/lattice.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace igt;

namespace {

struct Built {
  SubgroupLattice lattice;
  IntersectionGraph gamma;
};

Built gamma_of(const std::string& text) {
  auto l = enumerate_subgroups(std::make_shared<const FiniteGroup>(build(text)));
  auto g = build_intersection_graph(l);
  return {std::move(l), std::move(g)};
}

std::size_t vertex_of_order(const IntersectionGraph& g, std::size_t order) {
  for (std::size_t v = 0; v < g.size(); ++v)
    if (g.orders[v] == order) return v;
  FAIL("no vertex of order " << order);
  return 0;
}

const std::vector<std::string> kGroups{"C(12)", "C(24)", "C(30)", "D(8)", "Dic(2)", "SDC(3,4,2)", "SDE(2,3,1)",
                                       "C(2)*C(2)*C(2)", "C(9)*C(3)", "D(18)", "Perm(4;(1 2),(1 2 3 4))",
                                       "SDC(5,4,2)", "C(4)*C(4)"};

}  // namespace

TEST_SUITE("intersection graph") {
  TEST_CASE("prime order groups have no vertices") {
    for (const char* text : {"C(2)", "C(3)", "C(13)", "C(1)"}) CHECK(gamma_of(text).gamma.size() == 0);
  }

  TEST_CASE("Z24") {
    auto [l, g] = gamma_of("C(24)");
    CHECK(g.size() == 6);
    CHECK(g.graph.edge_count() == 12);
    CHECK(degree(g, vertex_of_order(g, 3)) == 2);
    CHECK(degree(g, vertex_of_order(g, 2)) == 4);
  }

  TEST_CASE("isolated vertices of Z15") {
    auto [l, g] = gamma_of("C(15)");
    REQUIRE(g.size() == 2);
    CHECK(g.graph.edge_count() == 0);
  }

  TEST_CASE("Z3 x| Z4") {
    auto [l, g] = gamma_of("SDC(3,4,2)");
    CHECK(g.size() == 6);
    CHECK(g.graph.edge_count() == 11);
    CHECK(degree(g, vertex_of_order(g, 3)) == 1);
    CHECK(degree(g, vertex_of_order(g, 2)) == 4);
    CHECK(degree(g, vertex_of_order(g, 6)) == 5);
  }

  TEST_CASE("vertices are the proper non-trivial subgroups in lattice order") {
    for (const auto& text : kGroups) {
      auto [l, g] = gamma_of(text);
      CHECK(g.size() == l.size() - 2);
      for (std::size_t v = 0; v < g.size(); ++v) {
        CHECK(g.subgroup_ids[v] == v + 1);
        CHECK(g.orders[v] == l.at(v + 1).order);
      }
      CHECK(g.group_order == l.group().order());
      CHECK(g.group_text == l.group().spec_text());
    }
  }

  TEST_CASE("matches the naive construction") {
    for (const auto& text : kGroups) {
      auto [l, g] = gamma_of(text);
      std::vector<std::vector<Element>> subs;
      for (const auto& s : l.subgroups()) subs.push_back(s.members);
      auto naive = oracle::naive_intersection_graph(subs, l.group().order());
      CHECK(g.graph.edges() == naive.edges());
    }
  }

  TEST_CASE("symmetric and loop-free") {
    for (const auto& text : kGroups) {
      auto [l, g] = gamma_of(text);
      for (std::size_t u = 0; u < g.size(); ++u) {
        CHECK_FALSE(g.graph.has_edge(u, u));
        for (std::size_t v = 0; v < g.size(); ++v) CHECK(g.graph.has_edge(u, v) == g.graph.has_edge(v, u));
      }
    }
  }

  TEST_CASE("adjacency agrees with the product formula") {
    // Non-adjacent iff the intersection is trivial iff |HK| = |H| |K|.
    for (const auto& text : kGroups) {
      auto [l, g] = gamma_of(text);
      const auto& grp = l.group();
      for (std::size_t u = 0; u < g.size(); ++u)
        for (std::size_t v = u + 1; v < g.size(); ++v) {
          const auto& h = l.at(g.subgroup_ids[u]);
          const auto& k = l.at(g.subgroup_ids[v]);
          auto product = grp.empty_set();
          for (Element x : h.members)
            for (Element y : k.members) product.set(grp.mul(x, y));
          CHECK(g.graph.has_edge(u, v) == (product.count() < h.order * k.order));
        }
    }
  }

  TEST_CASE("a non-trivial Frattini subgroup is adjacent to every subgroup containing it") {
    for (const auto& text : kGroups) {
      auto [l, g] = gamma_of(text);
      const auto& phi = frattini(l);
      if (phi.order == 1) {
        CHECK_FALSE(g.frattini_vertex.has_value());
        continue;
      }
      REQUIRE(g.frattini_vertex.has_value());
      const auto fv = *g.frattini_vertex;
      CHECK(g.subgroup_ids[fv] == phi.id);
      std::vector<std::size_t> above;
      for (std::size_t v = 0; v < g.size(); ++v)
        if (phi.set.is_subset_of(l.at(g.subgroup_ids[v]).set)) above.push_back(v);
      for (std::size_t i = 0; i < above.size(); ++i)
        for (std::size_t j = i + 1; j < above.size(); ++j) CHECK(g.graph.has_edge(above[i], above[j]));
    }
  }

  TEST_CASE("neighbour queries") {
    auto [l, g] = gamma_of("Dic(2)");
    CHECK(neighbors(g, 0).count() == 3);
    CHECK_THROWS_AS(neighbors(g, 4), std::out_of_range);
  }
}

TEST_SUITE("export") {
  TEST_CASE("DOT for Q8") {
    auto [l, g] = gamma_of("Dic(2)");
    auto dot = export_dot(g);
    CHECK(dot.rfind("graph ", 0) == 0);
    std::size_t nodes = 0, edges = 0;
    std::istringstream in(dot);
    for (std::string line; std::getline(in, line);) {
      if (line.find("[label=") != std::string::npos) ++nodes;
      if (line.find(" -- ") != std::string::npos) ++edges;
    }
    CHECK(nodes == 4);
    CHECK(edges == 6);
    // The centre of Q8 is its Frattini subgroup.
    CHECK(dot.find("\"\xCE\xA6 2\"") != std::string::npos);
  }

  TEST_CASE("JSON for Z9 x Z3") {
    auto [l, g] = gamma_of("C(9)*C(3)");
    auto j = nlohmann::json::parse(export_json(g, l));
    CHECK(j["group"] == "C(9)*C(3)");
    CHECK(j["order"] == 27);
    REQUIRE(j["vertices"].size() == 8);
    CHECK(j["edges"].size() == 13);
    for (const auto& v : j["vertices"]) {
      const auto id = v["id"].get<std::size_t>();
      CHECK(v["order"] == l.at(id).order);
      CHECK(v["members"].get<std::vector<Element>>() == l.at(id).members);
    }
    for (const auto& e : j["edges"]) CHECK(e[0].get<std::size_t>() < e[1].get<std::size_t>());
  }

  TEST_CASE("vertex count of products of cyclic groups") {
    CHECK(gamma_of("C(9)*C(3)").gamma.size() == 8);
    CHECK(gamma_of("C(4)*C(2)").gamma.size() == 6);
  }
}
