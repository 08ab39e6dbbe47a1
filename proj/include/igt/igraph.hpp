#ifndef IGT_IGRAPH_HPP
#define IGT_IGRAPH_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "igt/graph.hpp"
#include "igt/lattice.hpp"

namespace igt {

/// Intersection graph of a group: one vertex per proper non-trivial subgroup,
/// in lattice order, with an edge when two subgroups share a non-identity element.
struct IntersectionGraph {
  Graph graph;
  std::vector<std::size_t> subgroup_ids;  // vertex -> lattice id
  std::vector<std::size_t> orders;        // vertex -> subgroup order
  std::optional<std::size_t> frattini_vertex;
  std::string group_text;
  std::size_t group_order = 0;

  std::size_t size() const noexcept { return graph.size(); }
};

IntersectionGraph build_intersection_graph(const SubgroupLattice& lattice);

std::size_t degree(const IntersectionGraph& g, std::size_t v);
const VertexSet& neighbors(const IntersectionGraph& g, std::size_t v);

// Graphviz text; each node is labelled with its subgroup order, and the
// Frattini subgroup (when it is a vertex) additionally carries a Phi mark.
std::string export_dot(const IntersectionGraph& g);

// {"group", "order", "vertices": [{"id", "order", "members"}], "edges": [[i, j], ...]}
// Ids are lattice ids; members are taken from `lattice`.
nlohmann::ordered_json graph_to_json(const IntersectionGraph& g, const SubgroupLattice& lattice);
std::string export_json(const IntersectionGraph& g, const SubgroupLattice& lattice);

}  // namespace igt

#endif  // IGT_IGRAPH_HPP
