#include "igt/igraph.hpp"

#include <sstream>

namespace igt {

IntersectionGraph build_intersection_graph(const SubgroupLattice& lattice) {
  const std::size_t n = lattice.group().order();
  IntersectionGraph out;
  out.group_text = lattice.group().spec_text();
  out.group_order = n;

  std::vector<ElementSet> nontrivial;
  for (const auto& s : lattice.subgroups()) {
    if (s.order == 1 || s.order == n) continue;
    out.subgroup_ids.push_back(s.id);
    out.orders.push_back(s.order);
    ElementSet without_identity = s.set;
    without_identity.reset(FiniteGroup::identity);
    nontrivial.push_back(std::move(without_identity));
  }

  out.graph = Graph(nontrivial.size());
  for (std::size_t i = 0; i < nontrivial.size(); ++i)
    for (std::size_t j = i + 1; j < nontrivial.size(); ++j)
      if (nontrivial[i].intersects(nontrivial[j])) out.graph.add_edge(i, j);

  const std::size_t phi = frattini(lattice).id;
  for (std::size_t v = 0; v < out.subgroup_ids.size(); ++v)
    if (out.subgroup_ids[v] == phi) out.frattini_vertex = v;
  return out;
}

std::size_t degree(const IntersectionGraph& g, std::size_t v) { return g.graph.degree(v); }

const VertexSet& neighbors(const IntersectionGraph& g, std::size_t v) { return g.graph.neighbors(v); }

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string export_dot(const IntersectionGraph& g) {
  std::ostringstream out;
  out << "graph " << quoted("Gamma(" + g.group_text + ")") << " {\n";
  out << "  label=" << quoted("Gamma(" + g.group_text + "), |G| = " + std::to_string(g.group_order)) << ";\n";
  out << "  node [shape=circle];\n";
  for (std::size_t v = 0; v < g.size(); ++v) {
    std::string label = std::to_string(g.orders[v]);
    if (g.frattini_vertex == v) label = "Φ " + label;
    out << "  s" << g.subgroup_ids[v] << " [label=" << quoted(label) << "];\n";
  }
  for (auto [u, v] : g.graph.edges())
    out << "  s" << g.subgroup_ids[u] << " -- s" << g.subgroup_ids[v] << ";\n";
  out << "}\n";
  return out.str();
}

nlohmann::ordered_json graph_to_json(const IntersectionGraph& g, const SubgroupLattice& lattice) {
  nlohmann::ordered_json vertices = nlohmann::ordered_json::array();
  for (std::size_t v = 0; v < g.size(); ++v) {
    const auto& s = lattice.at(g.subgroup_ids[v]);
    vertices.push_back({{"id", s.id}, {"order", s.order}, {"members", s.members}});
  }
  nlohmann::ordered_json edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.graph.edges()) edges.push_back({g.subgroup_ids[u], g.subgroup_ids[v]});
  return {{"group", g.group_text}, {"order", g.group_order}, {"vertices", vertices}, {"edges", edges}};
}

std::string export_json(const IntersectionGraph& g, const SubgroupLattice& lattice) {
  return graph_to_json(g, lattice).dump();
}

}  // namespace igt
