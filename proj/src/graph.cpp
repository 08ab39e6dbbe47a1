#include "igt/graph.hpp"

#include <stdexcept>
#include <string>

namespace igt {

Graph::Graph(std::size_t vertices) : adjacency_(vertices, VertexSet(vertices)) {}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw std::out_of_range("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  adjacency_[u].set(v);
  adjacency_[v].set(u);
}

bool Graph::has_edge(std::size_t u, std::size_t v) const { return neighbors(u).test(v); }

const VertexSet& Graph::neighbors(std::size_t v) const {
  if (v >= size()) throw std::out_of_range("invalid vertex id " + std::to_string(v));
  return adjacency_[v];
}

std::size_t Graph::degree(std::size_t v) const { return neighbors(v).count(); }

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency_) total += row.count();
  return total / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t u = 0; u < size(); ++u)
    for (auto v = adjacency_[u].find_next(u); v != VertexSet::npos; v = adjacency_[u].find_next(v))
      out.emplace_back(u, v);
  return out;
}

}  // namespace igt
