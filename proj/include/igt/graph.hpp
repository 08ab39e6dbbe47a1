#ifndef IGT_GRAPH_HPP
#define IGT_GRAPH_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace igt {

using VertexSet = boost::dynamic_bitset<std::uint64_t>;

// Simple undirected graph with bitset neighbourhoods. No loops.
class Graph {
 public:
  explicit Graph(std::size_t vertices = 0);

  std::size_t size() const noexcept { return adjacency_.size(); }
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;

  // Throw std::out_of_range for an invalid vertex.
  const VertexSet& neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const;

  std::size_t edge_count() const;
  // Pairs (i, j) with i < j, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  VertexSet empty_set() const { return VertexSet(size()); }

 private:
  std::vector<VertexSet> adjacency_;
};

}  // namespace igt

#endif  // IGT_GRAPH_HPP
