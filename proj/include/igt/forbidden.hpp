#ifndef IGT_FORBIDDEN_HPP
#define IGT_FORBIDDEN_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "igt/graph.hpp"

namespace igt {

struct CompleteBipartite {
  std::size_t m, n;
  friend bool operator==(const CompleteBipartite&, const CompleteBipartite&) = default;
};
struct Clique {
  std::size_t k;
  friend bool operator==(const Clique&, const Clique&) = default;
};
using Pattern = std::variant<CompleteBipartite, Clique>;

// Parses "K3,3", "K<m>,<n>" or "K<k>". For bipartite patterns the smaller
// side is put first. Throws InputError.
Pattern parse_pattern(std::string_view text);
std::string pattern_name(const Pattern& p);

/// An explicit copy of a pattern inside a host graph. For a clique the members
/// are in side_a and side_b is empty. Vertex ids are sorted.
struct PatternWitness {
  Pattern kind;
  std::vector<std::size_t> side_a;
  std::vector<std::size_t> side_b;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

// Lexicographically smallest K_{m,n} (by side_a, then side_b), requires 1 <= m <= n.
std::optional<PatternWitness> find_complete_bipartite(const Graph& g, std::size_t m, std::size_t n);

// Lexicographically smallest k-clique, requires k >= 1.
std::optional<PatternWitness> find_clique(const Graph& g, std::size_t k);

std::optional<PatternWitness> find_pattern(const Graph& g, const Pattern& p);

bool is_k33_free(const Graph& g);

// Sides disjoint, of the right sizes, and every required edge present.
bool witness_is_valid(const Graph& g, const PatternWitness& w);

}  // namespace igt

#endif  // IGT_FORBIDDEN_HPP
