#include "igt/forbidden.hpp"

#include <cctype>
#include <charconv>

#include "igt/errors.hpp"

namespace igt {

namespace {

// Repeatedly drops vertices with fewer than `min_degree` surviving neighbours.
VertexSet core(const Graph& g, std::size_t min_degree) {
  VertexSet alive = g.empty_set();
  alive.set();
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto v = alive.find_first(); v != VertexSet::npos; v = alive.find_next(v))
      if ((g.neighbors(v) & alive).count() < min_degree) {
        alive.reset(v);
        changed = true;
      }
  }
  return alive;
}

// above[v] = {w : w > v}
std::vector<VertexSet> upper_masks(std::size_t n) {
  std::vector<VertexSet> above(n, VertexSet(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = v + 1; w < n; ++w) above[v].set(w);
  return above;
}

std::vector<std::size_t> first_bits(const VertexSet& s, std::size_t count) {
  std::vector<std::size_t> out;
  for (auto v = s.find_first(); v != VertexSet::npos && out.size() < count; v = s.find_next(v))
    out.push_back(v);
  return out;
}

class BipartiteSearch {
 public:
  BipartiteSearch(const Graph& g, std::size_t m, std::size_t n) : g_(g), m_(m), n_(n), above_(upper_masks(g.size())) {
    // Every vertex of a K_{m,n} with m <= n has degree >= m inside it.
    alive_ = core(g, m);
    candidates_ = g.empty_set();
    for (auto v = alive_.find_first(); v != VertexSet::npos; v = alive_.find_next(v))
      if ((g.neighbors(v) & alive_).count() >= n) candidates_.set(v);
  }

  std::optional<PatternWitness> run() {
    chosen_.clear();
    if (search(candidates_, alive_)) return witness_;
    return std::nullopt;
  }

 private:
  // `pool` holds the side-A vertices still eligible; `common` the common
  // neighbourhood of the vertices chosen so far.
  bool search(const VertexSet& pool, const VertexSet& common) {
    if (chosen_.size() == m_) {
      witness_ = PatternWitness{CompleteBipartite{m_, n_}, chosen_, first_bits(common, n_)};
      return true;
    }
    for (auto v = pool.find_first(); v != VertexSet::npos; v = pool.find_next(v)) {
      VertexSet next_common = common & g_.neighbors(v);
      if (next_common.count() < n_) continue;
      chosen_.push_back(v);
      if (search(pool & above_[v], next_common)) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t m_, n_;
  std::vector<VertexSet> above_;
  VertexSet alive_, candidates_;
  std::vector<std::size_t> chosen_;
  PatternWitness witness_;
};

class CliqueSearch {
 public:
  CliqueSearch(const Graph& g, std::size_t k) : g_(g), k_(k), above_(upper_masks(g.size())) {}

  std::optional<PatternWitness> run() {
    if (search(core(g_, k_ - 1))) return PatternWitness{Clique{k_}, chosen_, {}};
    return std::nullopt;
  }

 private:
  bool search(const VertexSet& candidates) {
    if (chosen_.size() == k_) return true;
    if (chosen_.size() + candidates.count() < k_) return false;
    for (auto v = candidates.find_first(); v != VertexSet::npos; v = candidates.find_next(v)) {
      chosen_.push_back(v);
      if (search(candidates & g_.neighbors(v) & above_[v])) return true;
      chosen_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  std::size_t k_;
  std::vector<VertexSet> above_;
  std::vector<std::size_t> chosen_;
};

std::size_t parse_count(std::string_view text, std::string_view whole) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || value == 0)
    throw InputError("invalid pattern \"" + std::string(whole) + "\": expected K<k> or K<m>,<n>");
  return value;
}

}  // namespace

Pattern parse_pattern(std::string_view text) {
  if (text.size() < 2 || (text[0] != 'K' && text[0] != 'k'))
    throw InputError("invalid pattern \"" + std::string(text) + "\": expected K<k> or K<m>,<n>");
  std::string_view body = text.substr(1);
  auto comma = body.find(',');
  if (comma == std::string_view::npos) return Clique{parse_count(body, text)};
  std::size_t m = parse_count(body.substr(0, comma), text);
  std::size_t n = parse_count(body.substr(comma + 1), text);
  if (m > n) std::swap(m, n);
  return CompleteBipartite{m, n};
}

std::string pattern_name(const Pattern& p) {
  if (auto* b = std::get_if<CompleteBipartite>(&p)) return "K" + std::to_string(b->m) + "," + std::to_string(b->n);
  return "K" + std::to_string(std::get<Clique>(p).k);
}

std::optional<PatternWitness> find_complete_bipartite(const Graph& g, std::size_t m, std::size_t n) {
  if (m == 0 || m > n) throw InputError("K_{m,n} search requires 1 <= m <= n");
  return BipartiteSearch(g, m, n).run();
}

std::optional<PatternWitness> find_clique(const Graph& g, std::size_t k) {
  if (k == 0) throw InputError("clique search requires k >= 1");
  return CliqueSearch(g, k).run();
}

std::optional<PatternWitness> find_pattern(const Graph& g, const Pattern& p) {
  if (auto* b = std::get_if<CompleteBipartite>(&p)) return find_complete_bipartite(g, b->m, b->n);
  return find_clique(g, std::get<Clique>(p).k);
}

bool is_k33_free(const Graph& g) { return !find_complete_bipartite(g, 3, 3); }

bool witness_is_valid(const Graph& g, const PatternWitness& w) {
  auto in_range = [&](const std::vector<std::size_t>& side) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      if (side[i] >= g.size()) return false;
      if (i && side[i - 1] >= side[i]) return false;
    }
    return true;
  };
  if (!in_range(w.side_a) || !in_range(w.side_b)) return false;

  if (auto* b = std::get_if<CompleteBipartite>(&w.kind)) {
    if (w.side_a.size() != b->m || w.side_b.size() != b->n) return false;
    for (auto u : w.side_a)
      for (auto v : w.side_b)
        if (u == v || !g.has_edge(u, v)) return false;
    return true;
  }
  const auto& c = std::get<Clique>(w.kind);
  if (w.side_a.size() != c.k || !w.side_b.empty()) return false;
  for (std::size_t i = 0; i < w.side_a.size(); ++i)
    for (std::size_t j = i + 1; j < w.side_a.size(); ++j)
      if (!g.has_edge(w.side_a[i], w.side_a[j])) return false;
  return true;
}

}  // namespace igt
