#include "igt/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <memory>
#include <set>
#include <sstream>
#include <thread>

#include "igt/build.hpp"
#include "igt/igraph.hpp"
#include "igt/isomorphism.hpp"
#include "igt/lattice.hpp"
#include "igt/numtheory.hpp"

namespace igt {

std::string to_string(Verdict v) { return v == Verdict::K33Free ? "K33Free" : "ContainsK33"; }

std::optional<Verdict> parse_verdict(std::string_view text) {
  if (text == "K33Free") return Verdict::K33Free;
  if (text == "ContainsK33") return Verdict::ContainsK33;
  return std::nullopt;
}

std::span<const TheoremFamily> theorem_families() {
  static const std::vector<TheoremFamily> families{
      {1, "Z_pqr, Z_p^2q, Z_pq, Z_p^i", "p, q, r distinct primes, 0 <= i <= 6"},
      {2, "Z_4 x Z_2, Z_p x Z_p, Z_2 x Z_2 x Z_p", "p prime; p != 2 in the last group"},
      {3, "D_8, Q_8", ""},
      {4, "Z_q x| Z_p^2, (Z_p x Z_p) x| Z_q", "p^2 | q-1; q | p+1 with theta eigenvalue-free"},
      {5, "(Z_p x Z_p) x| Z_q^2", "q^2 | p+1, theta^q eigenvalue-free (forces q odd)"},
      {6, "Z_r x| Z_pq", "pq | r-1, alpha of order pq"},
      {7, "Z_p x| Z_q", "q | p-1, p > q"},
      {8, "Z_p^3 x Z_q, Z_9 x Z_3, (Z_3 x Z_3) x| Z_3, Z_9 x| Z_3, Z_3 x| Z_4, D_18", "p, q distinct primes"},
      {9, "Z_q x| Z_p^3", "p^3 | q-1, alpha of order p^3"},
  };
  return families;
}

namespace {

// Z_9 x| Z_3 as affine maps x -> 4^k x + c on Z_9, points 1..9.
constexpr const char* kZ9SemidirectZ3 = "Perm(9;(1 2 3 4 5 6 7 8 9),(2 5 8)(3 9 6))";

std::string C(std::uint64_t n) { return "C(" + std::to_string(n) + ")"; }

std::string triple(const char* name, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

bool cyclic_order_listed(std::uint64_t n) {
  if (n == 1) return true;
  auto f = factorize(n);
  std::vector<unsigned> exps;
  for (auto [p, e] : f) exps.push_back(e);
  std::sort(exps.begin(), exps.end());
  if (exps.size() == 1) return exps[0] <= 6;
  if (exps.size() == 2) return exps == std::vector<unsigned>{1, 1} || exps == std::vector<unsigned>{1, 2};
  return exps == std::vector<unsigned>{1, 1, 1};
}

std::vector<TheoremInstance> instances_of(int item, std::uint64_t max_order) {
  std::vector<TheoremInstance> out;
  auto add = [&](std::string text, std::uint64_t order) {
    if (order <= max_order) out.push_back({item, std::move(text), order});
  };
  const auto primes = primes_up_to(std::max<std::uint64_t>(max_order, 2));

  switch (item) {
    case 1:
      for (std::uint64_t n = 1; n <= max_order; ++n)
        if (cyclic_order_listed(n)) add(C(n), n);
      break;
    case 2:
      add("C(4)*C(2)", 8);
      for (auto p : primes) add(C(p) + "*" + C(p), p * p);
      for (auto p : primes)
        if (p != 2) add("C(2)*C(2)*" + C(p), 4 * p);
      break;
    case 3:
      add("D(8)", 8);
      add("Dic(2)", 8);
      break;
    case 4:
      for (auto p : primes) {
        if (p * p > max_order) break;
        for (auto q : primes) {
          if (p * p * q > max_order) break;
          if ((q - 1) % (p * p) != 0) continue;
          if (auto alpha = find_alpha(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p * p)))
            add(triple("SDC", q, p * p, *alpha), q * p * p);
        }
      }
      for (auto p : primes) {
        if (p * p > max_order) break;
        for (auto q : primes) {
          if (p * p * q > max_order) break;
          if (q == p || (p + 1) % q != 0) continue;
          if (auto beta = find_beta(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)))
            add(triple("SDE", p, q, *beta), p * p * q);
        }
      }
      break;
    case 5:
      for (auto p : primes) {
        if (p * p > max_order) break;
        for (auto q : primes) {
          if (p * p * q * q > max_order) break;
          if (q == p || (p + 1) % (q * q) != 0) continue;
          if (auto beta = find_beta(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q * q)))
            add(triple("SDE", p, q * q, *beta), p * p * q * q);
        }
      }
      break;
    case 6:
      for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = i + 1; j < primes.size(); ++j) {
          const auto pq = primes[i] * primes[j];
          if (pq > max_order) break;
          for (auto r : primes) {
            if (r * pq > max_order) break;
            if ((r - 1) % pq != 0) continue;
            if (auto alpha = find_alpha(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(pq)))
              add(triple("SDC", r, pq, *alpha), r * pq);
          }
        }
      break;
    case 7:
      for (auto q : primes)
        for (auto p : primes) {
          if (p * q > max_order) break;
          if (p <= q || (p - 1) % q != 0) continue;
          if (auto alpha = find_alpha(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(q)))
            add(triple("SDC", p, q, *alpha), p * q);
        }
      break;
    case 8: {
      for (auto p : primes) {
        if (p * p * p > max_order) break;
        for (auto q : primes)
          if (q != p) add(C(p * p * p) + "*" + C(q), p * p * p * q);
      }
      add("C(9)*C(3)", 27);
      if (auto beta = smallest_beta_of_order(3, 3)) add(triple("SDE", 3, 3, *beta), 27);
      add(kZ9SemidirectZ3, 27);
      add(triple("SDC", 3, 4, *find_alpha(3, 2)), 12);
      add("D(18)", 18);
      break;
    }
    case 9:
      for (auto p : primes) {
        if (p * p * p > max_order) break;
        for (auto q : primes) {
          if (p * p * p * q > max_order) break;
          if ((q - 1) % (p * p * p) != 0) continue;
          if (auto alpha = find_alpha(static_cast<std::uint32_t>(q), static_cast<std::uint32_t>(p * p * p)))
            add(triple("SDC", q, p * p * p, *alpha), p * p * p * q);
        }
      }
      break;
    default:
      break;
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const TheoremInstance& a, const TheoremInstance& b) { return a.order < b.order; });
  return out;
}

TheoremInstance smallest_instance(int item) {
  for (std::uint64_t bound = 16;; bound *= 2) {
    auto found = instances_of(item, bound);
    if (!found.empty()) return found.front();
  }
}

template <class Json>
Json stats_json(const LatticeStats& s) {
  Json counts = Json::object();
  for (auto [order, count] : s.counts_by_order) counts[std::to_string(order)] = count;
  return {{"order", s.order},
          {"subgroups", s.subgroups},
          {"vertices", s.vertices},
          {"edges", s.edges},
          {"counts_by_order", counts}};
}

}  // namespace

std::vector<TheoremInstance> theorem_instances(std::uint64_t max_order) {
  std::vector<TheoremInstance> out;
  std::set<std::string> seen;
  for (int item = 1; item <= 9; ++item)
    for (auto& inst : instances_of(item, max_order))
      if (seen.insert(inst.spec_text).second) out.push_back(std::move(inst));
  return out;
}

std::vector<TheoremInstance> extended_instances() { return {smallest_instance(9), smallest_instance(5)}; }

std::vector<CorpusEntry> default_negative_corpus() {
  const auto c = Verdict::ContainsK33;
  return {
      {"C(128)", c, "cyclic of order p^7: six proper subgroups form K6"},
      {"C(36)", c, "cyclic of order p^2 q^2"},
      {"C(2)*C(2)*C(2)", c, "elementary abelian of rank 3: seven maximal subgroups form K7"},
      {"C(25)*C(5)", c, "Z_p^2 x Z_p with p = 5: K_{p+2} = K7"},
      {"C(27)*C(3)", c, "Z_p^3 x Z_p with p = 3"},
      {"D(50)", c, "non-listed group of order p^2 q"},
      {"C(3)*C(3)*C(2)", c, "(Z_p x Z_p) x Z_q with p = 3"},
      {"Perm(4;(1 2),(1 2 3 4))", c, "S_4"},
      {"Perm(5;(1 2 3),(1 2 3 4 5))", c, "A_5, minimal simple"},
      {"SDE(3,4,0)", c, "(Z_3 x Z_3) x| Z_4 with theta^2 = -I having eigenvalues"},
  };
}

std::vector<CorpusEntry> parse_corpus(std::istream& in) {
  std::vector<CorpusEntry> out;
  std::string line;
  for (std::size_t number = 1; std::getline(in, line); ++number) {
    std::string note;
    if (auto hash = line.find('#'); hash != std::string::npos) {
      note = line.substr(hash + 1);
      line.resize(hash);
    }
    auto trim = [](std::string& s) {
      s.erase(0, s.find_first_not_of(" \t\r"));
      s.erase(s.find_last_not_of(" \t\r") + 1);
    };
    trim(line);
    trim(note);
    if (line.empty()) continue;
    auto space = line.find_first_of(" \t");
    if (space == std::string::npos)
      throw InputError("corpus line " + std::to_string(number) + ": expected \"<verdict> <spec>\"");
    auto verdict = parse_verdict(line.substr(0, space));
    if (!verdict)
      throw InputError("corpus line " + std::to_string(number) + ": verdict must be K33Free or ContainsK33");
    std::string spec = line.substr(space + 1);
    trim(spec);
    try {
      parse_spec(spec);
    } catch (const InputError& e) {
      throw InputError("corpus line " + std::to_string(number) + ": " + e.what());
    }
    out.push_back({spec, *verdict, note});
  }
  return out;
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus file " + path);
  return parse_corpus(in);
}

Classification classify(std::string_view spec_text, const Limits& limits) {
  const auto start = std::chrono::steady_clock::now();
  auto group = std::make_shared<const FiniteGroup>(build(spec_text, limits));
  if (auto violation = find_axiom_violation(*group))
    throw std::logic_error("built table for " + group->spec_text() + " is not a group: " + *violation);
  auto lattice = enumerate_subgroups(group, limits.max_subgroups);
  auto gamma = build_intersection_graph(lattice);

  Classification out;
  out.spec_text = group->spec_text();
  out.stats = {group->order(), lattice.size(), gamma.size(), gamma.graph.edge_count(), lattice.counts_by_order()};
  if (auto w = find_complete_bipartite(gamma.graph, 3, 3)) {
    for (auto& v : w->side_a) v = gamma.subgroup_ids[v];
    for (auto& v : w->side_b) v = gamma.subgroup_ids[v];
    out.verdict = Verdict::ContainsK33;
    out.witness = std::move(w);
  }
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

nlohmann::ordered_json witness_to_json(const PatternWitness& w) {
  nlohmann::ordered_json out{{"pattern", pattern_name(w.kind)}};
  if (std::holds_alternative<Clique>(w.kind)) {
    out["members"] = w.side_a;
  } else {
    out["side_a"] = w.side_a;
    out["side_b"] = w.side_b;
  }
  return out;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const ReportEntry& e) { return !e.pass; }));
}

nlohmann::ordered_json Report::to_json() const {
  using Json = nlohmann::ordered_json;
  Json rows = Json::array();
  for (const auto& e : entries) {
    Json row{{"spec", e.entry.spec_text}, {"expected", to_string(e.entry.expected)}, {"note", e.entry.note}};
    if (e.result) {
      row["actual"] = to_string(e.result->verdict);
      row["witness"] = e.result->witness ? witness_to_json(*e.result->witness) : Json(nullptr);
      row["lattice"] = stats_json<Json>(e.result->stats);
      row["seconds"] = e.result->seconds;
    } else {
      row["actual"] = nullptr;
      row["error"] = e.error;
    }
    row["pass"] = e.pass;
    rows.push_back(std::move(row));
  }
  return Json{{"format", kFormat},
              {"scope",
               "theorem instances are checked to be K3,3-free; the converse is checked only on the "
               "listed negative corpus, not on all groups of each order"},
              {"glossary",
               {"Groups are classified as standalone instances; statements about a group occurring as "
                "a proper subgroup of a larger group are not modelled."}},
              {"max_order", max_order},
              {"extended", extended},
              {"pass", pass()},
              {"failures", failures()},
              {"entries", rows}};
}

Report run_corpus(std::span<const CorpusEntry> entries, unsigned jobs, const Limits& limits) {
  Report report;
  report.entries.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      ReportEntry& slot = report.entries[i];
      slot.entry = entries[i];
      try {
        slot.result = classify(entries[i].spec_text, limits);
        slot.pass = slot.result->verdict == entries[i].expected;
      } catch (const std::exception& e) {
        slot.error = e.what();
        slot.pass = false;
      }
    }
  };
  const unsigned threads = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(entries.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();
  return report;
}

Report verify_theorem(const VerifyOptions& options, std::span<const CorpusEntry> negative) {
  std::vector<CorpusEntry> entries;
  auto positives = theorem_instances(options.max_order);
  if (options.extended)
    for (auto& inst : extended_instances())
      if (std::none_of(positives.begin(), positives.end(),
                       [&](const TheoremInstance& p) { return p.spec_text == inst.spec_text; }))
        positives.push_back(inst);
  for (const auto& inst : positives)
    entries.push_back({inst.spec_text, Verdict::K33Free, "item " + std::to_string(inst.item)});
  entries.insert(entries.end(), negative.begin(), negative.end());

  Report report = run_corpus(entries, options.jobs, options.limits);
  report.max_order = options.max_order;
  report.extended = options.extended;
  return report;
}

std::optional<int> match_family(const FiniteGroup& g, const Limits& limits) {
  if (g.order() > limits.max_iso_order)
    throw GuardExceeded("family matching limited to order " + std::to_string(limits.max_iso_order));
  for (const auto& inst : theorem_instances(g.order())) {
    if (inst.order != g.order()) continue;
    if (are_isomorphic(g, build(inst.spec_text, limits), limits.max_iso_order)) return inst.item;
  }
  return std::nullopt;
}

}  // namespace igt
