#ifndef IGT_CATALOG_HPP
#define IGT_CATALOG_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "igt/errors.hpp"
#include "igt/forbidden.hpp"
#include "igt/group.hpp"

namespace igt {

enum class Verdict { K33Free, ContainsK33 };

std::string to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view text);

// One item of the classification list of K_{3,3}-free groups.
struct TheoremFamily {
  int item;
  std::string groups;
  std::string constraint;
};

std::span<const TheoremFamily> theorem_families();

struct TheoremInstance {
  int item;
  std::string spec_text;
  std::uint64_t order;
};

// Every instance of items 1-9 with order <= max_order, ordered by item and then
// by parameters. Semidirect parameters are the smallest valid alpha/beta;
// families with no valid parameter are skipped. Duplicated spec strings keep
// the lowest item.
std::vector<TheoremInstance> theorem_instances(std::uint64_t max_order);

// Smallest instances of items 9 and 5 regardless of any order cut-off:
// Z_q x| Z_{p^3} and (Z_p x Z_p) x| Z_{q^2}.
std::vector<TheoremInstance> extended_instances();

struct CorpusEntry {
  std::string spec_text;
  Verdict expected;
  std::string note;
};

// Groups expected to contain K_{3,3}; none of them belongs to a listed family.
std::vector<CorpusEntry> default_negative_corpus();

// Line format: "<K33Free|ContainsK33> <spec> [# note]". Blank lines and lines
// starting with '#' are ignored. Throws InputError naming the line.
std::vector<CorpusEntry> parse_corpus(std::istream& in);
std::vector<CorpusEntry> load_corpus(const std::string& path);

struct LatticeStats {
  std::size_t order = 0;
  std::size_t subgroups = 0;
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::map<std::size_t, std::size_t> counts_by_order;
};

struct Classification {
  std::string spec_text;
  Verdict verdict = Verdict::K33Free;
  std::optional<PatternWitness> witness;  // lattice subgroup ids
  LatticeStats stats;
  double seconds = 0;
};

// build -> axiom check -> enumerate_subgroups -> intersection graph -> K_{3,3} search.
Classification classify(std::string_view spec_text, const Limits& limits = {});

// {"pattern": "K3,3", "side_a": [...], "side_b": [...]}; cliques use "members".
nlohmann::ordered_json witness_to_json(const PatternWitness& w);

struct ReportEntry {
  CorpusEntry entry;
  std::optional<Classification> result;
  std::string error;
  bool pass = false;
};

struct Report {
  static constexpr const char* kFormat = "igt-report/1";
  std::uint64_t max_order = 0;
  bool extended = false;
  std::vector<ReportEntry> entries;

  std::size_t failures() const;
  bool pass() const { return failures() == 0; }
  nlohmann::ordered_json to_json() const;
};

// Classifies every entry, `jobs` at a time. Entry order is preserved.
Report run_corpus(std::span<const CorpusEntry> entries, unsigned jobs, const Limits& limits);

struct VerifyOptions {
  std::uint64_t max_order = 100;
  bool extended = false;
  unsigned jobs = 1;
  Limits limits;
};

// Positive entries are the theorem instances (expected K33Free), followed by
// the negative corpus.
Report verify_theorem(const VerifyOptions& options, std::span<const CorpusEntry> negative);

// Item number of the first theorem instance of the same order isomorphic to g.
// Throws GuardExceeded above limits.max_iso_order.
std::optional<int> match_family(const FiniteGroup& g, const Limits& limits = {});

}  // namespace igt

#endif  // IGT_CATALOG_HPP
