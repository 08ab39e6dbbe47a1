// igt: build groups, enumerate subgroup lattices, export intersection graphs and
// check them for forbidden subgraphs.
//
// Exit codes: 0 success, 1 verification mismatch, 2 input error, 3 resource guard.

#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "igt/build.hpp"
#include "igt/catalog.hpp"
#include "igt/errors.hpp"
#include "igt/forbidden.hpp"
#include "igt/igraph.hpp"
#include "igt/lattice.hpp"

namespace {

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kGuard = 3 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw igt::InputError("cannot write " + path);
  out << text;
}

std::shared_ptr<const igt::FiniteGroup> load(const std::string& spec, const igt::Limits& limits) {
  return std::make_shared<const igt::FiniteGroup>(igt::build(spec, limits));
}

nlohmann::ordered_json group_json(const igt::FiniteGroup& g) {
  nlohmann::ordered_json mul = nlohmann::ordered_json::array();
  for (igt::Element x = 0; x < g.order(); ++x) {
    auto row = g.row(x);
    mul.push_back(std::vector<igt::Element>(row.begin(), row.end()));
  }
  std::vector<igt::Element> inv(g.order());
  for (igt::Element x = 0; x < g.order(); ++x) inv[x] = g.inv(x);
  return {{"spec", g.spec_text()},
          {"order", g.order()},
          {"identity", igt::FiniteGroup::identity},
          {"labels", std::vector<std::string>(g.labels().begin(), g.labels().end())},
          {"inv", inv},
          {"mul", mul}};
}

void print_report(const igt::Report& report) {
  std::cout << "# " << igt::Report::kFormat << "  max-order " << report.max_order
            << (report.extended ? "  extended" : "") << "\n"
            << "# theorem instances must be K3,3-free; the converse is checked on the negative corpus only\n";
  for (const auto& e : report.entries) {
    std::cout << (e.pass ? "PASS  " : "FAIL  ") << e.entry.spec_text << "  expected "
              << igt::to_string(e.entry.expected);
    if (e.result) {
      std::cout << " got " << igt::to_string(e.result->verdict) << "  [|G|=" << e.result->stats.order
                << " subgroups=" << e.result->stats.subgroups << " vertices=" << e.result->stats.vertices
                << " edges=" << e.result->stats.edges << "]";
    } else {
      std::cout << "  error: " << e.error;
    }
    if (!e.entry.note.empty()) std::cout << "  # " << e.entry.note;
    std::cout << "\n";
  }
  std::cout << (report.pass() ? "PASS" : "FAIL") << ": " << report.entries.size() - report.failures() << "/"
            << report.entries.size() << " entries as expected\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection graphs of finite groups and forbidden-subgraph checks"};
  app.require_subcommand(1);
  app.fallthrough();

  igt::Limits limits;
  app.add_option("--order-bound", limits.max_group_order, "Largest group order to build")->capture_default_str();
  app.add_option("--iso-bound", limits.max_iso_order, "Largest order for isomorphism tests")->capture_default_str();
  app.add_option("--subgroup-bound", limits.max_subgroups, "Largest subgroup count to enumerate")
      ->capture_default_str();

  std::string spec;
  std::string out_path;

  auto* build_cmd = app.add_subcommand("build", "Emit the group as JSON");
  build_cmd->add_option("spec", spec, "Group spec, e.g. \"C(2)*C(4)\"")->required();
  build_cmd->add_option("--out", out_path, "Output file");

  std::string lattice_format = "text";
  auto* lattice_cmd = app.add_subcommand("lattice", "Print per-order subgroup counts");
  lattice_cmd->add_option("spec", spec)->required();
  lattice_cmd->add_option("--format", lattice_format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string graph_format;
  auto* graph_cmd = app.add_subcommand("graph", "Export the intersection graph");
  graph_cmd->add_option("spec", spec)->required();
  graph_cmd->add_option("--format", graph_format, "dot or json")->required()->check(CLI::IsMember({"dot", "json"}));
  graph_cmd->add_option("--out", out_path, "Output file");

  std::string pattern_text;
  auto* check_cmd = app.add_subcommand("check", "Search the intersection graph for K<m>,<n> or K<k>");
  check_cmd->add_option("spec", spec)->required();
  check_cmd->add_option("--pattern", pattern_text, "K3,3, K5, K<k> or K<m>,<n>")->required();

  igt::VerifyOptions verify;
  std::string corpus_path;
  std::string report_path;
  auto* verify_cmd = app.add_subcommand("verify", "Check every theorem instance and the negative corpus");
  verify_cmd->add_option("--max-order", verify.max_order, "Largest theorem instance order")->capture_default_str();
  verify_cmd->add_option("--corpus", corpus_path, "Negative corpus file (default: built-in corpus)");
  verify_cmd->add_option("--jobs", verify.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  verify_cmd->add_flag("--extended", verify.extended, "Also run the smallest instances of items 9 and 5");
  verify_cmd->add_option("--report", report_path, "Write the JSON report to this file");

  auto* match_cmd = app.add_subcommand("match", "Name the theorem item the group belongs to");
  match_cmd->add_option("spec", spec)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*build_cmd) {
      emit(group_json(*load(spec, limits)).dump() + "\n", out_path);
    } else if (*lattice_cmd) {
      auto lattice = igt::enumerate_subgroups(load(spec, limits), limits.max_subgroups);
      if (lattice_format == "json") {
        std::cout << igt::lattice_to_json(lattice).dump() << "\n";
      } else {
        std::cout << lattice.group().spec_text() << "  order " << lattice.group().order() << "  subgroups "
                  << lattice.size() << "\n";
        for (auto [order, count] : lattice.counts_by_order()) std::cout << order << ": " << count << "\n";
      }
    } else if (*graph_cmd) {
      auto lattice = igt::enumerate_subgroups(load(spec, limits), limits.max_subgroups);
      auto gamma = igt::build_intersection_graph(lattice);
      emit(graph_format == "dot" ? igt::export_dot(gamma) : igt::export_json(gamma, lattice) + "\n", out_path);
    } else if (*check_cmd) {
      auto pattern = igt::parse_pattern(pattern_text);
      auto lattice = igt::enumerate_subgroups(load(spec, limits), limits.max_subgroups);
      auto gamma = igt::build_intersection_graph(lattice);
      auto witness = igt::find_pattern(gamma.graph, pattern);
      nlohmann::ordered_json out{{"group", lattice.group().spec_text()},
                                 {"pattern", igt::pattern_name(pattern)},
                                 {"found", witness.has_value()}};
      if (witness) {
        for (auto& v : witness->side_a) v = gamma.subgroup_ids[v];
        for (auto& v : witness->side_b) v = gamma.subgroup_ids[v];
        out["witness"] = igt::witness_to_json(*witness);
      }
      std::cout << out.dump() << "\n";
    } else if (*verify_cmd) {
      auto negative = corpus_path.empty() ? igt::default_negative_corpus() : igt::load_corpus(corpus_path);
      verify.limits = limits;
      auto report = igt::verify_theorem(verify, negative);
      print_report(report);
      if (!report_path.empty()) emit(report.to_json().dump(2) + "\n", report_path);
      return report.pass() ? kOk : kMismatch;
    } else if (*match_cmd) {
      auto item = igt::match_family(*load(spec, limits), limits);
      std::cout << (item ? "item " + std::to_string(*item) : std::string("none")) << "\n";
    }
  } catch (const igt::InputError& e) {
    std::cerr << "igt: " << e.what() << "\n";
    return kInputError;
  } catch (const igt::GuardExceeded& e) {
    std::cerr << "igt: " << e.what() << "\n";
    return kGuard;
  }
  return kOk;
}
