#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "igt/build.hpp"
#include "igt/catalog.hpp"
#include "igt/errors.hpp"

using namespace igt;

namespace {

bool has_spec(const std::vector<TheoremInstance>& list, const std::string& text) {
  return std::any_of(list.begin(), list.end(), [&](const TheoremInstance& t) { return t.spec_text == text; });
}

}  // namespace

TEST_SUITE("catalog") {
  TEST_CASE("families") {
    auto f = theorem_families();
    REQUIRE(f.size() == 9);
    for (std::size_t i = 0; i < f.size(); ++i) CHECK(f[i].item == static_cast<int>(i + 1));
  }

  TEST_CASE("instances up to order 8") {
    std::vector<std::string> specs;
    for (const auto& t : theorem_instances(8)) specs.push_back(t.spec_text);
    const std::vector<std::string> expected{"C(1)", "C(2)", "C(3)", "C(4)", "C(5)", "C(6)", "C(7)", "C(8)",
                                            "C(2)*C(2)", "C(4)*C(2)", "D(8)", "Dic(2)", "SDC(3,2,2)"};
    CHECK(specs == expected);
  }

  TEST_CASE("instances carry their order and respect the bound") {
    for (const auto& t : theorem_instances(100)) {
      CHECK(t.order <= 100);
      if (auto n = predicted_order(parse_spec(t.spec_text))) CHECK(*n == t.order);
    }
  }

  TEST_CASE("item 8 and the semidirect families") {
    auto up_to_24 = theorem_instances(24);
    CHECK(has_spec(up_to_24, "SDC(3,4,2)"));
    CHECK(has_spec(up_to_24, "D(18)"));
    CHECK(has_spec(up_to_24, "SDE(2,3,1)"));
    CHECK(has_spec(up_to_24, "C(8)*C(3)"));
    CHECK_FALSE(has_spec(up_to_24, "C(9)*C(3)"));
    auto up_to_136 = theorem_instances(136);
    CHECK(has_spec(up_to_136, "SDC(17,8,2)"));
    CHECK(has_spec(up_to_136, "C(9)*C(3)"));
    CHECK(has_spec(up_to_136, "SDE(3,3,2)"));
    CHECK(has_spec(up_to_136, "SDC(7,6,3)"));
  }

  TEST_CASE("extended instances") {
    auto ext = extended_instances();
    REQUIRE(ext.size() == 2);
    CHECK(ext[0].item == 9);
    CHECK(ext[0].spec_text == "SDC(17,8,2)");
    CHECK(ext[1].item == 5);
    CHECK(ext[1].spec_text == "SDE(17,9,7)");
    CHECK(ext[1].order == 2601);
  }

  TEST_CASE("negative corpus avoids the listed families") {
    for (const auto& e : default_negative_corpus()) {
      CHECK(e.expected == Verdict::ContainsK33);
      auto g = build(e.spec_text);
      CHECK_FALSE(match_family(g).has_value());
    }
  }

  TEST_CASE("corpus files") {
    std::istringstream in(
        "# comment\n"
        "\n"
        "K33Free C(24)   # cyclic\n"
        "  ContainsK33   C(2) * C(2) * C(2)\n");
    auto entries = parse_corpus(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].spec_text == "C(24)");
    CHECK(entries[0].expected == Verdict::K33Free);
    CHECK(entries[0].note == "cyclic");
    CHECK(entries[1].spec_text == "C(2) * C(2) * C(2)");
    CHECK(entries[1].expected == Verdict::ContainsK33);

    std::istringstream bad_verdict("Maybe C(4)\n");
    CHECK_THROWS_AS(parse_corpus(bad_verdict), InputError);
    std::istringstream bad_spec("K33Free D(7)\n");
    CHECK_THROWS_AS(parse_corpus(bad_spec), InputError);
    std::istringstream lone("K33Free\n");
    CHECK_THROWS_AS(parse_corpus(lone), InputError);
    CHECK_THROWS_AS(load_corpus("/nonexistent/corpus.txt"), InputError);
  }

  TEST_CASE("verdict names") {
    CHECK(parse_verdict(to_string(Verdict::K33Free)) == Verdict::K33Free);
    CHECK(parse_verdict(to_string(Verdict::ContainsK33)) == Verdict::ContainsK33);
    CHECK_FALSE(parse_verdict("k33free").has_value());
  }
}

TEST_SUITE("classify") {
  TEST_CASE("examples") {
    auto z24 = classify("C(24)");
    CHECK(z24.verdict == Verdict::K33Free);
    CHECK_FALSE(z24.witness.has_value());
    CHECK(z24.stats.subgroups == 8);
    CHECK(z24.stats.vertices == 6);
    CHECK(z24.stats.edges == 12);

    auto z36 = classify("C(36)");
    CHECK(z36.verdict == Verdict::ContainsK33);
    REQUIRE(z36.witness.has_value());
    CHECK(z36.witness->side_a == std::vector<std::size_t>{1, 2, 3});
    CHECK(z36.witness->side_b == std::vector<std::size_t>{4, 6, 7});

    CHECK(classify("SDC(3,4,2)").verdict == Verdict::K33Free);
    CHECK(classify("D(18)").verdict == Verdict::K33Free);
    CHECK(classify("Perm(5;(1 2 3),(1 2 3 4 5))").verdict == Verdict::ContainsK33);
  }

  TEST_CASE("deterministic") {
    auto a = classify("D(50)");
    auto b = classify("D(50)");
    CHECK(a.verdict == b.verdict);
    CHECK(a.witness == b.witness);
    CHECK(a.stats.counts_by_order == b.stats.counts_by_order);
  }

  TEST_CASE("errors propagate") {
    CHECK_THROWS_AS(classify("D(7)"), ParameterError);
    CHECK_THROWS_AS(classify("C(6000)"), GuardExceeded);
  }

  TEST_CASE("witness json") {
    PatternWitness w{CompleteBipartite{3, 3}, {1, 2, 3}, {4, 6, 7}};
    auto j = witness_to_json(w);
    CHECK(j["pattern"] == "K3,3");
    CHECK(j["side_a"] == std::vector<int>{1, 2, 3});
    PatternWitness c{Clique{4}, {0, 1, 2, 3}, {}};
    CHECK(witness_to_json(c)["members"].size() == 4);
  }
}

TEST_SUITE("verify") {
  TEST_CASE("small bound with the rank-3 elementary abelian group passes") {
    VerifyOptions opt;
    opt.max_order = 24;
    std::vector<CorpusEntry> negative{{"C(2)*C(2)*C(2)", Verdict::ContainsK33, ""}};
    auto report = verify_theorem(opt, negative);
    CHECK(report.pass());
    CHECK(report.entries.size() == theorem_instances(24).size() + 1);
    CHECK(report.entries.back().entry.spec_text == "C(2)*C(2)*C(2)");
  }

  TEST_CASE("a wrong expectation is reported") {
    VerifyOptions opt;
    opt.max_order = 12;
    std::vector<CorpusEntry> negative{{"C(2)*C(2)*C(2)", Verdict::K33Free, "deliberately wrong"},
                                      {"D(7)", Verdict::ContainsK33, "not a group"}};
    auto report = verify_theorem(opt, negative);
    CHECK_FALSE(report.pass());
    CHECK(report.failures() == 2);
    CHECK_FALSE(report.entries.back().error.empty());
    auto j = report.to_json();
    CHECK(j["format"] == Report::kFormat);
    CHECK(j["pass"] == false);
    CHECK(j["failures"] == 2);
  }

  TEST_CASE("thread count does not change the report") {
    VerifyOptions one, four;
    one.max_order = four.max_order = 60;
    four.jobs = 4;
    auto neg = default_negative_corpus();
    auto a = verify_theorem(one, neg);
    auto b = verify_theorem(four, neg);
    REQUIRE(a.entries.size() == b.entries.size());
    for (std::size_t i = 0; i < a.entries.size(); ++i) {
      CHECK(a.entries[i].entry.spec_text == b.entries[i].entry.spec_text);
      CHECK(a.entries[i].pass == b.entries[i].pass);
      CHECK(a.entries[i].result->witness == b.entries[i].result->witness);
    }
  }
}

TEST_SUITE("match") {
  TEST_CASE("examples") {
    CHECK(match_family(build("SDE(2,3,1)")) == 4);
    CHECK(match_family(build("D(18)")) == 8);
    CHECK(match_family(build("C(2)*C(3)")) == 1);
    CHECK(match_family(build("Perm(3;(1 2),(1 2 3))")) == 7);
    CHECK(match_family(build("Perm(4;(1 2 3 4),(1 3))")) == 3);
    CHECK_FALSE(match_family(build("Perm(4;(1 2),(1 2 3 4))")).has_value());
    CHECK_THROWS_AS(match_family(build("C(600)")), GuardExceeded);
  }
}
