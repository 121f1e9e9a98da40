#include "fano/builtin.hpp"
#include "fano/scenario.hpp"

#include <gtest/gtest.h>

#include <map>
#include <set>

using namespace fano;

namespace {

const std::vector<Scenario>& builtins() {
  static const std::vector<Scenario> all = builtin_scenarios();
  return all;
}

const AssertionResult* find(const Report& r, std::string_view scenario, std::string_view label) {
  for (const auto& s : r.scenarios)
    if (s.name == scenario)
      for (const auto& a : s.assertions)
        if (a.label == label) return &a;
  return nullptr;
}

Report run_source(std::string_view src) { return run(dsl::parse(src).scenarios); }

}  // namespace

TEST(Builtin, ExactlyTheTenScenarios) {
  std::set<std::string> names;
  for (const auto& s : builtins()) names.insert(s.name);
  EXPECT_EQ(names, (std::set<std::string>{"gr25-chern", "gr26-v14-plane", "moduli-counts", "sanity-p4-line",
                                          "v12-link", "v14-link", "w22-line-link", "w5-invariants",
                                          "w5-pi-link", "w5-xi-link"}));
  EXPECT_EQ(builtins().size(), 10u);
  EXPECT_NE(find_scenario(builtins(), "v14-link"), nullptr);
  EXPECT_EQ(find_scenario(builtins(), "nope"), nullptr);
}

TEST(Builtin, AllPass) {
  const Report r = run(builtins());
  EXPECT_EQ(r.failed, 0u) << format_text(r);
  EXPECT_GT(r.total, 80u);
  for (const auto& s : r.scenarios) EXPECT_TRUE(s.pass) << s.name;
}

TEST(Builtin, SpecificAssertions) {
  const Report r = run(builtins());
  const auto* genus = find(r, "v12-link", "genus");
  ASSERT_NE(genus, nullptr);
  EXPECT_EQ(genus->actual, 7);
  const auto* codim = find(r, "moduli-counts", "v14 codim");
  ASSERT_NE(codim, nullptr);
  EXPECT_EQ(codim->actual, 1);
  const auto* matrix = find(r, "w5-invariants", "intersection matrix");
  ASSERT_NE(matrix, nullptr);
  EXPECT_EQ(matrix->actual, nlohmann::json::parse("[[2,-1],[-1,1]]"));
}

// Every number taken from the source text is asserted exactly once.
TEST(Builtin, EachSourcedNumberIsAssertedOnce) {
  const std::vector<std::tuple<std::string, std::string, nlohmann::json>> sourced{
      {"gr25-chern", "Gr(2,5) Chern classes: c_2(G) = 11 sigma_{2,0} + 12 sigma_{1,1}", "11*s(2)+12*s(1,1)"},
      {"w5-invariants", "W_5 Chern classes: Eu(W) = 6", 6},
      {"w5-invariants", "sigma_{2,2}-plane in W_5: c_2(N_{Lambda/W}) = 2", nlohmann::json::parse("[[0,2]]")},
      {"w5-invariants", "W_5 planes: the intersection matrix of Xi and Pi is unimodular", 1},
      {"w22-line-link", "W_22 line link: L^4 = (rho^*H - E)^4 = 1", 1},
      {"w22-line-link", "W_22 line link: (rho^*H - E)^3.(2 rho^*H - 3E) = 0", 0},
      {"w22-line-link", "W_22 line link: L^2.D^2 = -5", -5},
      {"w22-line-link", "W_22 line link: dim |rho^*H - E| = 4", 5},
      {"w5-xi-link", "W_5 Xi link: (H^* - E)^4 = 1", 1},
      {"w5-xi-link", "W_5 Xi link: (H^* - E)^3.E = 1", 1},
      {"w5-xi-link", "W_5 Xi link: 2 - k >= 0 at k = 2", 0},
      {"w5-pi-link", "W_5 Pi link: L^4 = (rho^*H - E)^4 = 0", 0},
      {"w5-pi-link", "W_5 Pi link: (rho^*H - E)^3.E = 2", 2},
      {"w5-pi-link", "W_5 Pi link: deg Y = 1", 1},
      {"w5-pi-link", "W_5 Pi link: Eu = 8 + n", 1},
      {"w5-pi-link", "W_5 Pi link: Eu = Eu(W) + 3 = 9", 9},
      {"w5-pi-link", "W_5 Pi link: dim |rho^*H - E| = 4", 5},
      {"gr26-v14-plane", "sigma_{4,2}-plane in V_14: c_1(N) = -l, c_2(N_{Pi/V}) = 2", nlohmann::json::parse("[[-1,2]]")},
      {"v14-link", "V_14 link: L^4 = (rho^*H - E)^4 = 5", 5},
      {"v14-link", "V_14 link: dim |rho^*H - E| = 7", 8},
      {"v14-link", "V_14 link: (rho^*H - E)^2.D^2 = -7", -7},
      {"v14-link", "V_14 link: deg upsilon(E) = (rho^*H - E)^3.E = 5", 5},
      {"v14-link", "V_14 link: L^2.F = 7", 7},
      {"v14-link", "V_14 link: L.(-K_F) = 5", 5},
      {"v14-link", "V_14 link: Eu(F) = 9", 9},
      {"v14-link", "V_14 link: K_F^2 = 3 by Noether", 3},
      {"v14-link", "V_14 link: rk Pic(F) = 7", 7},
      {"v14-link", "V_14 link: smooth curve of genus 2", 2},
      {"v12-link", "V_12 link: L^4 = (2 rho^*H - E)^4 = 12", 12},
      {"v12-link", "V_12 link: g = L^4/2 + 1 = 7", 7},
      {"v12-link", "V_12 link: dim |2 rho^*H - E| = 9", 10},
      {"v12-link", "V_12 link: (2 rho^*H - E)^2.D^2 = -1", -1},
      {"v12-link", "V_12 link: (2 rho^*H - E)^3.D = -12(k-1) at k = 1", 0},
      {"v12-link", "V_12 link: L^2.phi(D) = 1", 1},
      {"moduli-counts", "V_14 codimension count: G = Gr(8,12), dim G = 32", 32},
      {"moduli-counts", "V_14 codimension count: dim Gr(11,15) = 44", 44},
      {"moduli-counts", "V_14 codimension count: dim G + dim P = 32 + 11 = 43", 43},
      {"moduli-counts", "V_14 codimension count: codimension 1", 1},
      {"moduli-counts", "V_12 dimension count: 5 + 7 = 12", 12},
      {"moduli-counts", "V_12 dimension count: 20 - 7 = 13", 13},
  };
  const Report r = run(builtins());
  std::map<std::string, int> cite_count;
  for (const auto& s : r.scenarios)
    for (const auto& a : s.assertions) ++cite_count[a.cite];
  for (const auto& [scenario, cite, expected] : sourced) {
    EXPECT_EQ(cite_count[cite], 1) << cite;
    const AssertionResult* hit = nullptr;
    for (const auto& s : r.scenarios)
      if (s.name == scenario)
        for (const auto& a : s.assertions)
          if (a.cite == cite) hit = &a;
    ASSERT_NE(hit, nullptr) << scenario << ": " << cite;
    EXPECT_TRUE(hit->pass) << cite;
    if (expected.is_string()) {
      EXPECT_EQ(hit->actual_text, expected.get<std::string>()) << cite;
    } else {
      EXPECT_EQ(hit->actual, expected) << cite;
    }
  }
}

TEST(Builtin, TyposAreNotesWithTheirActualValue) {
  const Report r = run(builtins());
  const auto* printed = find(r, "v14-link", "printed L^3.(H-3E)");
  ASSERT_NE(printed, nullptr);
  EXPECT_EQ(printed->actual, -5);
  for (const auto& s : r.scenarios) {
    if (s.name == "v14-link" || s.name == "w22-line-link") {
      EXPECT_FALSE(s.notes.empty()) << s.name;
    }
  }
}

TEST(Run, DeliberateMismatchReportsActual) {
  const Report r = run_source(R"(scenario "typo" {
  profile W22 h4 4 index 3 c2h2 20 chi 1 euler 12
  center curve genus 0 hc 1
  assert "L^4" quartic(H - E, H - E, H - E, H - E) == 0 cite "deliberate"
})");
  EXPECT_EQ(r.total, 1u);
  EXPECT_EQ(r.failed, 1u);
  EXPECT_EQ(r.scenarios[0].assertions[0].actual, 1);
  EXPECT_EQ(r.scenarios[0].assertions[0].expected, 0);
  EXPECT_FALSE(r.scenarios[0].pass);
}

TEST(Run, EmptyList) {
  const Report r = run({});
  EXPECT_EQ(r.total, 0u);
  EXPECT_EQ(r.failed, 0u);
  EXPECT_TRUE(r.scenarios.empty());
  EXPECT_EQ(report_json(r).dump(), R"({"failed":0,"scenarios":[],"total":0})");
}

TEST(Run, SetupErrorsBecomeFailures) {
  const Report r = run_source(R"(scenario "bad" {
  profile X h4 0 index 3 c2h2 20 chi 1 euler 12
  center curve genus 0 hc 1
  assert quartic(H, H, H, H) == 4 cite "c"
  assert 1 == 1 cite "c"
})");
  ASSERT_EQ(r.scenarios.size(), 1u);
  const auto& a = r.scenarios[0].assertions;
  ASSERT_GE(a.size(), 2u);
  EXPECT_EQ(a[0].label.rfind("setup: ", 0), 0u);
  EXPECT_FALSE(a[0].pass);
  EXPECT_TRUE(a.back().pass);
  EXPECT_EQ(r.failed, a.size() - 1);
}

TEST(Run, EvaluationErrorsAreFailuresNotAborts) {
  const Report r = run_source(R"(scenario "e" {
  assert "no model" quartic(H, H, H, H) == 1 cite "c"
  assert "unknown" nosuch(1) == 1 cite "c"
  assert "div by zero" solve(1, 0, 1) == 1 cite "c"
  assert "ok" 2 + 2 == 4 cite "c"
})");
  EXPECT_EQ(r.total, 4u);
  EXPECT_EQ(r.failed, 3u);
  EXPECT_NE(r.scenarios[0].assertions[1].actual_text.find("error"), std::string::npos);
}

TEST(Run, AmbientLiteralsAreCrossChecked) {
  const Report bad = run_source(R"(scenario "x" {
  profile W5 h4 6 index 3 ambient gr2_5 codim 2 chi 1 euler 6
})");
  EXPECT_EQ(bad.failed, 1u);
  const Report good = run_source(R"(scenario "x" {
  profile W5 h4 5 index 3 ambient gr2_5 codim 2 chi 1 euler 6
  assert c2n() != 0 cite "needs a centre"
})");
  EXPECT_EQ(good.total, 1u);
  EXPECT_EQ(good.failed, 1u);
}

TEST(Run, ValuesAndCoercions) {
  const Report r = run_source(R"(scenario "v" {
  grassmannian 2 5
  let x = 3
  assert x^2 == 9 cite "c"
  assert solve(0, 2, 1) != 1 cite "rational"
  assert solve(0, 2, 2) == 1 cite "integral rational"
  assert sigma[1]^2 == sigma[2] + sigma[1,1] cite "pieri"
  assert degree(sigma[1]^6) == 5 cite "degree"
  assert 2*H - E == -E + 2*H cite "divisors"
  assert [[1, 2], [3, 4]] * [[0, 1], [1, 0]] == [[2, 1], [4, 3]] cite "matrix"
  assert det([[2, 1], [1, 1]]) == 1 cite "det"
  assert true != false cite "bool"
  assert 2^100 == 1267650600228229401496703205376 cite "big"
})");
  EXPECT_EQ(r.failed, 0u) << format_text(r);
}

TEST(Run, ResourceLimits) {
  const Report r = run_source(R"(scenario "v" {
  assert 2^100000000 == 0 cite "too big"
  grassmannian 2 40
})");
  EXPECT_EQ(r.failed, 2u);
}

TEST(Run, Determinism) {
  const std::string a = format_json(run(builtins()));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(format_json(run(builtins())), a);
  EXPECT_EQ(format_text(run(builtins()), true), format_text(run(builtins()), true));
}

TEST(Run, OrderedByScenarioName) {
  std::vector<Scenario> reversed(builtins().rbegin(), builtins().rend());
  const Report r = run(reversed);
  for (std::size_t i = 1; i < r.scenarios.size(); ++i) EXPECT_LT(r.scenarios[i - 1].name, r.scenarios[i].name);
  EXPECT_EQ(format_json(r), format_json(run(builtins())));
}

TEST(Run, SubsetsGiveTheSameResults) {
  const Report full = run(builtins());
  for (std::size_t i = 0; i < builtins().size(); ++i) {
    const Report single = run({builtins()[i]});
    const auto it = std::find_if(full.scenarios.begin(), full.scenarios.end(),
                                 [&](const auto& s) { return s.name == builtins()[i].name; });
    ASSERT_NE(it, full.scenarios.end());
    EXPECT_EQ(report_json(single)["scenarios"][0], report_json(Report{{*it}, 0, 0})["scenarios"][0]);
  }
  const Report pair = run({builtins()[0], builtins()[5]});
  EXPECT_EQ(pair.scenarios.size(), 2u);
}

TEST(Report, JsonSchema) {
  const Report r = run({*find_scenario(builtins(), "w22-line-link")});
  const auto j = report_json(r);
  EXPECT_EQ(j.size(), 3u);
  EXPECT_TRUE(j.contains("scenarios"));
  EXPECT_EQ(j["total"], r.total);
  EXPECT_EQ(j["failed"], 0);
  const auto& s = j["scenarios"][0];
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s["name"], "w22-line-link");
  EXPECT_EQ(s["pass"], true);
  for (const auto& a : s["assertions"]) {
    EXPECT_EQ(a.size(), 5u);
    for (const char* key : {"label", "expected", "actual", "pass", "cite"}) EXPECT_TRUE(a.contains(key)) << key;
  }
  const std::string text = format_json(r);
  EXPECT_LT(text.find("\"failed\""), text.find("\"scenarios\""));
  EXPECT_EQ(text.find("\"timestamp\""), std::string::npos);
  EXPECT_NE(format_json(r, true).find("\"timestamp\""), std::string::npos);
}

TEST(Report, TextFormat) {
  const Report r = run({*find_scenario(builtins(), "w22-line-link")});
  const std::string plain = format_text(r);
  EXPECT_EQ(plain.rfind("ok    w22-line-link\n", 0), 0u);
  EXPECT_NE(plain.find("  PASS  L^4  expected 1  actual 1"), std::string::npos);
  EXPECT_NE(plain.find("6 assertions, 0 failed"), std::string::npos);
  EXPECT_EQ(plain.find("note"), std::string::npos);
  EXPECT_NE(format_text(r, true).find("  note  "), std::string::npos);
}

TEST(EmitRoundTrip, ReproducesResults) {
  for (const auto& s : builtins()) {
    const auto doc = dsl::parse(dsl::print(s));
    ASSERT_EQ(doc.scenarios.size(), 1u);
    EXPECT_EQ(doc.scenarios[0], s);
    EXPECT_EQ(format_json(run(doc.scenarios)), format_json(run({s}))) << s.name;
  }
}
