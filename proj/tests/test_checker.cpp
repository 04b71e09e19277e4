#include "doctest.h"

#include <fstream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "epc/checker.hpp"
#include "epc/engine.hpp"
#include "epc/parser.hpp"
#include "epc/sccs.hpp"
#include "support/oracles.hpp"

using namespace epc;

namespace {

std::string slurp(const std::string &path) {
  std::ifstream in(path);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

ModelDef fixture_model(const std::string &name) {
  return parse_model(slurp(std::string(EPC_MODELS_DIR) + "/" + name));
}

int state_index(const StateSpace &space, const StateId &s) {
  for (std::size_t i = 0; i < space.configs.size(); ++i)
    if (space.configs[i].state == s) return (int)i;
  REQUIRE(false);
  return -1;
}

std::set<std::set<int>> as_set(const std::vector<std::vector<int>> &groups) {
  std::set<std::set<int>> out;
  for (const auto &g : groups) out.insert(std::set<int>(g.begin(), g.end()));
  return out;
}

} // namespace

TEST_SUITE("checker") {

TEST_CASE("component search handles the degenerate shapes") {
  using testgen::digraph_space;
  using testgen::full_graph;

  StateSpace lone = digraph_space(1, {});
  auto sccs = find_sccs(full_graph(lone), 0);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0] == std::vector<int>{0});

  StateSpace pair = digraph_space(2, {{0, 1}, {1, 0}});
  sccs = find_sccs(full_graph(pair), 0);
  REQUIRE(sccs.size() == 1);
  CHECK(sccs[0] == std::vector<int>{0, 1});

  StateSpace chain = digraph_space(3, {{0, 1}, {1, 2}});
  sccs = find_sccs(full_graph(chain), 0);
  REQUIRE(sccs.size() == 3);
  // completion order puts the sink first
  CHECK(sccs[0] == std::vector<int>{2});
  CHECK(sccs[2] == std::vector<int>{0});

  // vertices outside the root's reach are not reported
  StateSpace split = digraph_space(4, {{0, 1}, {2, 3}});
  sccs = find_sccs(full_graph(split), 0);
  CHECK(as_set(sccs) == std::set<std::set<int>>{{0}, {1}});
}

TEST_CASE("component search on the uav loop strategy") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);

  PartialStrategy strat;
  strat.coalition = m.agents;
  strat.domain = {"s0", "s1", "s2", "s4"};
  strat.choice.emplace("s0", SyncTauAction{"GCS", "UAV0"});
  strat.choice.emplace("s1", SyncTauAction{"UAV0", "GCS"}); // branch to s2
  strat.choice.emplace("s2", SyncTauAction{"UAV1", "GCS"});
  strat.choice.emplace("s4", SyncTauAction{"GCS", "UAV0"});

  OutcomeGraph g = outcome_graph(space, m.agents, strat);
  auto sccs = find_sccs(g, space.init);
  REQUIRE(sccs.size() == 2);
  // the cycle completes before the entry vertex
  CHECK(sccs[0] == std::vector<int>{state_index(space, "s1"),
                                    state_index(space, "s2"),
                                    state_index(space, "s4")});
  CHECK(sccs[1] == std::vector<int>{space.init});
}

TEST_CASE("component search agrees with the closure oracle") {
  std::mt19937 rng(607);
  for (int round = 0; round < 150; ++round) {
    int n = 2 + (int)(rng() % 29u);
    double density = 0.05 + 0.45 * (double)(rng() % 100u) / 100.0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if ((double)(rng() % 1000u) / 1000.0 < density)
          edges.push_back({i, j});
    StateSpace space = testgen::digraph_space(n, edges);
    OutcomeGraph g = testgen::full_graph(space);
    int root = (int)(rng() % (unsigned)n);

    auto mine = find_sccs(g, root);
    auto oracle = testgen::scc_oracle(g, root);
    CHECK(as_set(mine) == as_set(oracle));

    // sinks-first: no kept edge may lead from an emitted component to a
    // component emitted later
    std::map<int, std::size_t> pos;
    for (std::size_t k = 0; k < mine.size(); ++k)
      for (int v : mine[k]) pos[v] = k;
    for (const auto &[from, to] : edges)
      if (pos.count(from) && pos.count(to)) CHECK(pos[from] >= pos[to]);
  }
}

TEST_CASE("component search respects the vertex mask") {
  StateSpace space =
      testgen::digraph_space(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
  OutcomeGraph g = testgen::full_graph(space);
  std::vector<char> mask{1, 1, 0, 1}; // cut the cycle at vertex 2
  auto sccs = find_sccs(g, 0, &mask);
  CHECK(as_set(sccs) == std::set<std::set<int>>{{0}, {1}});
  std::vector<char> none{0, 1, 1, 1};
  CHECK(find_sccs(g, 0, &none).empty());
}

TEST_CASE("boolean and knowledge layers at the uav configurations") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  Checker checker(space, m);
  auto at = [&](const StateId &s, const std::string &text) {
    return checker.run(state_index(space, s), parse_formula(text, m)).value;
  };

  CHECK(at("s1", "q0"));
  CHECK(at("s0", "!q0"));
  CHECK(at("s2", "p0 \\/ p1"));
  CHECK_FALSE(at("s2", "p0"));
  CHECK(at("s2", "q1 -> q0"));

  CHECK(at("s1", "K{UAV1}(q0)"));
  CHECK_FALSE(at("s3", "K{UAV0}(p0)")); // confused with s0 where p0 fails
  CHECK(at("s3", "p0"));

  CHECK_FALSE(at("s4", "E{UAV0,UAV1,GCS}(p0)"));
  CHECK(at("s1", "E{UAV0,UAV1,GCS}(q0)"));
  CHECK(at("s1", "K{UAV0}(q0)") == at("s1", "E{UAV0}(q0)"));

  CHECK(at("s1", "D{UAV0,UAV1,GCS}(q0)"));
  CHECK_FALSE(at("s0", "D{UAV0,UAV1,GCS}(q0)"));
  CHECK(at("s2", "D{UAV0,UAV1,GCS}(q0)"));

  CHECK(at("s0", "C{UAV0,UAV1,GCS}(q1 -> q0)"));
  CHECK_FALSE(at("s0", "C{UAV0,UAV1,GCS}(!q0)"));
}

TEST_CASE("coalition operators at the uav start") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  Checker checker(space, m);
  auto verdict = [&](const std::string &text) {
    return checker.run(space.init, parse_formula(text, m));
  };

  Verdict x = verdict("<<UAV0,UAV1,GCS>>X(K{UAV0}(K{UAV1}(q0)))");
  CHECK(x.value);
  REQUIRE(x.witness.has_value());
  CHECK(x.witness->domain.count("s0") == 1);

  CHECK_FALSE(verdict("<<UAV0,UAV1>>X(q0 \\/ !q0)").value);
  CHECK(verdict("<<UAV0,UAV1,GCS>>G(C{UAV0,UAV1,GCS}(q1 -> q0))").value);
  CHECK_FALSE(verdict("<<UAV0,UAV1,GCS>>G(q0)").value);
  CHECK(verdict("<<UAV0,UAV1,GCS>>G(q0 \\/ !q0)").value);

  CHECK(verdict("<<UAV0,UAV1,GCS>>F(D{UAV0,UAV1,GCS}(q0))").value);
  CHECK_FALSE(verdict("<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))").value);
  CHECK_FALSE(verdict("<<UAV0,UAV1>>F(D{UAV0,UAV1,GCS}(q0))").value);

  CHECK(verdict("<<UAV0,UAV1,GCS>>(p0 U !q0)").value); // satisfied at once
  CHECK(verdict("<<UAV0,UAV1,GCS>>(!p0 U p0)").value);
  CHECK_FALSE(verdict("<<UAV0,UAV1,GCS>>(q0 U p0)").value);

  // the next-step layer sees the branch states
  CHECK(verdict("<<UAV0,UAV1,GCS>>X(p0 \\/ p1)").value == false);
  Checker at_s1(space, m);
  CHECK(at_s1.run(state_index(space, "s1"),
                  parse_formula("<<UAV0,UAV1,GCS>>X(p0 \\/ p1)", m))
            .value);
}

TEST_CASE("the five bundled queries give the expected verdicts") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  auto formulas = parse_formula_lines(
      slurp(std::string(EPC_MODELS_DIR) + "/uav_table3.atle"), m);
  REQUIRE(formulas.size() == 5);

  Checker checker(space, m);
  std::vector<bool> verdicts;
  for (const auto &f : formulas)
    verdicts.push_back(checker.run(space.init, f).value);
  CHECK(verdicts == std::vector<bool>{true, true, false, true, false});
}

TEST_CASE("witnesses appear only on true coalition verdicts") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  Checker checker(space, m);

  Verdict t = checker.run(space.init,
                          parse_formula("<<UAV0,UAV1,GCS>>X(q0)", m));
  CHECK(t.value);
  CHECK(t.witness.has_value());

  // a coalition with no bindable action cannot force anything
  Verdict gcs = checker.run(space.init, parse_formula("<<GCS>>X(q0)", m));
  CHECK_FALSE(gcs.value);
  CHECK_FALSE(gcs.witness.has_value());

  Verdict f =
      checker.run(space.init, parse_formula("<<UAV0,UAV1>>X(q0)", m));
  CHECK_FALSE(f.value);
  CHECK_FALSE(f.witness.has_value());

  Verdict plain = checker.run(space.init, parse_formula("!q0", m));
  CHECK(plain.value);
  CHECK_FALSE(plain.witness.has_value());

  // a coalition formula under a connective reports no witness either
  Verdict wrapped = checker.run(
      space.init, parse_formula("<<UAV0,UAV1,GCS>>X(q0) \\/ q0", m));
  CHECK(wrapped.value);
  CHECK_FALSE(wrapped.witness.has_value());
}

TEST_CASE("stats stay within the enumeration bound") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  std::uint64_t bound = testgen::count_strategies(space, m.agents);

  Checker checker(space, m);
  Verdict v = checker.run(space.init,
                          parse_formula("<<UAV0,UAV1,GCS>>G(q0 \\/ !q0)", m));
  CHECK(v.stats.configs == space.configs.size());
  CHECK(v.stats.strategies_examined >= 1);
  CHECK(v.stats.strategies_examined <= bound);

  Checker fresh(space, m);
  Verdict f = fresh.run(
      space.init, parse_formula("<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))", m));
  CHECK_FALSE(f.value);
  CHECK(f.stats.strategies_examined == bound); // had to exhaust the stream
  CHECK(f.stats.scc_runs >= 1);
}

TEST_CASE("the strategy budget aborts loudly") {
  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);

  CheckerOptions tight;
  tight.max_strategies = 3; // the failing formula needs all 48
  Checker capped(space, m, tight);
  CHECK_THROWS_AS(
      capped.run(space.init,
                 parse_formula("<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))", m)),
      limit_error);
  try {
    Checker again(space, m, tight);
    again.run(space.init,
              parse_formula("<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))", m));
  } catch (const limit_error &e) {
    CHECK(e.kind() == limit_kind::max_strategies);
  }

  CheckerOptions ample;
  ample.max_strategies = 48;
  Checker enough(space, m, ample);
  CHECK_FALSE(
      enough
          .run(space.init,
               parse_formula("<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))", m))
          .value);
}

TEST_CASE("memoization and worker count are invisible in the results") {
  std::vector<std::string> texts{
      "<<UAV0,UAV1,GCS>>G(C{UAV0,UAV1,GCS}(q1 -> q0))",
      "<<UAV0,UAV1,GCS>>X(K{UAV0}(K{UAV1}(q0)))",
      "<<UAV0,UAV1,GCS>>F(E{UAV0,UAV1,GCS}(p0))",
      "<<UAV0,UAV1,GCS>>F(D{UAV0,UAV1,GCS}(q0))",
      "<<UAV0,UAV1>>F(D{UAV0,UAV1,GCS}(q0))",
      "(!p0 U p0) \\/ q0",
      "K{UAV0}(q1 -> q0) /\\ !<<GCS>>G(p0)"};
  // the until line needs a coalition to parse; skip plain forms
  texts[5] = "<<UAV0,GCS>>(!p0 U p0) \\/ q0";

  ModelDef m = fixture_model("uav.epc");
  StateSpace space = explore(m);
  for (const std::string &text : texts) {
    FormulaPtr f = parse_formula(text, m);

    CheckerOptions plain;
    CheckerOptions bare;
    bare.use_label_store = false;
    CheckerOptions wide;
    wide.jobs = 4;

    Verdict a = Checker(space, m, plain).run(space.init, f);
    Verdict b = Checker(space, m, bare).run(space.init, f);
    Verdict c = Checker(space, m, wide).run(space.init, f);
    CHECK(a.value == b.value);
    CHECK(a.value == c.value);
    CHECK(a.stats.strategies_examined == c.stats.strategies_examined);
    CHECK(a.stats.scc_runs == c.stats.scc_runs);
    CHECK(a.witness.has_value() == c.witness.has_value());
    if (a.witness && c.witness) {
      CHECK(a.witness->domain == c.witness->domain);
    }
  }
}

TEST_CASE("verdicts match the path-walking reference on random models") {
  std::mt19937 rng(417);
  int checked = 0;
  while (checked < 40) {
    auto maybe = testgen::random_model(rng, 24);
    if (!maybe) continue;
    ModelDef m = *maybe;
    StateSpace space = explore(m);
    ++checked;

    for (int k = 0; k < 6; ++k) {
      FormulaPtr f = testgen::random_formula(rng, m, 1 + (int)(rng() % 3u));
      Checker checker(space, m);
      int config = (int)(rng() % space.configs.size());
      bool mine = checker.run(config, f).value;
      bool ref = testgen::brute_check(space, m, config, *f);
      CHECK_MESSAGE(mine == ref, to_string(*f) << " at config " << config);
    }
  }
}

TEST_CASE("logical invariants hold across fixtures and random draws") {
  std::mt19937 rng(1201);
  std::vector<std::pair<ModelDef, StateSpace>> battery;
  for (const char *name : {"uav.epc", "demo3.epc"}) {
    ModelDef m = fixture_model(name);
    StateSpace s = explore(m);
    battery.emplace_back(std::move(m), std::move(s));
  }
  for (int i = 0; i < 10;) {
    auto maybe = testgen::random_model(rng, 24);
    if (!maybe) continue;
    ModelDef m = *maybe;
    StateSpace s = explore(m);
    battery.emplace_back(std::move(m), std::move(s));
    ++i;
  }

  for (const auto &[m, space] : battery) {
    Checker checker(space, m);
    for (int k = 0; k < 8; ++k) {
      FormulaPtr f = testgen::random_formula(rng, m, 2);
      std::set<AgentId> group;
      for (const AgentId &i : m.agents)
        if (rng() % 2) group.insert(i);
      if (group.empty()) group.insert(*m.agents.begin());
      AgentId one = *std::next(m.agents.begin(),
                               (int)(rng() % m.agents.size()));

      for (int c = 0; c < (int)space.configs.size(); ++c) {
        // double negation
        CHECK(checker.run(c, f_not(f_not(f))).value ==
              checker.run(c, f).value);
        // whoever knows it, it holds
        if (checker.run(c, f_know(one, f)).value)
          CHECK(checker.run(c, f).value);
        // common implies mutual implies distributed
        if (checker.run(c, f_common(group, f)).value)
          CHECK(checker.run(c, f_every(group, f)).value);
        if (checker.run(c, f_every(group, f)).value)
          CHECK(checker.run(c, f_dist(group, f)).value);
        // maintaining forever implies maintaining one step
        if (checker.run(c, f_globally(group, f)).value)
          CHECK(checker.run(c, f_next(group, f)).value);
      }
    }
  }
}

} // TEST_SUITE
