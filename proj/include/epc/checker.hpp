#pragma once

#include <cstdint>
#include <map>
#include <optional>

#include "epc/engine.hpp"
#include "epc/epistemic.hpp"
#include "epc/formula.hpp"
#include "epc/strategy.hpp"

namespace epc {

/* Memo of settled (configuration, formula) verdicts.  An entry, once
 * written, is never contradicted. */
class LabelStore {
public:
  std::optional<bool> lookup(int config, const Formula *f) const;
  void store(int config, const Formula *f, bool value);

private:
  std::map<std::pair<int, const Formula *>, bool> map_;
};

struct CheckStats {
  std::size_t configs = 0;
  std::uint64_t strategies_examined = 0;
  std::uint64_t scc_runs = 0;
};

struct Verdict {
  bool value = false;
  std::optional<PartialStrategy> witness; // top-level coalition op, true only
  CheckStats stats;
};

struct CheckerOptions {
  std::uint64_t max_strategies = 0; // 0 = unbounded
  int jobs = 1;
  bool use_label_store = true;
};

class Checker {
public:
  Checker(const StateSpace &space, const ModelDef &model,
          CheckerOptions options = {});

  /* Evaluate the formula at a configuration.  Throws limit_error when the
   * strategy budget is exhausted. */
  Verdict run(int config, const FormulaPtr &formula);

  bool check(int config, const Formula *f);

private:
  struct StratResult {
    bool ok = false;
    std::uint64_t sccs = 0;
  };

  const StateSpace &space_;
  const ModelDef &model_;
  CheckerOptions options_;
  LabelStore store_;
  CheckStats stats_;
  std::map<const Formula *, PartialStrategy> witnesses_;
  std::map<std::set<AgentId>, AccessRelation> common_cache_;

  std::vector<char> sat_table(const Formula *f);
  const AccessRelation &common_relation(const std::set<AgentId> &coalition);
  bool check_know(int config, const Formula *f);
  bool check_every(int config, const Formula *f);
  bool check_dist(int config, const Formula *f);
  bool check_common(int config, const Formula *f);
  bool check_coalition(int config, const Formula *f);

  /* Pure per-strategy evaluation; safe to run concurrently. */
  StratResult evaluate_strategy(Formula::Kind kind, int config,
                                const OutcomeGraph &g,
                                const std::vector<char> &sat1,
                                const std::vector<char> &sat2) const;
};

} // namespace epc
