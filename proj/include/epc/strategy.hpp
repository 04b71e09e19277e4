#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "epc/engine.hpp"

namespace epc {

/* Partial strategy of a coalition: on states of the domain the coalition
 * commits to one of its enabled actions; elsewhere the completion lets the
 * complement coalition act freely. */
struct PartialStrategy {
  std::set<AgentId> coalition;
  std::set<StateId> domain;
  std::map<StateId, LabeledAction> choice;
};

/* True when every participant of the action belongs to the coalition. */
bool action_belongs(const LabeledAction &a, const std::set<AgentId> &coalition);

/* Subgraph of the space kept by a strategy: from a domain state only the
 * chosen action's edges survive; elsewhere only actions owned entirely by
 * the complement coalition survive. */
struct OutcomeGraph {
  const StateSpace *base = nullptr;
  std::vector<char> kept; // indexed like base->edges

  bool has_kept_edge(int config) const;
};

OutcomeGraph outcome_graph(const StateSpace &space,
                           const std::set<AgentId> &all_agents,
                           const PartialStrategy &strat);

bool has_outcome(const OutcomeGraph &g, int config);

/* Deterministic stream over all partial strategies of a coalition: domains
 * are subsets of states with at least one enabled coalition action, ordered
 * by size then lexicographically; choices iterate per-state enabled actions
 * in label order. */
class StrategyEnumerator {
public:
  StrategyEnumerator(const StateSpace &space, std::set<AgentId> coalition);

  std::optional<PartialStrategy> next();

  /* States eligible for domain membership, sorted. */
  const std::vector<StateId> &candidates() const { return candidates_; }
  const std::vector<LabeledAction> &enabled_at(const StateId &s) const {
    return enabled_.at(s);
  }

private:
  std::set<AgentId> coalition_;
  std::vector<StateId> candidates_;
  std::map<StateId, std::vector<LabeledAction>> enabled_;

  std::size_t subset_size_ = 0;
  std::vector<std::size_t> combo_;   // current subset (indices into candidates_)
  std::vector<std::size_t> odometer_; // per-state choice indices
  bool combo_fresh_ = true;
  bool done_ = false;

  bool advance_combo();
};

} // namespace epc
