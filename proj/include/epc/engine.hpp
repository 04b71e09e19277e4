#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epc/model.hpp"
#include "epc/syntax.hpp"

namespace epc {

struct ExplorationLimits {
  std::size_t max_configs = 100000;
  int max_const_unfold_depth = 64;
};

/* A reachable pair of shared state and labeled term.  In explicit mode the
 * term is one of the model's named terms and `term_name` identifies it. */
struct Configuration {
  StateId state;
  LProcPtr term;
  std::string term_name; // explicit mode only
  CanonicalKey key;      // canonical term key (or term name)

  std::string id() const { return state + "\x1f" + key; }
};

struct Transition {
  int from;
  LabeledAction action;
  int to;
};

struct StateSpace {
  std::vector<Configuration> configs;
  std::vector<Transition> edges;          // sorted by (from, label, to)
  std::vector<std::vector<int>> out;      // per config: indices into edges
  int init = 0;
  std::set<StateId> states_present;

  int index_of(const std::string &config_id) const {
    auto it = index.find(config_id);
    return it == index.end() ? -1 : it->second;
  }
  std::map<std::string, int> index;

  /* Distinct labels with at least one outgoing edge at config c. */
  std::vector<LabeledAction> enabled(int c) const;
};

/* One-step transitions of an unlabeled process under the finite value set.
 * Receives are instantiated once per value.  Results are deduplicated up to
 * congruence of targets and sorted by (action, target key). */
std::vector<std::pair<GroundAction, ProcPtr>>
process_steps(const ProcPtr &p, const std::set<Value> &values,
              const std::map<Name, ProcPtr> &equations,
              int max_const_unfold_depth = 64);

/* One-step labeled transitions of a labeled term: per-agent lifts of process
 * steps plus cross-agent synchronizations tau(i,j) where agent i sent and
 * agent j received.  An agent's internal tau lifts to tau(i,i). */
std::vector<std::pair<LabeledAction, LProcPtr>>
labeled_steps(const LProcPtr &m, const std::set<Value> &values,
              const std::map<Name, ProcPtr> &equations,
              int max_const_unfold_depth = 64);

/* Joint steps of a configuration: a term step paired with every matching
 * edge of the shared-state relation carrying the identical label. */
std::vector<std::pair<LabeledAction, Configuration>>
config_steps(const Configuration &c, const ModelDef &model,
             const ExplorationLimits &limits = {});

/* Breadth-first reachable state space from the initial configuration, with
 * deterministic indexing: successors are processed in lexicographic order of
 * (label, target state, target key). */
StateSpace explore(const ModelDef &model, const ExplorationLimits &limits = {});

/* Initial configuration of a model, optionally overriding the start state
 * and (in explicit mode) the start term name. */
Configuration initial_configuration(const ModelDef &model,
                                    const StateId &state_override = "",
                                    const std::string &term_override = "");

} // namespace epc
