#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "epc/syntax.hpp"

namespace epc {

enum class ModelMode { derived, explicit_table };

struct KEdge {
  StateId from;
  LabeledAction action;
  StateId to;
};

struct DeltaEdge {
  std::string from; // named labeled term
  LabeledAction action;
  std::string to;
};

/* A parsed and validated model: either transitions are derived from the
 * system term by the operational rules (derived mode) or supplied as a table
 * over named labeled terms (explicit mode). */
struct ModelDef {
  ModelMode mode = ModelMode::derived;

  std::set<AgentId> agents;
  std::set<Value> values;
  std::set<PropId> props;
  std::map<Name, ProcPtr> equations;
  LProcPtr system; // derived mode

  std::set<StateId> states;
  StateId init_state;
  std::vector<KEdge> k_relation;

  std::map<std::string, LProcPtr> named_terms; // explicit mode
  std::vector<DeltaEdge> delta;
  std::string init_term;

  // (agent, state) -> epistemic state token; total over agents x states
  std::map<std::pair<AgentId, StateId>, std::string> h_map;
  std::map<StateId, std::set<PropId>> labeling;

  const std::string &h(const AgentId &i, const StateId &s) const {
    return h_map.at({i, s});
  }
  bool labeled(const StateId &s, const PropId &p) const {
    auto it = labeling.find(s);
    return it != labeling.end() && it->second.count(p) > 0;
  }
};

} // namespace epc
