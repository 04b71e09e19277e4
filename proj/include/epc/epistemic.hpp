#pragma once

#include <set>
#include <vector>

#include "epc/engine.hpp"
#include "epc/model.hpp"

namespace epc {

/* Two shared states are indistinguishable to agent i when its epistemic
 * abstraction maps them to the same epistemic state. */
bool indistinguishable(const ModelDef &model, const AgentId &i,
                       const StateId &s, const StateId &t);

/* Configurations of the space the agent cannot tell apart from config c
 * (including c itself), in index order. */
std::vector<int> agent_class(const StateSpace &space, const ModelDef &model,
                             const AgentId &i, int c);

/* Partition of configurations under the transitive closure of the union of
 * the coalition members' indistinguishability relations. */
struct AccessRelation {
  std::vector<int> class_of;            // config index -> class id
  std::vector<std::vector<int>> classes; // sorted members per class

  bool related(int a, int b) const { return class_of[a] == class_of[b]; }
};

AccessRelation common_reach(const StateSpace &space, const ModelDef &model,
                            const std::set<AgentId> &coalition);

} // namespace epc
