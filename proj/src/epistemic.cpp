#include "epc/epistemic.hpp"

#include <map>
#include <numeric>

#include "epc/errors.hpp"

namespace epc {

bool indistinguishable(const ModelDef &model, const AgentId &i,
                       const StateId &s, const StateId &t) {
  return model.h(i, s) == model.h(i, t);
}

std::vector<int> agent_class(const StateSpace &space, const ModelDef &model,
                             const AgentId &i, int c) {
  std::vector<int> out;
  const std::string &mark = model.h(i, space.configs[c].state);
  for (std::size_t k = 0; k < space.configs.size(); ++k)
    if (model.h(i, space.configs[k].state) == mark) out.push_back((int)k);
  return out;
}

namespace {

int find_root(std::vector<int> &parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

void unite(std::vector<int> &parent, int a, int b) {
  a = find_root(parent, a);
  b = find_root(parent, b);
  if (a != b) parent[std::max(a, b)] = std::min(a, b);
}

} // namespace

AccessRelation common_reach(const StateSpace &space, const ModelDef &model,
                            const std::set<AgentId> &coalition) {
  if (coalition.empty())
    throw validation_error(validation_kind::empty_coalition,
                           "common_reach needs at least one agent");

  const int n = (int)space.configs.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);

  // Joining every configuration that shares an agent's epistemic state and
  // chasing the roots afterwards is exactly the transitive closure of the
  // union of the per-agent kernels.
  for (const AgentId &i : coalition) {
    std::map<std::string, int> first_seen;
    for (int c = 0; c < n; ++c) {
      const std::string &mark = model.h(i, space.configs[c].state);
      auto [it, fresh] = first_seen.emplace(mark, c);
      if (!fresh) unite(parent, it->second, c);
    }
  }

  AccessRelation rel;
  rel.class_of.assign(n, -1);
  std::map<int, int> root_to_class;
  for (int c = 0; c < n; ++c) {
    int root = find_root(parent, c);
    auto [it, fresh] = root_to_class.emplace(root, (int)rel.classes.size());
    if (fresh) rel.classes.emplace_back();
    rel.class_of[c] = it->second;
    rel.classes[it->second].push_back(c);
  }
  return rel;
}

} // namespace epc
