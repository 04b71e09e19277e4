#include "epc/sccs.hpp"

#include <algorithm>

namespace epc {

/* Iterative Tarjan over the kept subgraph.  Components are appended when
 * their root node finishes, so a component precedes everything that can
 * reach it (sinks first). */
std::vector<std::vector<int>> find_sccs(const OutcomeGraph &g, int root,
                                        const std::vector<char> *vertex_mask) {
  const StateSpace &space = *g.base;
  const int n = (int)space.configs.size();
  std::vector<std::vector<int>> sccs;
  if (vertex_mask && !(*vertex_mask)[root]) return sccs;

  std::vector<int> index(n, -1), lowlink(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<int> stack;
  int next_index = 0;

  struct Frame {
    int v;
    std::size_t edge_pos; // position within space.out[v]
  };
  std::vector<Frame> call;
  call.push_back({root, 0});
  index[root] = lowlink[root] = next_index++;
  stack.push_back(root);
  on_stack[root] = 1;

  while (!call.empty()) {
    Frame &f = call.back();
    const auto &out = space.out[f.v];
    bool descended = false;
    while (f.edge_pos < out.size()) {
      int e = out[f.edge_pos++];
      if (!g.kept[e]) continue;
      int w = space.edges[e].to;
      if (vertex_mask && !(*vertex_mask)[w]) continue;
      if (index[w] < 0) {
        index[w] = lowlink[w] = next_index++;
        stack.push_back(w);
        on_stack[w] = 1;
        call.push_back({w, 0});
        descended = true;
        break;
      }
      if (on_stack[w]) lowlink[f.v] = std::min(lowlink[f.v], index[w]);
    }
    if (descended) continue;

    int v = f.v;
    call.pop_back();
    if (!call.empty())
      lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
    if (lowlink[v] == index[v]) {
      std::vector<int> component;
      int w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        component.push_back(w);
      } while (w != v);
      std::sort(component.begin(), component.end());
      sccs.push_back(std::move(component));
    }
  }
  return sccs;
}

} // namespace epc
