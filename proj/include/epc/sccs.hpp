#pragma once

#include <vector>

#include "epc/strategy.hpp"

namespace epc {

/* Strongly connected components of the kept subgraph reachable from root,
 * in completion order (sinks first, reverse topological).  An optional
 * vertex mask restricts the walk to configs with a nonzero mask entry. */
std::vector<std::vector<int>>
find_sccs(const OutcomeGraph &g, int root,
          const std::vector<char> *vertex_mask = nullptr);

} // namespace epc
