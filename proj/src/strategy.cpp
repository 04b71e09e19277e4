#include "epc/strategy.hpp"

#include <algorithm>

namespace epc {

bool action_belongs(const LabeledAction &a,
                    const std::set<AgentId> &coalition) {
  if (const auto *v = std::get_if<VisibleAction>(&a))
    return coalition.count(v->agent) > 0;
  const auto &t = std::get<SyncTauAction>(a);
  return coalition.count(t.sender) > 0 && coalition.count(t.receiver) > 0;
}

bool OutcomeGraph::has_kept_edge(int config) const {
  for (int e : base->out[config])
    if (kept[e]) return true;
  return false;
}

OutcomeGraph outcome_graph(const StateSpace &space,
                           const std::set<AgentId> &all_agents,
                           const PartialStrategy &strat) {
  std::set<AgentId> complement;
  for (const AgentId &i : all_agents)
    if (!strat.coalition.count(i)) complement.insert(i);

  OutcomeGraph g;
  g.base = &space;
  g.kept.assign(space.edges.size(), 0);
  for (std::size_t e = 0; e < space.edges.size(); ++e) {
    const Transition &t = space.edges[e];
    const StateId &s = space.configs[t.from].state;
    auto chosen = strat.choice.find(s);
    if (chosen != strat.choice.end())
      g.kept[e] = label_equal(t.action, chosen->second);
    else
      g.kept[e] = action_belongs(t.action, complement);
  }
  return g;
}

bool has_outcome(const OutcomeGraph &g, int config) {
  return g.has_kept_edge(config);
}

StrategyEnumerator::StrategyEnumerator(const StateSpace &space,
                                       std::set<AgentId> coalition)
    : coalition_(std::move(coalition)) {
  for (std::size_t c = 0; c < space.configs.size(); ++c) {
    const StateId &s = space.configs[c].state;
    for (const LabeledAction &a : space.enabled((int)c)) {
      if (!action_belongs(a, coalition_)) continue;
      auto &acts = enabled_[s];
      bool known = false;
      for (const LabeledAction &b : acts) known = known || label_equal(a, b);
      if (!known) acts.push_back(a);
    }
  }
  for (auto &[s, acts] : enabled_) {
    std::sort(acts.begin(), acts.end(),
              [](const LabeledAction &a, const LabeledAction &b) {
                return label_text(a) < label_text(b);
              });
    candidates_.push_back(s);
  }
  // map iteration already yields the states sorted
}

bool StrategyEnumerator::advance_combo() {
  const std::size_t n = candidates_.size();
  const std::size_t k = subset_size_;
  // next k-combination of {0..n-1} in lexicographic order
  if (k > 0) {
    std::size_t i = k;
    while (i-- > 0) {
      if (combo_[i] + (k - i) < n) {
        ++combo_[i];
        for (std::size_t j = i + 1; j < k; ++j) combo_[j] = combo_[j - 1] + 1;
        return true;
      }
    }
  }
  // grow the subset
  ++subset_size_;
  if (subset_size_ > n) return false;
  combo_.resize(subset_size_);
  for (std::size_t j = 0; j < subset_size_; ++j) combo_[j] = j;
  return true;
}

std::optional<PartialStrategy> StrategyEnumerator::next() {
  if (done_) return std::nullopt;

  PartialStrategy out;
  out.coalition = coalition_;
  for (std::size_t k = 0; k < subset_size_; ++k) {
    const StateId &s = candidates_[combo_[k]];
    out.domain.insert(s);
    out.choice.emplace(s, enabled_.at(s)[odometer_[k]]);
  }

  // advance: choices first, then the domain
  std::size_t k = subset_size_;
  while (k-- > 0) {
    if (++odometer_[k] < enabled_.at(candidates_[combo_[k]]).size()) break;
    odometer_[k] = 0;
    if (k == 0) {
      if (!advance_combo()) done_ = true;
      odometer_.assign(subset_size_, 0);
      break;
    }
  }
  if (subset_size_ == 0) {
    if (!advance_combo()) done_ = true;
    odometer_.assign(subset_size_, 0);
  }
  return out;
}

} // namespace epc
