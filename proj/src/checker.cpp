#include "epc/checker.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>

#include "epc/errors.hpp"
#include "epc/sccs.hpp"

namespace epc {

std::optional<bool> LabelStore::lookup(int config, const Formula *f) const {
  auto it = map_.find({config, f});
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void LabelStore::store(int config, const Formula *f, bool value) {
  map_.emplace(std::pair<int, const Formula *>(config, f), value);
}

Checker::Checker(const StateSpace &space, const ModelDef &model,
                 CheckerOptions options)
    : space_(space), model_(model), options_(options) {}

Verdict Checker::run(int config, const FormulaPtr &formula) {
  // verdict and witness caches key on node identity, which is only stable
  // while the caller's tree is alive — so they live for one run
  store_ = LabelStore{};
  witnesses_.clear();
  stats_ = CheckStats{};
  stats_.configs = space_.configs.size();

  Verdict out;
  out.value = check(config, formula.get());
  out.stats = stats_;
  switch (formula->kind) {
  case Formula::Kind::coal_next:
  case Formula::Kind::coal_globally:
  case Formula::Kind::coal_finally:
  case Formula::Kind::coal_until:
    if (out.value) {
      auto it = witnesses_.find(formula.get());
      if (it != witnesses_.end()) out.witness = it->second;
    }
    break;
  default:
    break;
  }
  return out;
}

bool Checker::check(int config, const Formula *f) {
  if (options_.use_label_store)
    if (auto hit = store_.lookup(config, f)) return *hit;

  bool value = false;
  switch (f->kind) {
  case Formula::Kind::prop:
    value = model_.labeled(space_.configs[config].state, f->prop);
    break;
  case Formula::Kind::negation:
    value = !check(config, f->lhs.get());
    break;
  case Formula::Kind::disjunction:
    value = check(config, f->lhs.get()) || check(config, f->rhs.get());
    break;
  case Formula::Kind::know:
    value = check_know(config, f);
    break;
  case Formula::Kind::every:
    value = check_every(config, f);
    break;
  case Formula::Kind::dist:
    value = check_dist(config, f);
    break;
  case Formula::Kind::common:
    value = check_common(config, f);
    break;
  default:
    value = check_coalition(config, f);
    break;
  }

  if (options_.use_label_store) store_.store(config, f, value);
  return value;
}

std::vector<char> Checker::sat_table(const Formula *f) {
  std::vector<char> out(space_.configs.size());
  for (std::size_t c = 0; c < out.size(); ++c) out[c] = check((int)c, f);
  return out;
}

const AccessRelation &
Checker::common_relation(const std::set<AgentId> &coalition) {
  auto it = common_cache_.find(coalition);
  if (it == common_cache_.end())
    it = common_cache_.emplace(coalition, common_reach(space_, model_, coalition))
             .first;
  return it->second;
}

bool Checker::check_know(int config, const Formula *f) {
  for (int c : agent_class(space_, model_, f->agent, config))
    if (!check(c, f->lhs.get())) return false;
  return true;
}

bool Checker::check_every(int config, const Formula *f) {
  for (const AgentId &i : f->coalition)
    for (int c : agent_class(space_, model_, i, config))
      if (!check(c, f->lhs.get())) return false;
  return true;
}

bool Checker::check_dist(int config, const Formula *f) {
  for (const AgentId &i : f->coalition) {
    bool knows = true;
    for (int c : agent_class(space_, model_, i, config))
      knows = knows && check(c, f->lhs.get());
    if (knows) return true;
  }
  return false;
}

bool Checker::check_common(int config, const Formula *f) {
  const AccessRelation &rel = common_relation(f->coalition);
  for (int c : rel.classes[rel.class_of[config]])
    if (!check(c, f->lhs.get())) return false;
  return true;
}

namespace {

bool has_internal_edge(const OutcomeGraph &g, const std::vector<int> &scc) {
  const StateSpace &sp = *g.base;
  if (scc.size() > 1) return true; // strongly connected by construction
  int v = scc[0];
  for (int e : sp.out[v])
    if (g.kept[e] && sp.edges[e].to == v) return true;
  return false;
}

bool is_dead_end(const OutcomeGraph &g, int v) {
  return !g.has_kept_edge(v);
}

} // namespace

Checker::StratResult
Checker::evaluate_strategy(Formula::Kind kind, int config,
                           const OutcomeGraph &g,
                           const std::vector<char> &sat1,
                           const std::vector<char> &sat2) const {
  StratResult res;
  if (!has_outcome(g, config)) return res;
  const StateSpace &sp = space_;

  switch (kind) {
  case Formula::Kind::coal_next: {
    for (int e : sp.out[config])
      if (g.kept[e] && !sat1[sp.edges[e].to]) return res;
    res.ok = true;
    return res;
  }
  case Formula::Kind::coal_globally: {
    // every reachable configuration satisfies the body and can move on
    std::vector<char> seen(sp.configs.size(), 0);
    std::vector<int> queue{config};
    seen[config] = 1;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int v = queue[q];
      if (!sat1[v]) return res;
      bool moves = false;
      for (int e : sp.out[v]) {
        if (!g.kept[e]) continue;
        moves = true;
        int w = sp.edges[e].to;
        if (!seen[w]) {
          seen[w] = 1;
          queue.push_back(w);
        }
      }
      if (!moves) return res;
    }
    res.ok = true;
    return res;
  }
  case Formula::Kind::coal_finally: {
    if (sat1[config]) {
      res.ok = true;
      return res;
    }
    // no path may linger forever (cycle) or die (dead end) while the body
    // is still false
    std::vector<char> mask(sp.configs.size());
    for (std::size_t i = 0; i < mask.size(); ++i) mask[i] = !sat1[i];
    auto sccs = find_sccs(g, config, &mask);
    res.sccs = 1;
    for (const auto &scc : sccs) {
      if (has_internal_edge(g, scc)) return res;
      for (int v : scc)
        if (is_dead_end(g, v)) return res;
    }
    res.ok = true;
    return res;
  }
  case Formula::Kind::coal_until: {
    if (sat2[config]) {
      res.ok = true;
      return res;
    }
    if (!sat1[config]) return res;
    // while the right side is still false the path must stay inside the
    // left side's region and must eventually leave it
    std::vector<char> mask(sp.configs.size());
    for (std::size_t i = 0; i < mask.size(); ++i)
      mask[i] = sat1[i] && !sat2[i];
    auto sccs = find_sccs(g, config, &mask);
    res.sccs = 1;
    for (const auto &scc : sccs) {
      if (has_internal_edge(g, scc)) return res;
      for (int v : scc) {
        if (is_dead_end(g, v)) return res;
        for (int e : sp.out[v]) {
          if (!g.kept[e]) continue;
          int w = sp.edges[e].to;
          if (!sat1[w] && !sat2[w]) return res;
        }
      }
    }
    res.ok = true;
    return res;
  }
  default:
    break; // not a coalition operator; unreachable
  }
  return res;
}

bool Checker::check_coalition(int config, const Formula *f) {
  const std::vector<char> sat1 = sat_table(f->lhs.get());
  const std::vector<char> sat2 = f->kind == Formula::Kind::coal_until
                                     ? sat_table(f->rhs.get())
                                     : std::vector<char>{};

  StrategyEnumerator stream(space_, f->coalition);
  const int jobs = std::max(1, options_.jobs);
  const std::size_t batch_cap = jobs == 1 ? 1 : (std::size_t)jobs * 16;

  for (;;) {
    // admit the next strategies, stopping at the remaining budget
    std::vector<PartialStrategy> batch;
    bool over_budget = false;
    while (batch.size() < batch_cap) {
      if (options_.max_strategies != 0 &&
          stats_.strategies_examined + batch.size() >=
              options_.max_strategies) {
        over_budget = stream.next().has_value();
        break;
      }
      auto s = stream.next();
      if (!s) break;
      batch.push_back(std::move(*s));
    }

    auto budget_error = [&]() {
      return limit_error(limit_kind::max_strategies,
                         "strategy budget of " +
                             std::to_string(options_.max_strategies) +
                             " exhausted while deciding " + to_string(*f));
    };
    if (batch.empty()) {
      if (over_budget) throw budget_error();
      return false; // every strategy failed
    }

    std::vector<StratResult> results(batch.size());
    auto eval_one = [&](std::size_t i) {
      OutcomeGraph g = outcome_graph(space_, model_.agents, batch[i]);
      results[i] = evaluate_strategy(f->kind, config, g, sat1, sat2);
    };
    if (jobs == 1 || batch.size() == 1) {
      for (std::size_t i = 0; i < batch.size(); ++i) eval_one(i);
    } else {
      std::atomic<std::size_t> cursor{0};
      std::vector<std::thread> pool;
      const int workers = std::min<int>(jobs, (int)batch.size());
      for (int t = 0; t < workers; ++t)
        pool.emplace_back([&] {
          for (;;) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= batch.size()) return;
            eval_one(i);
          }
        });
      for (std::thread &t : pool) t.join();
    }

    // aggregate in enumeration order so verdict, witness and stats do not
    // depend on the worker count
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++stats_.strategies_examined;
      stats_.scc_runs += results[i].sccs;
      if (results[i].ok) {
        witnesses_[f] = batch[i];
        return true;
      }
    }
    if (over_budget) throw budget_error();
  }
}

} // namespace epc
