#include "epc/engine.hpp"

#include <algorithm>
#include <deque>

#include "epc/errors.hpp"

namespace epc {

namespace {

struct StepCtx {
  const std::set<Value> &values;
  const std::map<Name, ProcPtr> &equations;
};

using RawSteps = std::vector<std::pair<GroundAction, ProcPtr>>;

[[noreturn]] void unfold_overflow(const Name &c) {
  throw limit_error(limit_kind::max_const_unfold_depth,
                    "constant '" + c +
                        "' exceeded the unfold budget without reaching a "
                        "prefix");
}

void proc_steps_rec(const ProcPtr &p, const StepCtx &ctx, int depth,
                    RawSteps &out) {
  using PT = ProcessTerm;
  if (std::holds_alternative<PT::Nil>(p->node)) return;
  if (std::holds_alternative<PT::Seq>(p->node)) return; // no rule applies
  if (const auto *pr = std::get_if<PT::Prefix>(&p->node)) {
    if (const auto *s = std::get_if<SendAct>(&pr->act)) {
      if (!s->payload.is_var) // an open payload cannot fire
        out.push_back({GroundAction{GroundAction::Kind::send, s->channel,
                                    s->payload.text},
                       pr->cont});
      return;
    }
    if (const auto *r = std::get_if<ReceiveAct>(&pr->act)) {
      for (const Value &v : ctx.values)
        out.push_back({GroundAction{GroundAction::Kind::receive, r->channel, v},
                       substitute_value(pr->cont, r->binder, v)});
      return;
    }
    out.push_back({GroundAction{GroundAction::Kind::tau, "", ""}, pr->cont});
    return;
  }
  if (const auto *r = std::get_if<PT::Restrict>(&p->node)) {
    RawSteps inner;
    proc_steps_rec(r->body, ctx, depth, inner);
    for (auto &[act, target] : inner) {
      if (act.kind != GroundAction::Kind::tau && act.channel == r->name)
        continue;
      out.push_back({act, make_restrict(r->name, target)});
    }
    return;
  }
  if (const auto *su = std::get_if<PT::Sum>(&p->node)) {
    proc_steps_rec(su->left, ctx, depth, out);
    proc_steps_rec(su->right, ctx, depth, out);
    return;
  }
  if (const auto *pa = std::get_if<PT::Par>(&p->node)) {
    RawSteps left, right;
    proc_steps_rec(pa->left, ctx, depth, left);
    proc_steps_rec(pa->right, ctx, depth, right);
    for (const auto &[act, target] : left)
      out.push_back({act, make_par(target, pa->right)});
    for (const auto &[act, target] : right)
      out.push_back({act, make_par(pa->left, target)});
    // synchronization of a send with a matching receive, either way round
    for (const auto &[la, lt] : left)
      for (const auto &[ra, rt] : right) {
        bool send_recv = la.kind == GroundAction::Kind::send &&
                         ra.kind == GroundAction::Kind::receive;
        bool recv_send = la.kind == GroundAction::Kind::receive &&
                         ra.kind == GroundAction::Kind::send;
        if ((send_recv || recv_send) && la.channel == ra.channel &&
            la.value == ra.value)
          out.push_back(
              {GroundAction{GroundAction::Kind::tau, "", ""}, make_par(lt, rt)});
      }
    return;
  }
  const auto &c = std::get<PT::ConstRef>(p->node);
  if (depth <= 0) unfold_overflow(c.name);
  auto it = ctx.equations.find(c.name);
  if (it == ctx.equations.end())
    throw validation_error(validation_kind::undeclared_constant,
                           "unknown process constant '" + c.name + "'");
  proc_steps_rec(it->second, ctx, depth - 1, out);
}

using RawLSteps = std::vector<std::pair<LabeledAction, LProcPtr>>;

void lsteps_rec(const LProcPtr &m, const StepCtx &ctx, int depth,
                RawLSteps &out) {
  using LT = LabeledProcessTerm;
  if (const auto *ap = std::get_if<LT::AgentProc>(&m->node)) {
    RawSteps steps;
    proc_steps_rec(ap->proc, ctx, depth, steps);
    for (const auto &[act, target] : steps) {
      LabeledAction label;
      if (act.kind == GroundAction::Kind::tau)
        label = SyncTauAction{ap->agent, ap->agent};
      else
        label = VisibleAction{act.kind == GroundAction::Kind::send,
                              act.channel, act.value, ap->agent};
      out.push_back({label, make_agent(target, ap->agent)});
    }
    return;
  }
  if (const auto *mr = std::get_if<LT::MRestrict>(&m->node)) {
    RawLSteps inner;
    lsteps_rec(mr->body, ctx, depth, inner);
    for (auto &[label, target] : inner) {
      if (const auto *v = std::get_if<VisibleAction>(&label))
        if (v->channel == mr->name) continue;
      out.push_back({label, make_mrestrict(mr->name, target)});
    }
    return;
  }
  const auto &mp = std::get<LT::MPar>(m->node);
  RawLSteps left, right;
  lsteps_rec(mp.left, ctx, depth, left);
  lsteps_rec(mp.right, ctx, depth, right);
  for (const auto &[label, target] : left)
    out.push_back({label, make_mpar(target, mp.right)});
  for (const auto &[label, target] : right)
    out.push_back({label, make_mpar(mp.left, target)});
  for (const auto &[ll, lt] : left)
    for (const auto &[rl, rt] : right) {
      const auto *lv = std::get_if<VisibleAction>(&ll);
      const auto *rv = std::get_if<VisibleAction>(&rl);
      if (!lv || !rv) continue;
      if (lv->is_send == rv->is_send || lv->channel != rv->channel ||
          lv->value != rv->value)
        continue;
      const VisibleAction &snd = lv->is_send ? *lv : *rv;
      const VisibleAction &rcv = lv->is_send ? *rv : *lv;
      out.push_back(
          {SyncTauAction{snd.agent, rcv.agent}, make_mpar(lt, rt)});
    }
}

} // namespace

std::vector<std::pair<GroundAction, ProcPtr>>
process_steps(const ProcPtr &p, const std::set<Value> &values,
              const std::map<Name, ProcPtr> &equations,
              int max_const_unfold_depth) {
  StepCtx ctx{values, equations};
  RawSteps raw;
  proc_steps_rec(p, ctx, max_const_unfold_depth, raw);

  std::vector<std::pair<std::string, std::size_t>> order;
  std::vector<CanonicalKey> keys(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    keys[i] = canonical_key(*raw[i].second);
    order.push_back({raw[i].first.text() + "\x1f" + keys[i], i});
  }
  std::sort(order.begin(), order.end());
  RawSteps out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i].first == order[i - 1].first) continue;
    out.push_back(raw[order[i].second]);
  }
  return out;
}

std::vector<std::pair<LabeledAction, LProcPtr>>
labeled_steps(const LProcPtr &m, const std::set<Value> &values,
              const std::map<Name, ProcPtr> &equations,
              int max_const_unfold_depth) {
  StepCtx ctx{values, equations};
  RawLSteps raw;
  lsteps_rec(m, ctx, max_const_unfold_depth, raw);

  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < raw.size(); ++i)
    order.push_back(
        {label_text(raw[i].first) + "\x1f" + canonical_key(*raw[i].second), i});
  std::sort(order.begin(), order.end());
  RawLSteps out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i].first == order[i - 1].first) continue;
    out.push_back(raw[order[i].second]);
  }
  return out;
}

std::vector<std::pair<LabeledAction, Configuration>>
config_steps(const Configuration &c, const ModelDef &model,
             const ExplorationLimits &limits) {
  std::vector<std::pair<LabeledAction, Configuration>> raw;
  if (model.mode == ModelMode::derived) {
    auto steps = labeled_steps(c.term, model.values, model.equations,
                               limits.max_const_unfold_depth);
    for (const KEdge &e : model.k_relation) {
      if (e.from != c.state) continue;
      for (const auto &[label, target] : steps) {
        if (!label_equal(e.action, label)) continue;
        Configuration succ;
        succ.state = e.to;
        succ.term = target;
        succ.key = canonical_key(*target);
        raw.push_back({label, std::move(succ)});
      }
    }
  } else {
    for (const DeltaEdge &d : model.delta) {
      if (d.from != c.term_name) continue;
      for (const KEdge &e : model.k_relation) {
        if (e.from != c.state || !label_equal(e.action, d.action)) continue;
        Configuration succ;
        succ.state = e.to;
        succ.term_name = d.to;
        succ.key = d.to;
        raw.push_back({d.action, std::move(succ)});
      }
    }
  }

  std::vector<std::pair<std::string, std::size_t>> order;
  for (std::size_t i = 0; i < raw.size(); ++i)
    order.push_back({label_text(raw[i].first) + "\x1f" + raw[i].second.state +
                         "\x1f" + raw[i].second.key,
                     i});
  std::sort(order.begin(), order.end());
  std::vector<std::pair<LabeledAction, Configuration>> out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0 && order[i].first == order[i - 1].first) continue;
    out.push_back(raw[order[i].second]);
  }
  return out;
}

Configuration initial_configuration(const ModelDef &model,
                                    const StateId &state_override,
                                    const std::string &term_override) {
  Configuration c;
  c.state = state_override.empty() ? model.init_state : state_override;
  if (!model.states.count(c.state))
    throw validation_error(validation_kind::undeclared_state,
                           "unknown start state '" + c.state + "'");
  if (model.mode == ModelMode::explicit_table) {
    c.term_name = term_override.empty() ? model.init_term : term_override;
    if (!model.named_terms.count(c.term_name))
      throw validation_error(validation_kind::undeclared_term_name,
                             "unknown start term '" + c.term_name + "'");
    c.key = c.term_name;
  } else {
    if (!term_override.empty())
      throw validation_error(validation_kind::undeclared_term_name,
                             "only explicit-table models name their terms");
    c.term = model.system;
    c.key = canonical_key(*model.system);
  }
  return c;
}

StateSpace explore(const ModelDef &model, const ExplorationLimits &limits) {
  StateSpace space;
  Configuration init = initial_configuration(model);
  space.index[init.id()] = 0;
  space.configs.push_back(std::move(init));
  space.init = 0;

  std::deque<int> queue{0};
  while (!queue.empty()) {
    int at = queue.front();
    queue.pop_front();
    auto steps = config_steps(space.configs[at], model, limits);
    for (auto &[label, succ] : steps) {
      std::string id = succ.id();
      auto it = space.index.find(id);
      int to;
      if (it != space.index.end()) {
        to = it->second;
      } else {
        if (space.configs.size() >= limits.max_configs)
          throw limit_error(limit_kind::max_configs,
                            "exploration exceeded " +
                                std::to_string(limits.max_configs) +
                                " configurations at frontier (" + succ.state +
                                ", " + succ.key + ")");
        to = (int)space.configs.size();
        space.index[id] = to;
        space.configs.push_back(succ);
        queue.push_back(to);
      }
      space.edges.push_back({at, label, to});
    }
  }

  std::sort(space.edges.begin(), space.edges.end(),
            [](const Transition &a, const Transition &b) {
              if (a.from != b.from) return a.from < b.from;
              std::string la = label_text(a.action), lb = label_text(b.action);
              if (la != lb) return la < lb;
              return a.to < b.to;
            });
  space.out.assign(space.configs.size(), {});
  for (std::size_t i = 0; i < space.edges.size(); ++i)
    space.out[space.edges[i].from].push_back((int)i);
  for (const Configuration &c : space.configs)
    space.states_present.insert(c.state);
  return space;
}

std::vector<LabeledAction> StateSpace::enabled(int c) const {
  std::vector<LabeledAction> labels;
  std::set<std::string> seen;
  for (int e : out[c])
    if (seen.insert(label_text(edges[e].action)).second)
      labels.push_back(edges[e].action);
  return labels;
}

} // namespace epc
