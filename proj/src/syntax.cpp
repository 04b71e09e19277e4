#include "epc/syntax.hpp"

#include "epc/errors.hpp"

namespace epc {

const char *validation_kind_name(validation_kind k) {
  switch (k) {
  case validation_kind::undeclared_agent: return "UndeclaredAgent";
  case validation_kind::undeclared_value: return "UndeclaredValue";
  case validation_kind::undeclared_state: return "UndeclaredState";
  case validation_kind::undeclared_prop: return "UndeclaredProp";
  case validation_kind::undeclared_constant: return "UndeclaredConstant";
  case validation_kind::undeclared_term_name: return "UndeclaredTermName";
  case validation_kind::duplicate_definition: return "DuplicateDefinition";
  case validation_kind::duplicate_section: return "DuplicateSection";
  case validation_kind::duplicate_agent_label: return "DuplicateAgentLabel";
  case validation_kind::missing_section: return "MissingSection";
  case validation_kind::mode_section_mismatch: return "ModeSectionMismatch";
  case validation_kind::non_total_h: return "NonTotalH";
  case validation_kind::unguarded_recursion: return "UnguardedRecursion";
  case validation_kind::unbound_variable: return "UnboundVariable";
  case validation_kind::binder_names_value: return "BinderNamesValue";
  case validation_kind::group_sequencing_not_allowed:
    return "GroupSequencingNotAllowed";
  case validation_kind::restriction_captures_constant:
    return "RestrictionCapturesConstant";
  case validation_kind::empty_values: return "EmptyValues";
  case validation_kind::empty_coalition: return "EmptyCoalition";
  }
  return "ValidationError";
}

ProcPtr make_nil() {
  return std::make_shared<const ProcessTerm>(ProcessTerm{ProcessTerm::Nil{}});
}
ProcPtr make_prefix(Action act, ProcPtr cont) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::Prefix{std::move(act), std::move(cont)}});
}
ProcPtr make_restrict(Name name, ProcPtr body) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::Restrict{std::move(name), std::move(body)}});
}
ProcPtr make_par(ProcPtr left, ProcPtr right) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::Par{std::move(left), std::move(right)}});
}
ProcPtr make_sum(ProcPtr left, ProcPtr right) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::Sum{std::move(left), std::move(right)}});
}
ProcPtr make_seq(ProcPtr head, ProcPtr cont) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::Seq{std::move(head), std::move(cont)}});
}
ProcPtr make_const(Name name) {
  return std::make_shared<const ProcessTerm>(
      ProcessTerm{ProcessTerm::ConstRef{std::move(name)}});
}

LProcPtr make_agent(ProcPtr proc, AgentId agent) {
  return std::make_shared<const LabeledProcessTerm>(LabeledProcessTerm{
      LabeledProcessTerm::AgentProc{std::move(proc), std::move(agent)}});
}
LProcPtr make_mpar(LProcPtr left, LProcPtr right) {
  return std::make_shared<const LabeledProcessTerm>(LabeledProcessTerm{
      LabeledProcessTerm::MPar{std::move(left), std::move(right)}});
}
LProcPtr make_mrestrict(Name name, LProcPtr body) {
  return std::make_shared<const LabeledProcessTerm>(LabeledProcessTerm{
      LabeledProcessTerm::MRestrict{std::move(name), std::move(body)}});
}

std::string GroundAction::text() const {
  switch (kind) {
  case Kind::tau: return "tau";
  case Kind::send: return "'" + channel + "<" + value + ">";
  case Kind::receive: return channel + "<" + value + ">";
  }
  return "";
}

std::string label_text(const LabeledAction &a) {
  if (const auto *v = std::get_if<VisibleAction>(&a)) {
    std::string s = v->is_send ? "'" : "";
    return s + v->channel + "<" + v->value + ">@" + v->agent;
  }
  const auto &t = std::get<SyncTauAction>(a);
  return "tau(" + t.sender + "," + t.receiver + ")";
}

bool label_equal(const LabeledAction &a, const LabeledAction &b) {
  return label_text(a) == label_text(b);
}

namespace {

void collect_free_names(const ProcessTerm &p, std::set<Name> &bound,
                        std::set<Name> &out) {
  if (std::holds_alternative<ProcessTerm::Nil>(p.node)) return;
  if (const auto *pre = std::get_if<ProcessTerm::Prefix>(&p.node)) {
    if (const auto *s = std::get_if<SendAct>(&pre->act)) {
      if (!bound.count(s->channel)) out.insert(s->channel);
    } else if (const auto *r = std::get_if<ReceiveAct>(&pre->act)) {
      if (!bound.count(r->channel)) out.insert(r->channel);
    }
    collect_free_names(*pre->cont, bound, out);
    return;
  }
  if (const auto *res = std::get_if<ProcessTerm::Restrict>(&p.node)) {
    bool was = bound.count(res->name) > 0;
    bound.insert(res->name);
    collect_free_names(*res->body, bound, out);
    if (!was) bound.erase(res->name);
    return;
  }
  if (const auto *par = std::get_if<ProcessTerm::Par>(&p.node)) {
    collect_free_names(*par->left, bound, out);
    collect_free_names(*par->right, bound, out);
    return;
  }
  if (const auto *sum = std::get_if<ProcessTerm::Sum>(&p.node)) {
    collect_free_names(*sum->left, bound, out);
    collect_free_names(*sum->right, bound, out);
    return;
  }
  if (const auto *seq = std::get_if<ProcessTerm::Seq>(&p.node)) {
    collect_free_names(*seq->head, bound, out);
    collect_free_names(*seq->cont, bound, out);
    return;
  }
  // ConstRef: the definition is a separate closed term.
}

void collect_free_names(const LabeledProcessTerm &m, std::set<Name> &bound,
                        std::set<Name> &out) {
  if (const auto *ap = std::get_if<LabeledProcessTerm::AgentProc>(&m.node)) {
    collect_free_names(*ap->proc, bound, out);
    return;
  }
  if (const auto *par = std::get_if<LabeledProcessTerm::MPar>(&m.node)) {
    collect_free_names(*par->left, bound, out);
    collect_free_names(*par->right, bound, out);
    return;
  }
  const auto &res = std::get<LabeledProcessTerm::MRestrict>(m.node);
  bool was = bound.count(res.name) > 0;
  bound.insert(res.name);
  collect_free_names(*res.body, bound, out);
  if (!was) bound.erase(res.name);
}

} // namespace

std::set<Name> free_names(const ProcessTerm &p) {
  std::set<Name> bound, out;
  collect_free_names(p, bound, out);
  return out;
}

std::set<Name> free_names(const LabeledProcessTerm &m) {
  std::set<Name> bound, out;
  collect_free_names(m, bound, out);
  return out;
}

ProcPtr substitute_value(const ProcPtr &p, const Var &x, const Value &v) {
  if (std::holds_alternative<ProcessTerm::Nil>(p->node)) return p;
  if (const auto *pre = std::get_if<ProcessTerm::Prefix>(&p->node)) {
    if (const auto *s = std::get_if<SendAct>(&pre->act)) {
      Action act = pre->act;
      if (s->payload.is_var && s->payload.text == x)
        act = SendAct{s->channel, ValueTerm::value(v)};
      return make_prefix(std::move(act), substitute_value(pre->cont, x, v));
    }
    if (const auto *r = std::get_if<ReceiveAct>(&pre->act)) {
      if (r->binder == x) return p; // rebinding shadows x
      return make_prefix(pre->act, substitute_value(pre->cont, x, v));
    }
    return make_prefix(pre->act, substitute_value(pre->cont, x, v));
  }
  if (const auto *res = std::get_if<ProcessTerm::Restrict>(&p->node))
    return make_restrict(res->name, substitute_value(res->body, x, v));
  if (const auto *par = std::get_if<ProcessTerm::Par>(&p->node))
    return make_par(substitute_value(par->left, x, v),
                    substitute_value(par->right, x, v));
  if (const auto *sum = std::get_if<ProcessTerm::Sum>(&p->node))
    return make_sum(substitute_value(sum->left, x, v),
                    substitute_value(sum->right, x, v));
  if (const auto *seq = std::get_if<ProcessTerm::Seq>(&p->node))
    return make_seq(substitute_value(seq->head, x, v),
                    substitute_value(seq->cont, x, v));
  return p; // ConstRef: definitions are variable-closed
}

namespace {

std::string action_to_string(const Action &act) {
  if (const auto *s = std::get_if<SendAct>(&act))
    return "'" + s->channel + "<" + s->payload.text + ">";
  if (const auto *r = std::get_if<ReceiveAct>(&act))
    return r->channel + "(" + r->binder + ")";
  return "tau";
}

} // namespace

std::string to_string(const ProcessTerm &p) {
  if (std::holds_alternative<ProcessTerm::Nil>(p.node)) return "0";
  if (const auto *pre = std::get_if<ProcessTerm::Prefix>(&p.node))
    return action_to_string(pre->act) + "." + to_string(*pre->cont);
  if (const auto *res = std::get_if<ProcessTerm::Restrict>(&p.node))
    return "new " + res->name + " in " + to_string(*res->body);
  if (const auto *par = std::get_if<ProcessTerm::Par>(&p.node))
    return "(" + to_string(*par->left) + " | " + to_string(*par->right) + ")";
  if (const auto *sum = std::get_if<ProcessTerm::Sum>(&p.node))
    return "(" + to_string(*sum->left) + " + " + to_string(*sum->right) + ")";
  if (const auto *seq = std::get_if<ProcessTerm::Seq>(&p.node))
    return "(" + to_string(*seq->head) + ")." + to_string(*seq->cont);
  return std::get<ProcessTerm::ConstRef>(p.node).name;
}

std::string to_string(const LabeledProcessTerm &m) {
  if (const auto *ap = std::get_if<LabeledProcessTerm::AgentProc>(&m.node))
    return "{" + to_string(*ap->proc) + "}@" + ap->agent;
  if (const auto *par = std::get_if<LabeledProcessTerm::MPar>(&m.node))
    return "(" + to_string(*par->left) + " | " + to_string(*par->right) + ")";
  const auto &res = std::get<LabeledProcessTerm::MRestrict>(m.node);
  return "new " + res.name + " in " + to_string(*res.body);
}

bool congruent(const ProcessTerm &a, const ProcessTerm &b) {
  return canonical_key(a) == canonical_key(b);
}

bool congruent(const LabeledProcessTerm &a, const LabeledProcessTerm &b) {
  return canonical_key(a) == canonical_key(b);
}

} // namespace epc
