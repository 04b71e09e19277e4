#pragma once

#include <map>
#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

namespace epc {

using Name = std::string;    // channel or process-constant identifier
using Var = std::string;     // value variable bound by a receive
using Value = std::string;   // element of the finite value domain
using AgentId = std::string;
using StateId = std::string;
using PropId = std::string;
using CanonicalKey = std::string;

/* Payload of a send prefix: either a concrete value or a variable that an
 * enclosing receive will instantiate before the send can fire. */
struct ValueTerm {
  bool is_var = false;
  std::string text;

  static ValueTerm value(Value v) { return {false, std::move(v)}; }
  static ValueTerm variable(Var x) { return {true, std::move(x)}; }
  friend bool operator==(const ValueTerm &a, const ValueTerm &b) {
    return a.is_var == b.is_var && a.text == b.text;
  }
};

struct SendAct {
  Name channel;
  ValueTerm payload;
};
struct ReceiveAct {
  Name channel;
  Var binder;
};
struct TauAct {};

using Action = std::variant<SendAct, ReceiveAct, TauAct>;

struct ProcessTerm;
using ProcPtr = std::shared_ptr<const ProcessTerm>;

struct ProcessTerm {
  struct Nil {};
  struct Prefix {
    Action act;
    ProcPtr cont;
  };
  struct Restrict {
    Name name;
    ProcPtr body;
  };
  struct Par {
    ProcPtr left, right;
  };
  struct Sum {
    ProcPtr left, right;
  };
  /* Group sequencing "(P | Q).R": a parallel group used in prefix position.
   * Inert data; only models with an explicit transition table may carry it. */
  struct Seq {
    ProcPtr head, cont;
  };
  struct ConstRef {
    Name name;
  };

  std::variant<Nil, Prefix, Restrict, Par, Sum, Seq, ConstRef> node;
};

ProcPtr make_nil();
ProcPtr make_prefix(Action act, ProcPtr cont);
ProcPtr make_restrict(Name name, ProcPtr body);
ProcPtr make_par(ProcPtr left, ProcPtr right);
ProcPtr make_sum(ProcPtr left, ProcPtr right);
ProcPtr make_seq(ProcPtr head, ProcPtr cont);
ProcPtr make_const(Name name);

struct LabeledProcessTerm;
using LProcPtr = std::shared_ptr<const LabeledProcessTerm>;

struct LabeledProcessTerm {
  struct AgentProc {
    ProcPtr proc;
    AgentId agent;
  };
  struct MPar {
    LProcPtr left, right;
  };
  struct MRestrict {
    Name name;
    LProcPtr body;
  };

  std::variant<AgentProc, MPar, MRestrict> node;
};

LProcPtr make_agent(ProcPtr proc, AgentId agent);
LProcPtr make_mpar(LProcPtr left, LProcPtr right);
LProcPtr make_mrestrict(Name name, LProcPtr body);

/* A transition label of an unlabeled process: tau, a send, or a receive
 * instantiated with the concrete value it consumed. */
struct GroundAction {
  enum class Kind { send, receive, tau };
  Kind kind = Kind::tau;
  Name channel;
  Value value;

  std::string text() const;
  friend bool operator==(const GroundAction &a, const GroundAction &b) {
    return a.kind == b.kind && a.channel == b.channel && a.value == b.value;
  }
  friend bool operator<(const GroundAction &a, const GroundAction &b) {
    return a.text() < b.text();
  }
};

/* Visible labeled action {'a<t>}_i or {a<t>}_i. */
struct VisibleAction {
  bool is_send = true;
  Name channel;
  Value value;
  AgentId agent;
};

/* Synchronization label tau(i,j): agent i sent, agent j received.  A single
 * agent's internal tau is recorded as tau(i,i). */
struct SyncTauAction {
  AgentId sender;
  AgentId receiver;
};

using LabeledAction = std::variant<VisibleAction, SyncTauAction>;

std::string label_text(const LabeledAction &a);
bool label_equal(const LabeledAction &a, const LabeledAction &b);

/* Channel names free in a term; receive binders bind variables, not names,
 * so a receive's channel is always free. */
std::set<Name> free_names(const ProcessTerm &p);
std::set<Name> free_names(const LabeledProcessTerm &m);

/* Replace free occurrences of variable x with value v in send payloads. */
ProcPtr substitute_value(const ProcPtr &p, const Var &x, const Value &v);

/* Key equal for exactly the terms identified by the structural congruence:
 * commutativity/associativity/unit of | and +, summand deduplication,
 * restriction reordering, scope extrusion, and renaming of bound names. */
CanonicalKey canonical_key(const ProcessTerm &p);
CanonicalKey canonical_key(const LabeledProcessTerm &m);

bool congruent(const ProcessTerm &a, const ProcessTerm &b);
bool congruent(const LabeledProcessTerm &a, const LabeledProcessTerm &b);

std::string to_string(const ProcessTerm &p);
std::string to_string(const LabeledProcessTerm &m);

} // namespace epc
