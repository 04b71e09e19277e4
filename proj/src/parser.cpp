#include "epc/parser.hpp"

#include <cctype>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "epc/errors.hpp"

namespace epc {

namespace {

/* ---- lexer ----------------------------------------------------------- */

struct Token {
  enum class Type { word, sym, eof };
  Type type = Type::eof;
  std::string text;
  int line = 1;
  int col = 1;
};

bool word_start(char c) { return std::isalnum((unsigned char)c) || c == '_'; }
bool word_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

std::vector<Token> lex(const std::string &text) {
  std::vector<Token> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i + k] == '\n') { ++line; col = 1; } else ++col;
    }
    i += n;
  };
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace((unsigned char)c)) { advance(1); continue; }
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (word_start(c)) {
      std::size_t j = i;
      while (j < text.size() && word_char(text[j])) ++j;
      t.type = Token::Type::word;
      t.text = text.substr(i, j - i);
      advance(j - i);
      out.push_back(std::move(t));
      continue;
    }
    t.type = Token::Type::sym;
    if (c == '-' && i + 1 < text.size() && text[i + 1] == '>') {
      t.text = "->";
      advance(2);
    } else if (std::string(";=,(){}|+.<>@:-'").find(c) != std::string::npos) {
      t.text = std::string(1, c);
      advance(1);
    } else {
      throw syntax_error(line, col,
                         std::string("unexpected character '") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token eof;
  eof.type = Token::Type::eof;
  eof.line = line;
  eof.col = col;
  out.push_back(eof);
  return out;
}

bool lower_start(const std::string &w) {
  return !w.empty() && std::islower((unsigned char)w[0]);
}
bool upper_start(const std::string &w) {
  return !w.empty() && std::isupper((unsigned char)w[0]);
}

/* ---- parser ----------------------------------------------------------- */

class ModelParser {
public:
  explicit ModelParser(const std::string &text) : toks_(lex(text)) {}

  ModelDef parse() {
    while (peek().type != Token::Type::eof) statement();
    validate();
    return model_;
  }

private:
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  ModelDef model_;

  bool seen_agents_ = false, seen_values_ = false, seen_props_ = false,
       seen_states_ = false, seen_system_ = false, seen_init_ = false,
       seen_mode_ = false, seen_init_term_ = false;
  std::set<StateId> t_rows_;

  const Token &peek() const { return toks_[pos_]; }

  [[noreturn]] void fail(const Token &t, const std::string &msg) {
    throw syntax_error(t.line, t.col, msg);
  }

  Token next() { return toks_[pos_++]; }

  bool try_sym(const std::string &s) {
    if (peek().type == Token::Type::sym && peek().text == s) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect_sym(const std::string &s) {
    if (!try_sym(s)) fail(peek(), "expected '" + s + "'");
  }

  std::string expect_word(const std::string &what) {
    if (peek().type != Token::Type::word) fail(peek(), "expected " + what);
    return next().text;
  }

  bool at_word(const std::string &w) const {
    return peek().type == Token::Type::word && peek().text == w;
  }

  /* ---- statements ---- */

  void statement() {
    Token t = peek();
    std::string w = expect_word("a statement keyword");
    if (w == "agents") return section_list(t, w);
    if (w == "values") return section_list(t, w);
    if (w == "props") return section_list(t, w);
    if (w == "states") return section_list(t, w);
    if (w == "def") return parse_def(t);
    if (w == "system") return parse_system(t);
    if (w == "init") return parse_init(t);
    if (w == "initM") return parse_init_term(t);
    if (w == "mode") return parse_mode(t);
    if (w == "M") return parse_named_term(t);
    if (w == "K") return parse_kedge();
    if (w == "delta") return parse_delta();
    if (w == "h") return parse_h();
    if (w == "T") return parse_t();
    fail(t, "unknown statement '" + w + "'");
  }

  void section_list(const Token &at, const std::string &kind) {
    bool *seen = kind == "agents"   ? &seen_agents_
                 : kind == "values" ? &seen_values_
                 : kind == "props"  ? &seen_props_
                                    : &seen_states_;
    if (*seen)
      throw validation_error(validation_kind::duplicate_section,
                             "section '" + kind + "' appears twice");
    *seen = true;
    std::set<std::string> *target = kind == "agents"   ? &model_.agents
                                    : kind == "values" ? &model_.values
                                    : kind == "props"  ? &model_.props
                                                       : &model_.states;
    (void)at;
    while (!try_sym(";")) {
      std::string item = expect_word("an identifier");
      if (!target->insert(item).second)
        throw validation_error(validation_kind::duplicate_definition,
                               kind + " entry '" + item + "' declared twice");
      if (try_sym(";")) break;
      expect_sym(",");
    }
  }

  void require_values_declared(const Token &at) {
    if (!seen_values_)
      fail(at, "the values section must appear before process terms");
  }

  void parse_def(const Token &at) {
    require_values_declared(at);
    Token nt = peek();
    std::string name = expect_word("a constant name");
    if (!upper_start(name))
      fail(nt, "constant name must start with an uppercase letter");
    expect_sym("=");
    ProcPtr body = parse_proc();
    expect_sym(";");
    if (!model_.equations.emplace(name, body).second)
      throw validation_error(validation_kind::duplicate_definition,
                             "constant '" + name + "' defined twice");
  }

  void parse_system(const Token &at) {
    require_values_declared(at);
    if (seen_system_)
      throw validation_error(validation_kind::duplicate_section,
                             "section 'system' appears twice");
    seen_system_ = true;
    expect_sym("=");
    model_.system = parse_mproc();
    expect_sym(";");
  }

  void parse_init(const Token &at) {
    (void)at;
    if (seen_init_)
      throw validation_error(validation_kind::duplicate_section,
                             "section 'init' appears twice");
    seen_init_ = true;
    model_.init_state = expect_word("a state");
    expect_sym(";");
  }

  void parse_init_term(const Token &at) {
    (void)at;
    if (seen_init_term_)
      throw validation_error(validation_kind::duplicate_section,
                             "section 'initM' appears twice");
    seen_init_term_ = true;
    model_.init_term = expect_word("a term name");
    expect_sym(";");
  }

  void parse_mode(const Token &at) {
    if (seen_mode_)
      throw validation_error(validation_kind::duplicate_section,
                             "section 'mode' appears twice");
    seen_mode_ = true;
    Token mt = peek();
    std::string m = expect_word("a mode");
    if (m != "explicit") fail(mt, "the only declarable mode is 'explicit'");
    (void)at;
    model_.mode = ModelMode::explicit_table;
    expect_sym(";");
  }

  void parse_named_term(const Token &at) {
    require_values_declared(at);
    Token nt = peek();
    std::string name = expect_word("a term name");
    if (!upper_start(name))
      fail(nt, "term name must start with an uppercase letter");
    expect_sym("=");
    LProcPtr body = parse_mproc();
    expect_sym(";");
    if (!model_.named_terms.emplace(name, body).second)
      throw validation_error(validation_kind::duplicate_definition,
                             "term '" + name + "' defined twice");
  }

  void parse_kedge() {
    KEdge e;
    e.from = expect_word("a state");
    e.action = parse_label();
    e.to = expect_word("a state");
    expect_sym(";");
    model_.k_relation.push_back(std::move(e));
  }

  void parse_delta() {
    DeltaEdge e;
    e.from = expect_word("a term name");
    e.action = parse_label();
    e.to = expect_word("a term name");
    expect_sym(";");
    model_.delta.push_back(std::move(e));
  }

  void parse_h() {
    AgentId agent = expect_word("an agent");
    expect_sym(":");
    bool any = false;
    while (!try_sym(";")) {
      StateId s = expect_word("a state");
      expect_sym("=");
      std::string token = expect_word("an observation token");
      if (!model_.h_map.emplace(std::make_pair(agent, s), token).second)
        throw validation_error(validation_kind::duplicate_definition,
                               "h(" + agent + ", " + s + ") given twice");
      any = true;
    }
    if (!any)
      throw validation_error(validation_kind::non_total_h,
                             "empty h row for agent '" + agent + "'");
  }

  void parse_t() {
    StateId s = expect_word("a state");
    if (!t_rows_.insert(s).second)
      throw validation_error(validation_kind::duplicate_definition,
                             "labeling for state '" + s + "' given twice");
    expect_sym(":");
    std::set<PropId> props;
    while (!try_sym(";")) props.insert(expect_word("a proposition"));
    model_.labeling[s] = std::move(props);
  }

  /* ---- transition labels ---- */

  LabeledAction parse_label() {
    expect_sym("-");
    if (at_word("tau")) {
      next();
      expect_sym("(");
      SyncTauAction t;
      t.sender = expect_word("an agent");
      expect_sym(",");
      t.receiver = expect_word("an agent");
      expect_sym(")");
      expect_sym("->");
      return t;
    }
    VisibleAction v;
    v.is_send = try_sym("'");
    Token ct = peek();
    v.channel = expect_word("a channel");
    if (!lower_start(v.channel))
      fail(ct, "channel name must start with a lowercase letter");
    expect_sym("<");
    v.value = expect_word("a value");
    expect_sym(">");
    expect_sym("@");
    v.agent = expect_word("an agent");
    expect_sym("->");
    return v;
  }

  /* ---- process terms ---- */

  ValueTerm resolve_payload(const std::string &w) {
    if (model_.values.count(w)) return ValueTerm::value(w);
    return ValueTerm::variable(w);
  }

  ProcPtr parse_proc() {
    if (at_word("new")) {
      next();
      Token nt = peek();
      std::string name = expect_word("a channel");
      if (!lower_start(name))
        fail(nt, "channel name must start with a lowercase letter");
      Token it = peek();
      if (expect_word("'in'") != "in") fail(it, "expected 'in'");
      return make_restrict(name, parse_proc());
    }
    return parse_sum();
  }

  ProcPtr parse_sum() {
    ProcPtr l = parse_par();
    while (try_sym("+")) {
      if (at_word("new")) return make_sum(l, parse_proc());
      l = make_sum(l, parse_par());
    }
    return l;
  }

  ProcPtr parse_par() {
    ProcPtr l = parse_prefixed();
    while (try_sym("|")) {
      if (at_word("new")) return make_par(l, parse_proc());
      l = make_par(l, parse_prefixed());
    }
    return l;
  }

  ProcPtr parse_prefixed() {
    Token t = peek();
    if (try_sym("'")) { // send prefix
      Token ct = peek();
      std::string ch = expect_word("a channel");
      if (!lower_start(ch))
        fail(ct, "channel name must start with a lowercase letter");
      expect_sym("<");
      std::string payload = expect_word("a value or variable");
      expect_sym(">");
      expect_sym(".");
      return make_prefix(SendAct{ch, resolve_payload(payload)},
                         parse_prefixed());
    }
    if (try_sym("(")) {
      ProcPtr inner = parse_proc();
      expect_sym(")");
      if (try_sym(".")) return make_seq(inner, parse_prefixed());
      return inner;
    }
    if (peek().type != Token::Type::word)
      fail(t, "expected a process term");
    std::string w = next().text;
    if (w == "0") return make_nil();
    if (w == "new")
      fail(t, "'new' scopes to the end of the expression; write "
              "'(new a in P)' in prefix position");
    if (w == "tau") {
      expect_sym(".");
      return make_prefix(TauAct{}, parse_prefixed());
    }
    if (upper_start(w)) {
      if (peek().type == Token::Type::sym && peek().text == "(")
        fail(peek(), "process constants take no arguments");
      return make_const(w);
    }
    // lowercase word: receive prefix a(x).P
    expect_sym("(");
    Token bt = peek();
    std::string binder = expect_word("a variable");
    if (!lower_start(binder))
      fail(bt, "variable name must start with a lowercase letter");
    expect_sym(")");
    expect_sym(".");
    return make_prefix(ReceiveAct{w, binder}, parse_prefixed());
  }

  /* ---- labeled terms ---- */

  LProcPtr parse_mproc() {
    if (at_word("new")) {
      next();
      Token nt = peek();
      std::string name = expect_word("a channel");
      if (!lower_start(name))
        fail(nt, "channel name must start with a lowercase letter");
      Token it = peek();
      if (expect_word("'in'") != "in") fail(it, "expected 'in'");
      return make_mrestrict(name, parse_mproc());
    }
    LProcPtr l = parse_matom();
    while (try_sym("|")) {
      if (at_word("new")) {
        // right operand is a maximal-scope restriction
        return make_mpar(l, parse_mproc());
      }
      l = make_mpar(l, parse_matom());
    }
    return l;
  }

  LProcPtr parse_matom() {
    if (try_sym("{")) {
      ProcPtr p = parse_proc();
      expect_sym("}");
      expect_sym("@");
      AgentId agent = expect_word("an agent");
      return make_agent(p, agent);
    }
    if (try_sym("(")) {
      LProcPtr m = parse_mproc();
      expect_sym(")");
      return m;
    }
    fail(peek(), "expected a labeled component '{P}@agent'");
  }

  /* ---- validation -------------------------------------------------- */

  [[noreturn]] static void verr(validation_kind k, const std::string &msg) {
    throw validation_error(k, msg);
  }

  void validate() {
    if (model_.agents.empty())
      verr(validation_kind::missing_section, "no agents declared");
    if (model_.values.empty())
      verr(validation_kind::empty_values,
           "the value domain must name at least one value");
    if (model_.states.empty())
      verr(validation_kind::missing_section, "no states declared");

    if (model_.mode == ModelMode::derived) {
      if (!model_.named_terms.empty() || !model_.delta.empty() ||
          seen_init_term_)
        verr(validation_kind::mode_section_mismatch,
             "M/delta/initM require 'mode explicit'");
      if (!model_.system)
        verr(validation_kind::missing_section, "no system section");
    } else {
      if (model_.system)
        verr(validation_kind::mode_section_mismatch,
             "'system' is not allowed in explicit mode");
      if (model_.named_terms.empty())
        verr(validation_kind::missing_section,
             "explicit mode needs at least one named term");
      if (!seen_init_term_)
        verr(validation_kind::missing_section, "no initM section");
      if (!model_.named_terms.count(model_.init_term))
        verr(validation_kind::undeclared_term_name,
             "initM names unknown term '" + model_.init_term + "'");
    }

    if (!seen_init_)
      verr(validation_kind::missing_section, "no init section");
    if (!model_.states.count(model_.init_state))
      verr(validation_kind::undeclared_state,
           "init names unknown state '" + model_.init_state + "'");

    for (const auto &[name, body] : model_.equations) check_proc(body);
    check_guardedness();
    if (model_.system) check_lproc(model_.system);
    for (const auto &[name, body] : model_.named_terms) check_lproc(body);

    for (const KEdge &e : model_.k_relation) {
      require_state(e.from);
      require_state(e.to);
      check_label(e.action);
    }
    for (const DeltaEdge &e : model_.delta) {
      require_term_name(e.from);
      require_term_name(e.to);
      check_label(e.action);
    }

    for (const auto &[key, token] : model_.h_map) {
      require_agent(key.first);
      require_state(key.second);
      (void)token;
    }
    for (const AgentId &a : model_.agents)
      for (const StateId &s : model_.states)
        if (!model_.h_map.count({a, s}))
          verr(validation_kind::non_total_h,
               "h(" + a + ", " + s + ") is not defined");

    for (const auto &[s, props] : model_.labeling) {
      require_state(s);
      for (const PropId &p : props)
        if (!model_.props.count(p))
          verr(validation_kind::undeclared_prop,
               "labeling uses unknown proposition '" + p + "'");
    }
  }

  void require_state(const StateId &s) {
    if (!model_.states.count(s))
      verr(validation_kind::undeclared_state, "unknown state '" + s + "'");
  }
  void require_agent(const AgentId &a) {
    if (!model_.agents.count(a))
      verr(validation_kind::undeclared_agent, "unknown agent '" + a + "'");
  }
  void require_term_name(const std::string &n) {
    if (!model_.named_terms.count(n))
      verr(validation_kind::undeclared_term_name, "unknown term '" + n + "'");
  }

  void check_label(const LabeledAction &a) {
    if (const auto *v = std::get_if<VisibleAction>(&a)) {
      if (!model_.values.count(v->value))
        verr(validation_kind::undeclared_value,
             "label uses unknown value '" + v->value + "'");
      require_agent(v->agent);
    } else {
      const auto &t = std::get<SyncTauAction>(a);
      require_agent(t.sender);
      require_agent(t.receiver);
    }
  }

  /* Free channel names of a constant's definition, transitively through the
   * constants it references. */
  std::set<Name> const_closure_names(const Name &c,
                                     std::map<Name, std::set<Name>> &memo,
                                     std::set<Name> &in_progress) {
    if (auto it = memo.find(c); it != memo.end()) return it->second;
    if (in_progress.count(c)) return {};
    in_progress.insert(c);
    std::set<Name> out;
    auto it = model_.equations.find(c);
    if (it != model_.equations.end()) {
      out = free_names(*it->second);
      for (const Name &r : referenced_consts(it->second))
        for (const Name &n :
             const_closure_names(r, memo, in_progress))
          out.insert(n);
    }
    in_progress.erase(c);
    memo[c] = out;
    return out;
  }

  static std::set<Name> referenced_consts(const ProcPtr &p) {
    std::set<Name> out;
    std::function<void(const ProcPtr &)> walk = [&](const ProcPtr &q) {
      using PT = ProcessTerm;
      if (std::holds_alternative<PT::ConstRef>(q->node)) {
        out.insert(std::get<PT::ConstRef>(q->node).name);
      } else if (const auto *pr = std::get_if<PT::Prefix>(&q->node)) {
        walk(pr->cont);
      } else if (const auto *r = std::get_if<PT::Restrict>(&q->node)) {
        walk(r->body);
      } else if (const auto *pa = std::get_if<PT::Par>(&q->node)) {
        walk(pa->left);
        walk(pa->right);
      } else if (const auto *su = std::get_if<PT::Sum>(&q->node)) {
        walk(su->left);
        walk(su->right);
      } else if (const auto *se = std::get_if<PT::Seq>(&q->node)) {
        walk(se->head);
        walk(se->cont);
      }
    };
    walk(p);
    return out;
  }

  void check_restrict_capture(const Name &name, const std::set<Name> &consts) {
    std::map<Name, std::set<Name>> memo;
    for (const Name &c : consts) {
      std::set<Name> in_progress;
      if (const_closure_names(c, memo, in_progress).count(name))
        verr(validation_kind::restriction_captures_constant,
             "restriction on '" + name + "' would capture channel '" + name +
                 "' free in constant '" + c + "'");
    }
  }

  std::set<Name> transitive_consts(const ProcPtr &p) {
    std::set<Name> out = referenced_consts(p);
    std::vector<Name> work(out.begin(), out.end());
    while (!work.empty()) {
      Name c = work.back();
      work.pop_back();
      auto it = model_.equations.find(c);
      if (it == model_.equations.end()) continue;
      for (const Name &r : referenced_consts(it->second))
        if (out.insert(r).second) work.push_back(r);
    }
    return out;
  }

  void check_proc(const ProcPtr &p) {
    std::set<Var> bound;
    check_proc_rec(p, bound);
  }

  void check_proc_rec(const ProcPtr &p, std::set<Var> &bound) {
    using PT = ProcessTerm;
    if (std::holds_alternative<PT::Nil>(p->node)) return;
    if (const auto *c = std::get_if<PT::ConstRef>(&p->node)) {
      if (!model_.equations.count(c->name))
        verr(validation_kind::undeclared_constant,
             "unknown process constant '" + c->name + "'");
      return;
    }
    if (const auto *pr = std::get_if<PT::Prefix>(&p->node)) {
      if (const auto *s = std::get_if<SendAct>(&pr->act)) {
        if (s->payload.is_var && !bound.count(s->payload.text))
          verr(validation_kind::unbound_variable,
               "variable '" + s->payload.text +
                   "' is not bound by any enclosing receive and is not a "
                   "declared value");
        check_proc_rec(pr->cont, bound);
        return;
      }
      if (const auto *r = std::get_if<ReceiveAct>(&pr->act)) {
        if (model_.values.count(r->binder))
          verr(validation_kind::binder_names_value,
               "receive binder '" + r->binder +
                   "' collides with a declared value");
        bool fresh = bound.insert(r->binder).second;
        check_proc_rec(pr->cont, bound);
        if (fresh) bound.erase(r->binder);
        return;
      }
      check_proc_rec(pr->cont, bound);
      return;
    }
    if (const auto *r = std::get_if<PT::Restrict>(&p->node)) {
      check_restrict_capture(r->name, transitive_consts(r->body));
      check_proc_rec(r->body, bound);
      return;
    }
    if (const auto *pa = std::get_if<PT::Par>(&p->node)) {
      check_proc_rec(pa->left, bound);
      check_proc_rec(pa->right, bound);
      return;
    }
    if (const auto *su = std::get_if<PT::Sum>(&p->node)) {
      check_proc_rec(su->left, bound);
      check_proc_rec(su->right, bound);
      return;
    }
    const auto &se = std::get<PT::Seq>(p->node);
    if (model_.mode == ModelMode::derived)
      verr(validation_kind::group_sequencing_not_allowed,
           "group sequencing '(P).Q' needs an explicit transition table");
    check_proc_rec(se.head, bound);
    check_proc_rec(se.cont, bound); // binders in the head do not scope here
  }

  void check_lproc(const LProcPtr &m) {
    std::set<AgentId> leaf_agents;
    check_lproc_rec(m, leaf_agents);
  }

  void check_lproc_rec(const LProcPtr &m, std::set<AgentId> &leaf_agents) {
    using LT = LabeledProcessTerm;
    if (const auto *ap = std::get_if<LT::AgentProc>(&m->node)) {
      require_agent(ap->agent);
      if (!leaf_agents.insert(ap->agent).second)
        verr(validation_kind::duplicate_agent_label,
             "agent '" + ap->agent + "' labels two components");
      check_proc(ap->proc);
      return;
    }
    if (const auto *mp = std::get_if<LT::MPar>(&m->node)) {
      check_lproc_rec(mp->left, leaf_agents);
      check_lproc_rec(mp->right, leaf_agents);
      return;
    }
    const auto &mr = std::get<LT::MRestrict>(m->node);
    std::set<Name> consts;
    collect_lproc_consts(mr.body, consts);
    check_restrict_capture(mr.name, consts);
    check_lproc_rec(mr.body, leaf_agents);
  }

  void collect_lproc_consts(const LProcPtr &m, std::set<Name> &out) {
    using LT = LabeledProcessTerm;
    if (const auto *ap = std::get_if<LT::AgentProc>(&m->node)) {
      for (const Name &c : transitive_consts(ap->proc)) out.insert(c);
      return;
    }
    if (const auto *mp = std::get_if<LT::MPar>(&m->node)) {
      collect_lproc_consts(mp->left, out);
      collect_lproc_consts(mp->right, out);
      return;
    }
    collect_lproc_consts(std::get<LT::MRestrict>(m->node).body, out);
  }

  /* A constant may not reach itself through unguarded references. */
  void check_guardedness() {
    std::map<Name, std::set<Name>> unguarded;
    for (const auto &[name, body] : model_.equations)
      collect_unguarded(body, unguarded[name]);
    // depth-first cycle detection over the unguarded-reference graph
    std::map<Name, int> color; // 0 new, 1 active, 2 done
    std::function<void(const Name &)> visit = [&](const Name &c) {
      int &col = color[c];
      if (col == 1)
        verr(validation_kind::unguarded_recursion,
             "constant '" + c + "' reaches itself without passing a prefix");
      if (col == 2) return;
      col = 1;
      auto it = unguarded.find(c);
      if (it != unguarded.end())
        for (const Name &r : it->second) visit(r);
      col = 2;
    };
    for (const auto &[name, refs] : unguarded) {
      (void)refs;
      visit(name);
    }
  }

  static void collect_unguarded(const ProcPtr &p, std::set<Name> &out) {
    using PT = ProcessTerm;
    if (const auto *c = std::get_if<PT::ConstRef>(&p->node)) {
      out.insert(c->name);
    } else if (const auto *r = std::get_if<PT::Restrict>(&p->node)) {
      collect_unguarded(r->body, out);
    } else if (const auto *pa = std::get_if<PT::Par>(&p->node)) {
      collect_unguarded(pa->left, out);
      collect_unguarded(pa->right, out);
    } else if (const auto *su = std::get_if<PT::Sum>(&p->node)) {
      collect_unguarded(su->left, out);
      collect_unguarded(su->right, out);
    } else if (const auto *se = std::get_if<PT::Seq>(&p->node)) {
      collect_unguarded(se->head, out); // the tail is guarded by the group
    }
    // Nil and Prefix contribute nothing
  }
};

} // namespace

ModelDef parse_model(const std::string &text) {
  return ModelParser(text).parse();
}

} // namespace epc
