#include "epc/formula.hpp"

#include <cctype>

#include "epc/errors.hpp"
#include "epc/model.hpp"
#include "epc/parser.hpp"

namespace epc {

namespace {

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

} // namespace

FormulaPtr f_prop(PropId p) {
  Formula f;
  f.kind = Formula::Kind::prop;
  f.prop = std::move(p);
  return node(std::move(f));
}
FormulaPtr f_not(FormulaPtr x) {
  Formula f;
  f.kind = Formula::Kind::negation;
  f.lhs = std::move(x);
  return node(std::move(f));
}
FormulaPtr f_or(FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = Formula::Kind::disjunction;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return node(std::move(f));
}
FormulaPtr f_and(FormulaPtr a, FormulaPtr b) {
  return f_not(f_or(f_not(std::move(a)), f_not(std::move(b))));
}
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b) {
  return f_or(f_not(std::move(a)), std::move(b));
}

namespace {

FormulaPtr unary(Formula::Kind k, std::set<AgentId> a, FormulaPtr x) {
  Formula f;
  f.kind = k;
  f.coalition = std::move(a);
  f.lhs = std::move(x);
  return node(std::move(f));
}

} // namespace

FormulaPtr f_know(AgentId i, FormulaPtr x) {
  Formula f;
  f.kind = Formula::Kind::know;
  f.agent = std::move(i);
  f.lhs = std::move(x);
  return node(std::move(f));
}
FormulaPtr f_every(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::every, std::move(a), std::move(x));
}
FormulaPtr f_dist(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::dist, std::move(a), std::move(x));
}
FormulaPtr f_common(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::common, std::move(a), std::move(x));
}
FormulaPtr f_next(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::coal_next, std::move(a), std::move(x));
}
FormulaPtr f_globally(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::coal_globally, std::move(a), std::move(x));
}
FormulaPtr f_finally(std::set<AgentId> a, FormulaPtr x) {
  return unary(Formula::Kind::coal_finally, std::move(a), std::move(x));
}
FormulaPtr f_until(std::set<AgentId> a, FormulaPtr f1, FormulaPtr f2) {
  Formula f;
  f.kind = Formula::Kind::coal_until;
  f.coalition = std::move(a);
  f.lhs = std::move(f1);
  f.rhs = std::move(f2);
  return node(std::move(f));
}

bool formula_equal(const Formula &a, const Formula &b) {
  if (a.kind != b.kind || a.prop != b.prop || a.agent != b.agent ||
      a.coalition != b.coalition)
    return false;
  if ((a.lhs == nullptr) != (b.lhs == nullptr)) return false;
  if ((a.rhs == nullptr) != (b.rhs == nullptr)) return false;
  if (a.lhs && !formula_equal(*a.lhs, *b.lhs)) return false;
  if (a.rhs && !formula_equal(*a.rhs, *b.rhs)) return false;
  return true;
}

namespace {

std::string join_agents(const std::set<AgentId> &a) {
  std::string out;
  for (const auto &x : a) {
    if (!out.empty()) out += ",";
    out += x;
  }
  return out;
}

} // namespace

std::string to_string(const Formula &f) {
  using K = Formula::Kind;
  switch (f.kind) {
  case K::prop:
    return f.prop;
  case K::negation: {
    std::string s = to_string(*f.lhs);
    if (f.lhs->kind == K::disjunction) s = "(" + s + ")";
    return "!" + s;
  }
  case K::disjunction: {
    std::string r = to_string(*f.rhs);
    if (f.rhs->kind == K::disjunction) r = "(" + r + ")";
    return to_string(*f.lhs) + " \\/ " + r;
  }
  case K::know:
    return "K{" + f.agent + "}(" + to_string(*f.lhs) + ")";
  case K::every:
    return "E{" + join_agents(f.coalition) + "}(" + to_string(*f.lhs) + ")";
  case K::dist:
    return "D{" + join_agents(f.coalition) + "}(" + to_string(*f.lhs) + ")";
  case K::common:
    return "C{" + join_agents(f.coalition) + "}(" + to_string(*f.lhs) + ")";
  case K::coal_next:
    return "<<" + join_agents(f.coalition) + ">>X(" + to_string(*f.lhs) + ")";
  case K::coal_globally:
    return "<<" + join_agents(f.coalition) + ">>G(" + to_string(*f.lhs) + ")";
  case K::coal_finally:
    return "<<" + join_agents(f.coalition) + ">>F(" + to_string(*f.lhs) + ")";
  case K::coal_until:
    return "<<" + join_agents(f.coalition) + ">>(" + to_string(*f.lhs) +
           " U " + to_string(*f.rhs) + ")";
  }
  return "";
}

/* ---- formula parser -------------------------------------------------- */

namespace {

bool word_char(char c) { return std::isalnum((unsigned char)c) || c == '_'; }

class FormulaParser {
public:
  FormulaParser(const std::string &text, const ModelDef &model,
                int base_line = 1)
      : text_(text), model_(model), base_line_(base_line) {}

  FormulaPtr parse() {
    FormulaPtr f = implies();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input after formula");
    return f;
  }

private:
  const std::string &text_;
  const ModelDef &model_;
  int base_line_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string &msg) {
    int line = base_line_, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') { ++line; col = 1; } else ++col;
    }
    throw syntax_error(line, col, msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace((unsigned char)text_[pos_]))
      ++pos_;
  }

  bool try_sym(const std::string &s) {
    skip_ws();
    if (text_.compare(pos_, s.size(), s) == 0) {
      pos_ += s.size();
      return true;
    }
    return false;
  }

  void expect_sym(const std::string &s) {
    if (!try_sym(s)) fail("expected '" + s + "'");
  }

  std::string word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && word_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected identifier");
    return text_.substr(start, pos_ - start);
  }

  char peek_char() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  std::set<AgentId> coalition(char close) {
    std::set<AgentId> agents;
    while (true) {
      skip_ws();
      if (peek_char() == close) break;
      std::string a = word();
      if (!model_.agents.count(a))
        throw validation_error(validation_kind::undeclared_agent,
                               "formula names unknown agent '" + a + "'");
      agents.insert(a);
      if (!try_sym(",")) break;
    }
    if (close == '}') expect_sym("}");
    else expect_sym(">>");
    if (agents.empty())
      throw validation_error(validation_kind::empty_coalition,
                             "coalition must name at least one agent");
    return agents;
  }

  FormulaPtr implies() {
    FormulaPtr l = disj();
    if (try_sym("->")) return f_implies(l, implies()); // right associative
    return l;
  }

  FormulaPtr disj() {
    FormulaPtr l = conj();
    while (try_sym("\\/")) l = f_or(l, conj());
    return l;
  }

  FormulaPtr conj() {
    FormulaPtr l = unary_f();
    while (try_sym("/\\")) l = f_and(l, unary_f());
    return l;
  }

  FormulaPtr unary_f() {
    skip_ws();
    if (try_sym("!")) return f_not(unary_f());
    if (try_sym("<<")) {
      std::set<AgentId> a = coalition('>');
      skip_ws();
      if (try_sym("X")) return f_next(std::move(a), unary_f());
      if (try_sym("G")) return f_globally(std::move(a), unary_f());
      if (try_sym("F")) return f_finally(std::move(a), unary_f());
      expect_sym("(");
      FormulaPtr f1 = implies();
      skip_ws();
      std::string u = word();
      if (u != "U") fail("expected 'U' in coalition until");
      FormulaPtr f2 = implies();
      expect_sym(")");
      return f_until(std::move(a), std::move(f1), std::move(f2));
    }
    if (try_sym("(")) {
      FormulaPtr f = implies();
      expect_sym(")");
      return f;
    }
    std::string w = word();
    if ((w == "K" || w == "E" || w == "D" || w == "C") && peek_char() == '{') {
      expect_sym("{");
      if (w == "K") {
        std::string a = this->word();
        if (!model_.agents.count(a))
          throw validation_error(validation_kind::undeclared_agent,
                                 "formula names unknown agent '" + a + "'");
        expect_sym("}");
        return f_know(a, unary_f());
      }
      std::set<AgentId> a = coalition('}');
      if (w == "E") return f_every(std::move(a), unary_f());
      if (w == "D") return f_dist(std::move(a), unary_f());
      return f_common(std::move(a), unary_f());
    }
    if (!model_.props.count(w))
      throw validation_error(validation_kind::undeclared_prop,
                             "formula names unknown proposition '" + w + "'");
    return f_prop(w);
  }
};

} // namespace

FormulaPtr parse_formula(const std::string &text, const ModelDef &model) {
  return FormulaParser(text, model).parse();
}

std::vector<FormulaPtr> parse_formula_lines(const std::string &text,
                                            const ModelDef &model) {
  std::vector<FormulaPtr> out;
  std::size_t start = 0;
  int line_no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    std::string line = text.substr(start, end - start);
    ++line_no;
    start = end + 1;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    bool blank = true;
    for (char c : line)
      if (!std::isspace((unsigned char)c)) blank = false;
    if (blank) {
      if (end == text.size()) break;
      continue;
    }
    out.push_back(FormulaParser(line, model, line_no).parse());
    if (end == text.size()) break;
  }
  return out;
}

} // namespace epc
