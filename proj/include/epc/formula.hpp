#pragma once

#include <memory>
#include <set>
#include <string>

#include "epc/syntax.hpp"

namespace epc {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/* Strategic-epistemic formula tree.  Conjunction and implication are parser
 * sugar and are rewritten into negation/disjunction at parse time. */
struct Formula {
  enum class Kind {
    prop,          // atomic proposition
    negation,      // !f          (lhs)
    disjunction,   // f \/ g      (lhs, rhs)
    know,          // K{i} f      (agent, lhs)
    every,         // E{A} f      (coalition, lhs)
    dist,          // D{A} f      (coalition, lhs)
    common,        // C{A} f      (coalition, lhs)
    coal_next,     // <<A>>X f    (coalition, lhs)
    coal_globally, // <<A>>G f
    coal_finally,  // <<A>>F f
    coal_until,    // <<A>>(f U g)
  };

  Kind kind;
  PropId prop;
  AgentId agent;
  std::set<AgentId> coalition;
  FormulaPtr lhs, rhs;
};

FormulaPtr f_prop(PropId p);
FormulaPtr f_not(FormulaPtr f);
FormulaPtr f_or(FormulaPtr a, FormulaPtr b);
FormulaPtr f_and(FormulaPtr a, FormulaPtr b);     // !(!a \/ !b)
FormulaPtr f_implies(FormulaPtr a, FormulaPtr b); // !a \/ b
FormulaPtr f_know(AgentId i, FormulaPtr f);
FormulaPtr f_every(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_dist(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_common(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_next(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_globally(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_finally(std::set<AgentId> a, FormulaPtr f);
FormulaPtr f_until(std::set<AgentId> a, FormulaPtr f1, FormulaPtr f2);

bool formula_equal(const Formula &a, const Formula &b);

/* Reparsable rendering with minimal parentheses. */
std::string to_string(const Formula &f);

} // namespace epc
