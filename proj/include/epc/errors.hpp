#pragma once

#include <stdexcept>
#include <string>

namespace epc {

/* Raised by the model and formula parsers on malformed input. */
class syntax_error : public std::runtime_error {
public:
  syntax_error(int line, int col, const std::string &msg)
      : std::runtime_error("syntax error at " + std::to_string(line) + ":" +
                           std::to_string(col) + ": " + msg),
        line_(line), col_(col) {}

  int line() const { return line_; }
  int col() const { return col_; }

private:
  int line_;
  int col_;
};

enum class validation_kind {
  undeclared_agent,
  undeclared_value,
  undeclared_state,
  undeclared_prop,
  undeclared_constant,
  undeclared_term_name,
  duplicate_definition,
  duplicate_section,
  duplicate_agent_label,
  missing_section,
  mode_section_mismatch,
  non_total_h,
  unguarded_recursion,
  unbound_variable,
  binder_names_value,
  group_sequencing_not_allowed,
  restriction_captures_constant,
  empty_values,
  empty_coalition,
};

const char *validation_kind_name(validation_kind k);

/* Raised when a parsed model or formula fails a well-formedness rule. */
class validation_error : public std::runtime_error {
public:
  validation_error(validation_kind kind, const std::string &msg)
      : std::runtime_error(std::string(validation_kind_name(kind)) + ": " +
                           msg),
        kind_(kind) {}

  validation_kind kind() const { return kind_; }

private:
  validation_kind kind_;
};

enum class limit_kind {
  max_configs,
  max_const_unfold_depth,
  max_strategies,
};

/* Raised when exploration or checking exceeds a configured bound. */
class limit_error : public std::runtime_error {
public:
  limit_error(limit_kind kind, const std::string &msg)
      : std::runtime_error(msg), kind_(kind) {}

  limit_kind kind() const { return kind_; }

private:
  limit_kind kind_;
};

} // namespace epc
