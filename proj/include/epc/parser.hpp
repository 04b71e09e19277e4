#pragma once

#include <string>
#include <vector>

#include "epc/errors.hpp"
#include "epc/formula.hpp"
#include "epc/model.hpp"

namespace epc {

/* Parse and validate a model description.  Throws syntax_error on malformed
 * input and validation_error on well-formedness violations. */
ModelDef parse_model(const std::string &text);

/* Parse one formula and validate its agents and propositions against the
 * model. */
FormulaPtr parse_formula(const std::string &text, const ModelDef &model);

/* Parse a formulas file: one formula per line, '#' starts a comment. */
std::vector<FormulaPtr> parse_formula_lines(const std::string &text,
                                            const ModelDef &model);

} // namespace epc
