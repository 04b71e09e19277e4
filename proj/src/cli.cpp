#include "epc/cli.hpp"

#include <cctype>
#include <fstream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "epc/checker.hpp"
#include "epc/engine.hpp"
#include "epc/epistemic.hpp"
#include "epc/errors.hpp"
#include "epc/parser.hpp"

namespace epc {

namespace {

bool slurp(const std::string &path, std::string &out) {
  std::ifstream in(path);
  if (!in.good()) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

std::string config_name(const Configuration &c) {
  return c.term_name.empty() ? c.key : c.term_name;
}

std::string witness_text(const PartialStrategy &w) {
  std::string out = "U={";
  bool first = true;
  for (const StateId &s : w.domain) {
    if (!first) out += ",";
    out += s;
    first = false;
  }
  out += "} choice{";
  first = true;
  for (const auto &[s, act] : w.choice) {
    if (!first) out += ", ";
    out += s + ":" + label_text(act);
    first = false;
  }
  return out + "}";
}

nlohmann::json witness_json(const PartialStrategy &w) {
  nlohmann::json j;
  j["domain"] = nlohmann::json::array();
  for (const StateId &s : w.domain) j["domain"].push_back(s);
  j["choice"] = nlohmann::json::object();
  for (const auto &[s, act] : w.choice) j["choice"][s] = label_text(act);
  return j;
}

/* "state" or "state/term": an exploration start override. */
void apply_init_override(ModelDef &model, const std::string &state,
                         const std::string &term) {
  initial_configuration(model, state, term); // validates both parts
  if (!state.empty()) model.init_state = state;
  if (!term.empty()) model.init_term = term;
}

std::vector<std::string> comma_split(const std::string &text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace((unsigned char)c)) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

void dump_graph(const StateSpace &space, std::ostream &out) {
  for (std::size_t i = 0; i < space.configs.size(); ++i)
    out << "N " << i << " " << space.configs[i].state << " "
        << config_name(space.configs[i]) << "\n";
  for (const Transition &t : space.edges)
    out << "E " << t.from << " " << label_text(t.action) << " " << t.to
        << "\n";
}

int dump_epistemic(const StateSpace &space, const ModelDef &model,
                   const std::string &agents_text, std::ostream &out,
                   std::ostream &err) {
  std::vector<std::string> agents = comma_split(agents_text);
  std::set<AgentId> group(agents.begin(), agents.end());
  for (const AgentId &i : group)
    if (!model.agents.count(i)) {
      err << "error: undeclared_agent: '" << i
          << "' is not a declared agent\n";
      return exit_input;
    }
  if (group.empty()) {
    err << "error: --dump-epistemic needs at least one agent\n";
    return exit_input;
  }

  for (const AgentId &i : group) {
    std::set<int> done;
    for (std::size_t c = 0; c < space.configs.size(); ++c) {
      if (done.count((int)c)) continue;
      out << "H " << i;
      for (int member : agent_class(space, model, i, (int)c)) {
        out << " " << member;
        done.insert(member);
      }
      out << "\n";
    }
  }
  AccessRelation rel = common_reach(space, model, group);
  for (const auto &cls : rel.classes) {
    out << "C";
    for (int member : cls) out << " " << member;
    out << "\n";
  }
  return exit_ok;
}

} // namespace

int run_query(const RunConfig &config, std::ostream &out, std::ostream &err) {
  if (config.formulas.empty() && !config.dump_graph &&
      config.dump_epistemic.empty()) {
    err << "error: nothing to do: give a formula or a dump flag\n";
    return exit_input;
  }

  std::string model_text;
  if (!slurp(config.model_path, model_text)) {
    err << "error: " << config.model_path << ": cannot open file\n";
    return exit_input;
  }

  ModelDef model;
  try {
    model = parse_model(model_text);
    apply_init_override(model, config.init_state, config.init_term);
  } catch (const syntax_error &e) {
    err << config.model_path << ":" << e.line() << ":" << e.col()
        << ": error: " << e.what() << "\n";
    return exit_input;
  } catch (const validation_error &e) {
    err << config.model_path << ": error: " << e.what() << "\n";
    return exit_input;
  }

  // formulas: every entry is either a file of formula lines or one formula
  std::vector<FormulaPtr> formulas;
  std::vector<std::string> formula_texts;
  try {
    for (const std::string &entry : config.formulas) {
      std::string file_text;
      if (slurp(entry, file_text)) {
        for (const FormulaPtr &f : parse_formula_lines(file_text, model)) {
          formulas.push_back(f);
          formula_texts.push_back(to_string(*f));
        }
      } else {
        formulas.push_back(parse_formula(entry, model));
        formula_texts.push_back(to_string(*formulas.back()));
      }
    }
  } catch (const syntax_error &e) {
    err << "formula: error: " << e.what() << "\n";
    return exit_input;
  } catch (const validation_error &e) {
    err << "formula: error: " << e.what() << "\n";
    return exit_input;
  }

  StateSpace space;
  try {
    ExplorationLimits limits;
    limits.max_configs = config.max_configs;
    space = explore(model, limits);
  } catch (const limit_error &e) {
    err << "error: " << e.what() << "\n";
    return exit_infra;
  } catch (const validation_error &e) {
    err << config.model_path << ": error: " << e.what() << "\n";
    return exit_input;
  }

  if (config.dump_graph) dump_graph(space, out);
  if (!config.dump_epistemic.empty()) {
    int rc = dump_epistemic(space, model, config.dump_epistemic, out, err);
    if (rc != exit_ok) return rc;
  }

  CheckerOptions options;
  options.max_strategies = config.max_strategies;
  options.jobs = config.jobs;
  Checker checker(space, model, options);

  const bool json_format = config.format == "json";
  nlohmann::json report;
  if (json_format) {
    report["schema_version"] = 1;
    report["model"] = config.model_path;
    report["configs"] = space.configs.size();
    report["transitions"] = space.edges.size();
    report["results"] = nlohmann::json::array();
  }

  for (std::size_t i = 0; i < formulas.size(); ++i) {
    Verdict verdict;
    try {
      verdict = checker.run(space.init, formulas[i]);
    } catch (const limit_error &e) {
      err << "error: " << e.what() << "\n";
      return exit_infra;
    }

    if (json_format) {
      nlohmann::json record;
      record["formula"] = formula_texts[i];
      record["verdict"] = verdict.value;
      if (verdict.witness) record["witness"] = witness_json(*verdict.witness);
      record["stats"] = {
          {"configs", verdict.stats.configs},
          {"strategies_examined", verdict.stats.strategies_examined},
          {"scc_runs", verdict.stats.scc_runs}};
      report["results"].push_back(record);
    } else {
      out << "[" << (i + 1) << "] " << formula_texts[i] << "\n";
      out << "    verdict: " << (verdict.value ? "true" : "false") << "\n";
      if (verdict.witness)
        out << "    witness: " << witness_text(*verdict.witness) << "\n";
      out << "    stats: configs=" << verdict.stats.configs
          << " strategies=" << verdict.stats.strategies_examined
          << " scc_runs=" << verdict.stats.scc_runs << "\n";
    }
  }

  if (json_format) out << report.dump(2) << "\n";
  return exit_ok;
}

} // namespace epc
