#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "epc/cli.hpp"

int main(int argc, char **argv) {
  CLI::App app{"Explicit-state checker for agent-labeled process models"};

  epc::RunConfig config;
  std::string init;

  app.add_option("model", config.model_path, "model file (.epc)")
      ->required()
      ->type_name("FILE");
  app.add_option("-f,--formulas", config.formulas,
                 "formula string, or a file with one formula per line; "
                 "repeatable")
      ->type_name("TEXT|FILE");
  app.add_option("--init", init,
                 "start configuration: STATE or STATE/TERM (explicit mode)")
      ->type_name("STATE[/TERM]");
  app.add_option("--max-configs", config.max_configs,
                 "abort exploration beyond this many configurations");
  app.add_option("--max-strategies", config.max_strategies,
                 "abort a coalition check beyond this many strategies "
                 "(0 = unbounded)");
  app.add_option("--format", config.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--dump-graph", config.dump_graph,
               "print the explored configuration graph (N/E lines)");
  app.add_option("--dump-epistemic", config.dump_epistemic,
                 "print per-agent classes (H lines) and the group reach "
                 "partition (C lines) for these comma-separated agents")
      ->type_name("AGENTS");
  app.add_option("--jobs", config.jobs,
                 "worker threads for strategy evaluation")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return e.get_name() == "CallForHelp" ? epc::exit_ok : epc::exit_input;
  }

  if (!init.empty()) {
    auto slash = init.find('/');
    if (slash == std::string::npos) {
      config.init_state = init;
    } else {
      config.init_state = init.substr(0, slash);
      config.init_term = init.substr(slash + 1);
    }
  }

  return epc::run_query(config, std::cout, std::cerr);
}
