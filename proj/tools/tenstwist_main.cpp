#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "tenstwist/report.hpp"

namespace {

struct Cli {
  std::string scenario_path;
  std::string format = "text";
  tenstwist::RunOptions options;
};

int run_command(tenstwist::Command cmd, const Cli& cli) {
  using namespace tenstwist;
  RunOptions opt = cli.options;
  if (cli.format == "machine")
    opt.format = RunOptions::Format::Machine;
  else if (cli.format == "text")
    opt.format = RunOptions::Format::Text;
  else {
    std::cerr << "error: --format must be 'text' or 'machine'\n";
    return 2;
  }

  try {
    if (cmd == Command::KeyLemma) {
      RunResult r = run(cmd, nullptr, opt);
      std::cout << r.output;
      return r.exit_code;
    }
    if (cli.scenario_path.empty()) {
      std::cerr << "error: " << command_name(cmd) << " requires --scenario\n";
      return 2;
    }
    Scenario s = load_scenario_file(cli.scenario_path);
    RunResult r = run(cmd, &s, opt);
    std::cout << r.output;
    return r.exit_code;
  } catch (const ScenarioError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"decision procedures for polymers on classical Dynkin diagrams"};
  app.require_subcommand(1);
  app.fallthrough();

  Cli cli;
  app.add_option("--scenario", cli.scenario_path, "scenario file (.scn)");
  app.add_option("--format", cli.format, "output format: text or machine")
      ->check(CLI::IsMember({"text", "machine"}));
  app.add_option("--trials", cli.options.trials,
                 "random trials for the key lemma check")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cli.options.seed, "random seed");
  app.add_option("--max-orbits", cli.options.max_orbits,
                 "enumeration limit on part orbits");
  app.add_option("--max-output", cli.options.max_output,
                 "enumeration limit on emitted polymers");

  app.add_subcommand("validate", "check the scenario polymer");
  app.add_subcommand("twist", "run the decision procedure");
  app.add_subcommand("enumerate", "list the polymers over the scenario diagram");
  app.add_subcommand("dims", "total the polymer representation dimensions");
  app.add_subcommand("keylemma", "verify the tensor-index rule on sampled matrices");
  app.add_subcommand("report", "full report: validation, criteria, dimensions");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    // CLI11 exits 0 for --help; anything else is an input error.
    return code == 0 ? 0 : 2;
  }

  for (auto* sub : app.get_subcommands()) {
    auto cmd = tenstwist::command_from_name(sub->get_name());
    if (!cmd) {
      std::cerr << "error: unknown command\n";
      return 2;
    }
    return run_command(*cmd, cli);
  }
  std::cerr << "error: a command is required\n";
  return 2;
}
