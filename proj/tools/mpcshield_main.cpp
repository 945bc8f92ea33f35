#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mpcshield/errors.hpp"
#include "mpcshield/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Secret-share error detection and correction simulator"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string trace_path;
  std::optional<std::uint64_t> seed_override;

  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("--scenario", scenario_path, "Scenario file (key=value lines)")
      ->required();
  run->add_option("--trace", trace_path, "Write the message transcript here");
  run->add_option("--seed", seed_override, "Override the scenario seed");

  CLI11_PARSE(app, argc, argv);

  std::ifstream in(scenario_path);
  if (!in) {
    std::cerr << "error: cannot open scenario file '" << scenario_path << "'\n";
    return 1;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();

  try {
    mpcshield::Scenario scenario = mpcshield::parse_scenario(buffer.str());
    if (seed_override) scenario.seed = *seed_override;

    const mpcshield::RunResult result = mpcshield::run_scenario(scenario);
    std::cout << result.report;

    if (!trace_path.empty()) {
      std::ofstream trace(trace_path);
      if (!trace) {
        std::cerr << "error: cannot open trace file '" << trace_path << "'\n";
        return 1;
      }
      trace << result.transcript;
    }
    return result.exit_code;
  } catch (const mpcshield::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
