#include "ntnsim/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "ntnsim/error.hpp"
#include "ntnsim/scenario.hpp"

namespace ntnsim {

namespace {

struct CommonArgs {
  std::string scenarioPath;
  std::string outputPath;
  std::uint64_t seed = 0;
  CLI::Option* seedOption = nullptr;
};

void addCommonOptions(CLI::App* cmd, CommonArgs& args, bool withOutput) {
  cmd->add_option("--scenario", args.scenarioPath, "Scenario JSON file")->required();
  if (withOutput) {
    cmd->add_option("--output", args.outputPath,
                    "Write CSV here instead of standard output");
  }
  args.seedOption =
      cmd->add_option("--seed", args.seed, "Override the seed from the scenario file");
}

Scenario loadWithOverrides(const CommonArgs& args) {
  Scenario scenario = loadScenarioFile(args.scenarioPath);
  if (args.seedOption != nullptr && args.seedOption->count() > 0) {
    scenario.seed = args.seed;
  }
  return scenario;
}

void writeTo(const std::string& path, const std::function<void(std::ostream&)>& writer) {
  if (path.empty()) {
    writer(std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw FileError("cannot open output file: " + path);
  }
  writer(out);
  out.flush();
  if (!out) {
    throw FileError("write failed: " + path);
  }
}

}  // namespace

int runCli(int argc, const char* const* argv) {
  CLI::App app{"GEO satellite to high-altitude-platform link simulator"};
  app.require_subcommand(1);

  CommonArgs runArgs;
  CommonArgs sweepArgs;
  CommonArgs distanceArgs;
  CommonArgs validateArgs;
  double fStartGhz = 20.0;
  double fStopGhz = 100.0;
  double fStepGhz = 1.0;

  CLI::App* cmdRun = app.add_subcommand(
      "run", "Fly the mission and emit one CSV row per update period");
  addCommonOptions(cmdRun, runArgs, true);

  CLI::App* cmdSweep = app.add_subcommand(
      "sweep-freq", "Hover at the best point of interest and sweep the carrier");
  addCommonOptions(cmdSweep, sweepArgs, true);
  cmdSweep->add_option("--fstart", fStartGhz, "Sweep start, GHz")->capture_default_str();
  cmdSweep->add_option("--fstop", fStopGhz, "Sweep stop, GHz")->capture_default_str();
  cmdSweep->add_option("--fstep", fStepGhz, "Sweep step, GHz")->capture_default_str();

  CLI::App* cmdDistance = app.add_subcommand(
      "snr-distance", "Mission SNR keyed by ground distance to the sub-satellite point");
  addCommonOptions(cmdDistance, distanceArgs, true);

  CLI::App* cmdValidate = app.add_subcommand(
      "validate", "Check a scenario file against the schema without simulating");
  addCommonOptions(cmdValidate, validateArgs, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);  // help to stdout, errors to stderr
    return code == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(cmdValidate)) {
      loadWithOverrides(validateArgs);
      std::fprintf(stderr, "%s: valid\n", validateArgs.scenarioPath.c_str());
      return 0;
    }
    if (app.got_subcommand(cmdRun)) {
      const Scenario scenario = loadWithOverrides(runArgs);
      const std::vector<ResultRow> rows = runMission(scenario);
      writeTo(runArgs.outputPath,
              [&](std::ostream& out) { writeResultCsv(rows, out, false); });
      return 0;
    }
    if (app.got_subcommand(cmdSweep)) {
      const Scenario scenario = loadWithOverrides(sweepArgs);
      const std::vector<ResultRow> rows =
          sweepFrequency(scenario, fStartGhz, fStopGhz, fStepGhz);
      writeTo(sweepArgs.outputPath,
              [&](std::ostream& out) { writeResultCsv(rows, out, true); });
      return 0;
    }
    const Scenario scenario = loadWithOverrides(distanceArgs);
    const std::vector<ResultRow> rows = runMission(scenario);
    const auto pairs = snrVsGroundDistance(rows);
    writeTo(distanceArgs.outputPath,
            [&](std::ostream& out) { writeDistanceCsv(pairs, out); });
    return 0;
  } catch (const ValidationError& e) {
    std::fprintf(stderr, "ntnsim: %s\n", e.what());
    return 1;
  } catch (const ParseError& e) {
    std::fprintf(stderr, "ntnsim: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "ntnsim: %s\n", e.what());
    return 2;
  }
}

}  // namespace ntnsim
