#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ntnsim/channel.hpp"
#include "ntnsim/linkbudget.hpp"
#include "ntnsim/trajectory.hpp"

namespace ntnsim {

/// A full simulation setup: GEO satellite, HAP trajectory, link parameters,
/// channel options, and output cadence. Produced by loadScenario; the
/// packaged scenarios/table1.json holds the baseline GEO-to-HAP mission.
struct Scenario {
  int schemaVersion = 1;
  std::string name;

  GeographicCoord satellitePosition;
  AntennaConfig satelliteAntenna{58.5, 5.0, 180.0, 20.0, 60.0};
  /// hapPlan.sampleCount == 0 means "derive from arc length"; see
  /// resolvedPlan.
  TrajectoryPlan hapPlan;
  AntennaConfig hapAntenna{39.7, 0.6, 0.0, 20.0, 60.0};

  double txPowerDbm = 37.5;
  double bandwidthHz = 4e8;
  double noiseFigureDb = 1.2;
  double carrierFrequencyGhz = 20.0;
  std::optional<double> eirpDensityDbwPerMhz;

  Environment environment = Environment::rural;
  ChannelOptions channelOptions;
  double updatePeriodS = 1.0;
  std::uint64_t seed = 0;
  TablePaths tablePaths;

  /// Downlink view: satellite transmits, HAP receives.
  LinkConfig linkConfig() const;
};

/// Parse and validate a scenario document. Unknown keys are rejected with
/// their path; omitted optional fields take the baseline defaults. Throws
/// ParseError (malformed JSON, with line/column), ValidationError, or
/// MissingFieldError.
Scenario loadScenario(const std::string& jsonText);
Scenario loadScenarioFile(const std::string& path);

/// The trajectory plan with sampleCount resolved: when the scenario leaves
/// it defaulted, K = ceil(arcLength / (speed * updatePeriod)) so uniform-
/// parameter slots align with the update cadence.
TrajectoryPlan resolvedPlan(const Scenario& s);

/// One output record. For mission output the first field is time in
/// seconds; frequency sweeps reuse it for the carrier in GHz (the CSV
/// header says which).
struct ResultRow {
  double timeS = 0.0;
  double latDeg = 0.0;
  double lonDeg = 0.0;
  double altM = 0.0;
  double slantM = 0.0;
  double groundM = 0.0;
  double elevDeg = 0.0;
  double fsplDb = 0.0;
  double sfDb = 0.0;
  double clDb = 0.0;
  double atmDb = 0.0;
  double tscintDb = 0.0;
  double iscintDb = 0.0;
  double totalLossDb = 0.0;
  double snrDb = 0.0;
  double capacityBps = 0.0;
};

/// Fly the mission and evaluate the link at every update period. Rows are
/// ordered by time; results are fully determined by the scenario and seed.
/// Ground distance is measured to the sub-satellite point.
std::vector<ResultRow> runMission(const Scenario& s);
std::vector<ResultRow> runMission(const Scenario& s, const LossTables& tables);

/// Hold the HAP at the point of interest with the best SNR at the scenario
/// carrier and sweep the carrier frequency; one row per step.
std::vector<ResultRow> sweepFrequency(const Scenario& s, double fStartGhz,
                                      double fStopGhz, double fStepGhz);
std::vector<ResultRow> sweepFrequency(const Scenario& s, const LossTables& tables,
                                      double fStartGhz, double fStopGhz, double fStepGhz);

/// Collapse mission rows to (ground distance, SNR) pairs sorted by
/// distance, averaging duplicate distances. Throws EmptyInputError.
std::vector<std::pair<double, double>> snrVsGroundDistance(
    const std::vector<ResultRow>& rows);

/// CSV emission and parsing. Values use %.17g so parsing a written file
/// reproduces the rows bit for bit.
void writeResultCsv(const std::vector<ResultRow>& rows, std::ostream& out,
                    bool frequencyColumn = false);
std::vector<ResultRow> parseResultCsv(std::istream& in);
void writeDistanceCsv(const std::vector<std::pair<double, double>>& pairs,
                      std::ostream& out);

}  // namespace ntnsim
