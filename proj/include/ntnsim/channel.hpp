#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "ntnsim/geodesy.hpp"
#include "ntnsim/rng.hpp"

namespace ntnsim {

enum class Environment { denseUrban, urban, suburban, rural };

/// Parse the snake_case names used in scenario/table files
/// (dense_urban, urban, suburban, rural). Throws ValidationError.
Environment environmentFromString(const std::string& name);
const char* environmentToString(Environment env);

/// Overrides for the packaged table files; empty strings select the
/// packaged defaults (directory from NTNSIM_TABLE_DIR or the build tree).
struct TablePaths {
  std::string zenithAttenuation;
  std::string shadowSigma;
  std::string clutterLoss;
  std::string troposphericScintillation;
  std::string losProbability;
};

/// Environment-indexed large-scale loss tables. Immutable after load and
/// safe to share across threads.
///
/// The elevation axis is bucketed in 10-degree steps from 10 to 90;
/// lookups round to the nearest bucket with ties going up, and elevations
/// below 5 degrees clamp into the lowest bucket.
class LossTables {
 public:
  static LossTables load(const TablePaths& paths = {});
  static std::string defaultDirectory();
  static int elevationBucketDeg(double elevationDeg);

  double shadowSigmaDb(Environment env, bool los, double elevationDeg) const;
  double clutterValueDb(Environment env, double elevationDeg) const;
  /// Zenith gas attenuation at a frequency, interpolated log-linearly
  /// (linear in log of the dB value) between grid points. Throws
  /// FrequencyOutOfTableError outside the grid.
  double zenithAttenuationDb(double frequencyGhz) const;
  double troposphericScintillationValueDb(double elevationDeg) const;
  double losProbability(Environment env, double elevationDeg) const;

 private:
  LossTables() = default;

  static constexpr int kBuckets = 9;
  static constexpr int kEnvironments = 4;
  template <typename T>
  using PerBucket = std::array<T, kBuckets>;

  std::array<std::array<PerBucket<std::optional<double>>, 2>, kEnvironments> shadowSigma_;
  std::array<PerBucket<std::optional<double>>, kEnvironments> clutter_;
  std::array<PerBucket<std::optional<double>>, kEnvironments> losProb_;
  PerBucket<std::optional<double>> tropoScint_;
  std::vector<double> zenithFrequency_;
  std::vector<double> zenithDb_;
};

/// Stochastic toggles and model options for one channel evaluation.
struct ChannelOptions {
  bool shadowingEnabled = false;
  bool troposphericScintEnabled = false;
  bool ionosphericScintEnabled = false;
  std::optional<bool> forceLos;          // empty = probabilistic draw
  double atmosphericColumnFraction = 1.0;  // in (0, 1]
  double pFluc4GhzDb = 1.1;
};

/// Loss breakdown for one link geometry. All components are in dB;
/// shadowFading may be negative, everything else is nonnegative, and
/// totalLoss is exactly their sum.
struct ChannelState {
  double slantDistanceM = 0.0;
  double elevationDeg = 0.0;
  bool losFlag = true;
  double fsplDb = 0.0;
  double shadowFadingDb = 0.0;
  double clutterLossDb = 0.0;
  double atmosphericLossDb = 0.0;
  double troposphericScintDb = 0.0;
  double ionosphericScintDb = 0.0;
  double totalLossDb = 0.0;
};

/// Free-space path loss: 32.45 + 20 log10(fc GHz) + 20 log10(d m).
double freeSpacePathLossDb(double frequencyGhz, double distanceM);

/// Zero-mean Gaussian draw with the tabulated sigma for the environment,
/// visibility, and elevation bucket.
double sampleShadowFadingDb(const LossTables& tables, Environment env, bool los,
                            double elevationDeg, Rng& rng);

/// Clutter loss: 0 under line of sight, table value otherwise.
double clutterLossDb(const LossTables& tables, Environment env, bool los,
                     double elevationDeg);

/// Gas absorption: zenith value scaled by the column fraction and divided
/// by sin(elevation). Applies for fc >= 10 GHz, and at any frequency when
/// the elevation is below 10 degrees; 0 outside applicability.
double atmosphericAbsorptionDb(const LossTables& tables, double frequencyGhz,
                               double elevationDeg, double columnFraction = 1.0);

/// Ionospheric scintillation: (fc/4)^(-1.5) * pFluc4GhzDb / sqrt(2), applied
/// for |latitude| < 20 degrees or fc < 6 GHz; 0 otherwise.
double ionosphericScintillationDb(double frequencyGhz, double latitudeDeg,
                                  double pFluc4GhzDb);

/// Tropospheric scintillation from the tabulated 99th-percentile fade
/// depths (a 20 GHz reference measurement applied across frequencies,
/// hence the unused frequency argument); 0 when disabled.
double troposphericScintillationDb(const LossTables& tables, double frequencyGhz,
                                   double elevationDeg, bool enabled);

/// Line-of-sight decision: the forced value when provided, otherwise a
/// Bernoulli draw with the tabulated probability.
bool losProbabilityDraw(const LossTables& tables, Environment env, double elevationDeg,
                        Rng& rng, std::optional<bool> forced);

/// Full loss evaluation for a tx -> rx geometry. The elevation is measured
/// at the receiver (the lower, atmosphere-bound terminal) toward the
/// transmitter and must be positive; the receiver latitude selects
/// ionospheric applicability. Draw order per evaluation: visibility first,
/// then shadow fading.
ChannelState evaluateChannel(const LossTables& tables, Environment env,
                             double frequencyGhz, const GeographicCoord& txPos,
                             const GeographicCoord& rxPos, const ChannelOptions& options,
                             Rng& rng, const Ellipsoid& e = wgs84());

}  // namespace ntnsim
