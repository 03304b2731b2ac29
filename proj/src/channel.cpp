#include "ntnsim/channel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ntnsim/error.hpp"

#ifndef NTNSIM_DATA_DIR
#define NTNSIM_DATA_DIR "data"
#endif

namespace ntnsim {

namespace {

std::vector<std::string> splitCsvLine(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream stream(line);
  while (std::getline(stream, field, ',')) {
    fields.push_back(field);
  }
  if (!line.empty() && line.back() == ',') {
    fields.emplace_back();
  }
  return fields;
}

double parseNumber(const std::string& text, const std::string& file, std::size_t lineNo) {
  const char* begin = text.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end == begin || *end != '\0' || !std::isfinite(value)) {
    throw ParseError(file + ":" + std::to_string(lineNo) + ": not a number: '" + text + "'");
  }
  return value;
}

// Loads a delimited table, checks the exact header, and hands rows to sink.
template <typename RowSink>
void forEachTableRow(const std::string& path, const std::string& expectedHeader,
                     RowSink&& sink) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open table file: " + path);
  }
  std::string line;
  std::size_t lineNo = 0;
  bool sawHeader = false;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    if (!sawHeader) {
      if (line != expectedHeader) {
        throw ValidationError(path + ": expected header '" + expectedHeader + "', got '" +
                              line + "'");
      }
      sawHeader = true;
      continue;
    }
    sink(splitCsvLine(line), lineNo);
  }
  if (!sawHeader) {
    throw ValidationError(path + ": empty table");
  }
}

int environmentIndex(Environment env) { return static_cast<int>(env); }

// Bucket degrees (10..90 in steps of 10) to array index, validating the grid.
int bucketIndexFromDegrees(double bucketDeg, const std::string& file, std::size_t lineNo) {
  const int rounded = static_cast<int>(bucketDeg);
  if (bucketDeg != rounded || rounded < 10 || rounded > 90 || rounded % 10 != 0) {
    throw ValidationError(file + ":" + std::to_string(lineNo) +
                          ": elevation bucket must be one of 10, 20, ..., 90");
  }
  return rounded / 10 - 1;
}

void requireColumns(const std::vector<std::string>& fields, std::size_t expected,
                    const std::string& file, std::size_t lineNo) {
  if (fields.size() != expected) {
    throw ParseError(file + ":" + std::to_string(lineNo) + ": expected " +
                     std::to_string(expected) + " columns, got " +
                     std::to_string(fields.size()));
  }
}

std::string resolvePath(const std::string& override_, const char* defaultName) {
  if (!override_.empty()) {
    return override_;
  }
  return LossTables::defaultDirectory() + "/" + defaultName;
}

}  // namespace

Environment environmentFromString(const std::string& name) {
  if (name == "dense_urban") return Environment::denseUrban;
  if (name == "urban") return Environment::urban;
  if (name == "suburban") return Environment::suburban;
  if (name == "rural") return Environment::rural;
  throw ValidationError("unknown environment: '" + name +
                        "' (expected dense_urban, urban, suburban, or rural)");
}

const char* environmentToString(Environment env) {
  switch (env) {
    case Environment::denseUrban: return "dense_urban";
    case Environment::urban: return "urban";
    case Environment::suburban: return "suburban";
    case Environment::rural: return "rural";
  }
  return "rural";
}

std::string LossTables::defaultDirectory() {
  if (const char* dir = std::getenv("NTNSIM_TABLE_DIR")) {
    return dir;
  }
  return NTNSIM_DATA_DIR;
}

int LossTables::elevationBucketDeg(double elevationDeg) {
  if (!(elevationDeg > 0.0 && elevationDeg <= 90.0)) {
    throw AngleRangeError("elevation must be in (0, 90] degrees");
  }
  // Round to the nearest multiple of 10 with ties up; low elevations
  // clamp into the 10-degree bucket.
  const int bucket = static_cast<int>(std::floor(elevationDeg / 10.0 + 0.5)) * 10;
  return std::clamp(bucket, 10, 90);
}

LossTables LossTables::load(const TablePaths& paths) {
  LossTables tables;

  const std::string zenithPath = resolvePath(paths.zenithAttenuation, "zenith_attenuation.csv");
  forEachTableRow(zenithPath, "frequency_ghz,zenith_db",
                  [&](const std::vector<std::string>& f, std::size_t lineNo) {
    requireColumns(f, 2, zenithPath, lineNo);
    const double freq = parseNumber(f[0], zenithPath, lineNo);
    const double value = parseNumber(f[1], zenithPath, lineNo);
    if (freq <= 0.0) {
      throw ValidationError(zenithPath + ":" + std::to_string(lineNo) +
                            ": frequency must be positive");
    }
    if (value <= 0.0) {
      throw ValidationError(zenithPath + ":" + std::to_string(lineNo) +
                            ": zenith attenuation must be positive (log interpolation)");
    }
    if (!tables.zenithFrequency_.empty() && freq <= tables.zenithFrequency_.back()) {
      throw ValidationError(zenithPath + ":" + std::to_string(lineNo) +
                            ": frequency grid must be strictly increasing");
    }
    tables.zenithFrequency_.push_back(freq);
    tables.zenithDb_.push_back(value);
  });
  if (tables.zenithFrequency_.size() < 2) {
    throw ValidationError(zenithPath + ": needs at least two grid points");
  }

  const std::string shadowPath = resolvePath(paths.shadowSigma, "shadow_sigma_ka.csv");
  forEachTableRow(shadowPath, "env,los,elev_bucket,sigma_db",
                  [&](const std::vector<std::string>& f, std::size_t lineNo) {
    requireColumns(f, 4, shadowPath, lineNo);
    const int env = environmentIndex(environmentFromString(f[0]));
    int los;
    if (f[1] == "los") {
      los = 1;
    } else if (f[1] == "nlos") {
      los = 0;
    } else {
      throw ValidationError(shadowPath + ":" + std::to_string(lineNo) +
                            ": visibility must be 'los' or 'nlos'");
    }
    const int bucket = bucketIndexFromDegrees(parseNumber(f[2], shadowPath, lineNo),
                                              shadowPath, lineNo);
    const double sigma = parseNumber(f[3], shadowPath, lineNo);
    if (sigma < 0.0) {
      throw ValidationError(shadowPath + ":" + std::to_string(lineNo) +
                            ": sigma must be nonnegative");
    }
    tables.shadowSigma_[env][los][bucket] = sigma;
  });

  const std::string clutterPath = resolvePath(paths.clutterLoss, "clutter_loss.csv");
  forEachTableRow(clutterPath, "env,elev_bucket,clutter_db",
                  [&](const std::vector<std::string>& f, std::size_t lineNo) {
    requireColumns(f, 3, clutterPath, lineNo);
    const int env = environmentIndex(environmentFromString(f[0]));
    const int bucket = bucketIndexFromDegrees(parseNumber(f[1], clutterPath, lineNo),
                                              clutterPath, lineNo);
    const double value = parseNumber(f[2], clutterPath, lineNo);
    if (value < 0.0) {
      throw ValidationError(clutterPath + ":" + std::to_string(lineNo) +
                            ": clutter loss must be nonnegative");
    }
    tables.clutter_[env][bucket] = value;
  });

  const std::string tropoPath =
      resolvePath(paths.troposphericScintillation, "tropo_scint.csv");
  forEachTableRow(tropoPath, "elev_bucket,scint_db",
                  [&](const std::vector<std::string>& f, std::size_t lineNo) {
    requireColumns(f, 2, tropoPath, lineNo);
    const int bucket = bucketIndexFromDegrees(parseNumber(f[0], tropoPath, lineNo),
                                              tropoPath, lineNo);
    const double value = parseNumber(f[1], tropoPath, lineNo);
    if (value < 0.0) {
      throw ValidationError(tropoPath + ":" + std::to_string(lineNo) +
                            ": scintillation depth must be nonnegative");
    }
    tables.tropoScint_[bucket] = value;
  });

  const std::string losPath = resolvePath(paths.losProbability, "los_probability.csv");
  forEachTableRow(losPath, "env,elev_bucket,p_los",
                  [&](const std::vector<std::string>& f, std::size_t lineNo) {
    requireColumns(f, 3, losPath, lineNo);
    const int env = environmentIndex(environmentFromString(f[0]));
    const int bucket = bucketIndexFromDegrees(parseNumber(f[1], losPath, lineNo),
                                              losPath, lineNo);
    const double p = parseNumber(f[2], losPath, lineNo);
    if (p < 0.0 || p > 1.0) {
      throw ValidationError(losPath + ":" + std::to_string(lineNo) +
                            ": probability must be in [0, 1]");
    }
    tables.losProb_[env][bucket] = p;
  });
  // Visibility cannot get worse as the satellite rises.
  for (int env = 0; env < kEnvironments; ++env) {
    double previous = -1.0;
    for (int b = 0; b < kBuckets; ++b) {
      if (!tables.losProb_[env][b]) {
        continue;
      }
      if (*tables.losProb_[env][b] < previous) {
        throw ValidationError(losPath + ": LOS probability must be nondecreasing in "
                              "elevation (environment " +
                              std::string(environmentToString(static_cast<Environment>(env))) +
                              ")");
      }
      previous = *tables.losProb_[env][b];
    }
  }

  return tables;
}

double LossTables::shadowSigmaDb(Environment env, bool los, double elevationDeg) const {
  const int bucket = elevationBucketDeg(elevationDeg) / 10 - 1;
  const auto& cell = shadowSigma_[environmentIndex(env)][los ? 1 : 0][bucket];
  if (!cell) {
    throw MissingTableEntryError(std::string("no shadow sigma for ") +
                                 environmentToString(env) + (los ? "/los" : "/nlos") +
                                 " at bucket " + std::to_string((bucket + 1) * 10));
  }
  return *cell;
}

double LossTables::clutterValueDb(Environment env, double elevationDeg) const {
  const int bucket = elevationBucketDeg(elevationDeg) / 10 - 1;
  const auto& cell = clutter_[environmentIndex(env)][bucket];
  if (!cell) {
    throw MissingTableEntryError(std::string("no clutter loss for ") +
                                 environmentToString(env) + " at bucket " +
                                 std::to_string((bucket + 1) * 10));
  }
  return *cell;
}

double LossTables::zenithAttenuationDb(double frequencyGhz) const {
  if (frequencyGhz <= 0.0) {
    throw NonPositiveInputError("frequency must be positive");
  }
  if (frequencyGhz < zenithFrequency_.front() || frequencyGhz > zenithFrequency_.back()) {
    throw FrequencyOutOfTableError(
        "frequency " + std::to_string(frequencyGhz) + " GHz outside zenith table [" +
        std::to_string(zenithFrequency_.front()) + ", " +
        std::to_string(zenithFrequency_.back()) + "]");
  }
  const auto it =
      std::lower_bound(zenithFrequency_.begin(), zenithFrequency_.end(), frequencyGhz);
  const std::size_t hi = static_cast<std::size_t>(it - zenithFrequency_.begin());
  if (zenithFrequency_[hi] == frequencyGhz) {
    return zenithDb_[hi];
  }
  const std::size_t lo = hi - 1;
  const double f = (frequencyGhz - zenithFrequency_[lo]) /
                   (zenithFrequency_[hi] - zenithFrequency_[lo]);
  // Linear in the log of the value: absorption spans orders of magnitude
  // around the oxygen line.
  return std::exp(std::log(zenithDb_[lo]) + f * (std::log(zenithDb_[hi]) - std::log(zenithDb_[lo])));
}

double LossTables::troposphericScintillationValueDb(double elevationDeg) const {
  const int bucket = elevationBucketDeg(elevationDeg) / 10 - 1;
  const auto& cell = tropoScint_[bucket];
  if (!cell) {
    throw MissingTableEntryError("no tropospheric scintillation value at bucket " +
                                 std::to_string((bucket + 1) * 10));
  }
  return *cell;
}

double LossTables::losProbability(Environment env, double elevationDeg) const {
  const int bucket = elevationBucketDeg(elevationDeg) / 10 - 1;
  const auto& cell = losProb_[environmentIndex(env)][bucket];
  if (!cell) {
    throw MissingTableEntryError(std::string("no LOS probability for ") +
                                 environmentToString(env) + " at bucket " +
                                 std::to_string((bucket + 1) * 10));
  }
  return *cell;
}

double freeSpacePathLossDb(double frequencyGhz, double distanceM) {
  if (frequencyGhz <= 0.0) {
    throw NonPositiveInputError("frequency must be positive");
  }
  if (distanceM <= 0.0) {
    throw NonPositiveInputError("distance must be positive");
  }
  return 32.45 + 20.0 * std::log10(frequencyGhz) + 20.0 * std::log10(distanceM);
}

double sampleShadowFadingDb(const LossTables& tables, Environment env, bool los,
                            double elevationDeg, Rng& rng) {
  const double sigma = tables.shadowSigmaDb(env, los, elevationDeg);
  return sigma == 0.0 ? 0.0 : sigma * rng.gaussian();
}

double clutterLossDb(const LossTables& tables, Environment env, bool los,
                     double elevationDeg) {
  if (los) {
    return 0.0;
  }
  return tables.clutterValueDb(env, elevationDeg);
}

double atmosphericAbsorptionDb(const LossTables& tables, double frequencyGhz,
                               double elevationDeg, double columnFraction) {
  if (!(elevationDeg > 0.0 && elevationDeg <= 90.0)) {
    throw AngleRangeError("elevation must be in (0, 90] degrees");
  }
  if (!(columnFraction > 0.0 && columnFraction <= 1.0)) {
    throw DomainError("atmospheric column fraction must be in (0, 1]");
  }
  const bool applies = frequencyGhz >= 10.0 || elevationDeg < 10.0;
  if (!applies) {
    return 0.0;
  }
  return tables.zenithAttenuationDb(frequencyGhz) * columnFraction /
         std::sin(elevationDeg * kRadPerDeg);
}

double ionosphericScintillationDb(double frequencyGhz, double latitudeDeg,
                                  double pFluc4GhzDb) {
  if (frequencyGhz <= 0.0) {
    throw NonPositiveInputError("frequency must be positive");
  }
  const bool applies = std::abs(latitudeDeg) < 20.0 || frequencyGhz < 6.0;
  if (!applies) {
    return 0.0;
  }
  return std::pow(frequencyGhz / 4.0, -1.5) * pFluc4GhzDb / std::sqrt(2.0);
}

double troposphericScintillationDb(const LossTables& tables, double /*frequencyGhz*/,
                                   double elevationDeg, bool enabled) {
  if (!enabled) {
    return 0.0;
  }
  return tables.troposphericScintillationValueDb(elevationDeg);
}

bool losProbabilityDraw(const LossTables& tables, Environment env, double elevationDeg,
                        Rng& rng, std::optional<bool> forced) {
  if (forced.has_value()) {
    return *forced;
  }
  return rng.bernoulli(tables.losProbability(env, elevationDeg));
}

ChannelState evaluateChannel(const LossTables& tables, Environment env,
                             double frequencyGhz, const GeographicCoord& txPos,
                             const GeographicCoord& rxPos, const ChannelOptions& options,
                             Rng& rng, const Ellipsoid& e) {
  ChannelState state;
  state.slantDistanceM = slantDistance(txPos, rxPos, e);
  state.elevationDeg = elevationAngleDeg(rxPos, txPos, e);
  state.losFlag = losProbabilityDraw(tables, env, state.elevationDeg, rng, options.forceLos);
  state.fsplDb = freeSpacePathLossDb(frequencyGhz, state.slantDistanceM);
  state.shadowFadingDb =
      options.shadowingEnabled
          ? sampleShadowFadingDb(tables, env, state.losFlag, state.elevationDeg, rng)
          : 0.0;
  state.clutterLossDb = clutterLossDb(tables, env, state.losFlag, state.elevationDeg);
  state.atmosphericLossDb = atmosphericAbsorptionDb(tables, frequencyGhz, state.elevationDeg,
                                                    options.atmosphericColumnFraction);
  state.troposphericScintDb = troposphericScintillationDb(
      tables, frequencyGhz, state.elevationDeg, options.troposphericScintEnabled);
  state.ionosphericScintDb =
      options.ionosphericScintEnabled
          ? ionosphericScintillationDb(frequencyGhz, rxPos.latitude * kDegPerRad,
                                       options.pFluc4GhzDb)
          : 0.0;
  state.totalLossDb = state.fsplDb + state.shadowFadingDb + state.clutterLossDb +
                      state.atmosphericLossDb + state.troposphericScintDb +
                      state.ionosphericScintDb;
  return state;
}

}  // namespace ntnsim
