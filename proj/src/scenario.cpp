#include "ntnsim/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "ntnsim/error.hpp"
#include "ntnsim/kernels/kernels.hpp"

namespace ntnsim {

namespace {

using nlohmann::json;

std::string joinPath(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

void requireObject(const json& v, const std::string& path) {
  if (!v.is_object()) {
    throw ValidationError(path + " must be an object");
  }
}

void checkKeys(const json& obj, const std::string& path,
               std::initializer_list<const char*> allowed) {
  for (const auto& item : obj.items()) {
    const bool known = std::any_of(allowed.begin(), allowed.end(),
                                   [&](const char* k) { return item.key() == k; });
    if (!known) {
      throw ValidationError("unknown key: " + joinPath(path, item.key()));
    }
  }
}

const json& requireField(const json& obj, const char* key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    throw MissingFieldError("missing required field: " + joinPath(path, key));
  }
  return *it;
}

const json* optionalField(const json& obj, const char* key) {
  const auto it = obj.find(key);
  if (it == obj.end() || it->is_null()) {
    return nullptr;
  }
  return &*it;
}

double asNumber(const json& v, const std::string& path) {
  if (!v.is_number()) {
    throw ValidationError(path + " must be a number");
  }
  return v.get<double>();
}

long long asInteger(const json& v, const std::string& path) {
  if (!v.is_number_integer()) {
    throw ValidationError(path + " must be an integer");
  }
  return v.get<long long>();
}

bool asBool(const json& v, const std::string& path) {
  if (!v.is_boolean()) {
    throw ValidationError(path + " must be a boolean");
  }
  return v.get<bool>();
}

std::string asString(const json& v, const std::string& path) {
  if (!v.is_string()) {
    throw ValidationError(path + " must be a string");
  }
  return v.get<std::string>();
}

double requireNumber(const json& obj, const char* key, const std::string& path) {
  return asNumber(requireField(obj, key, path), joinPath(path, key));
}

double optionalNumber(const json& obj, const char* key, const std::string& path,
                      double fallback) {
  const json* v = optionalField(obj, key);
  return v == nullptr ? fallback : asNumber(*v, joinPath(path, key));
}

bool optionalBool(const json& obj, const char* key, const std::string& path,
                  bool fallback) {
  const json* v = optionalField(obj, key);
  return v == nullptr ? fallback : asBool(*v, joinPath(path, key));
}

GeographicCoord parsePosition(const json& v, const std::string& path,
                              bool allowInterestLevel = false) {
  requireObject(v, path);
  if (allowInterestLevel) {
    checkKeys(v, path, {"latitude_deg", "longitude_deg", "altitude_m", "interest_level"});
  } else {
    checkKeys(v, path, {"latitude_deg", "longitude_deg", "altitude_m"});
  }
  const double lat = requireNumber(v, "latitude_deg", path);
  const double lon = requireNumber(v, "longitude_deg", path);
  const double alt = requireNumber(v, "altitude_m", path);
  if (!(lat >= -90.0 && lat <= 90.0)) {
    throw ValidationError(joinPath(path, "latitude_deg") + " outside [-90, 90]");
  }
  if (!std::isfinite(lon) || !std::isfinite(alt)) {
    throw ValidationError(path + " has a non-finite component");
  }
  return geographicFromDegrees(lat, lon, alt);
}

AntennaConfig parseAntenna(const json& v, const std::string& path,
                           const AntennaConfig& defaults) {
  requireObject(v, path);
  checkKeys(v, path,
            {"max_gain_dbi", "aperture_diameter_m", "boresight_inclination_deg",
             "pattern_floor_db"});
  AntennaConfig cfg = defaults;
  cfg.maxGainDbi = optionalNumber(v, "max_gain_dbi", path, defaults.maxGainDbi);
  cfg.apertureDiameterM =
      optionalNumber(v, "aperture_diameter_m", path, defaults.apertureDiameterM);
  cfg.boresightInclinationDeg = optionalNumber(v, "boresight_inclination_deg", path,
                                               defaults.boresightInclinationDeg);
  cfg.patternFloorDb = optionalNumber(v, "pattern_floor_db", path, defaults.patternFloorDb);
  if (cfg.apertureDiameterM <= 0.0) {
    throw ValidationError(joinPath(path, "aperture_diameter_m") + " must be positive");
  }
  if (!(cfg.boresightInclinationDeg >= 0.0 && cfg.boresightInclinationDeg <= 180.0)) {
    throw ValidationError(joinPath(path, "boresight_inclination_deg") +
                          " outside [0, 180]");
  }
  if (cfg.patternFloorDb <= 0.0) {
    throw ValidationError(joinPath(path, "pattern_floor_db") + " must be positive");
  }
  return cfg;
}

}  // namespace

LinkConfig Scenario::linkConfig() const {
  LinkConfig cfg;
  cfg.txPowerDbm = txPowerDbm;
  cfg.txAntenna = satelliteAntenna;
  cfg.rxAntenna = hapAntenna;
  cfg.bandwidthHz = bandwidthHz;
  cfg.noiseFigureDb = noiseFigureDb;
  cfg.carrierFrequencyGhz = carrierFrequencyGhz;
  return cfg;
}

Scenario loadScenario(const std::string& jsonText) {
  json root;
  try {
    root = json::parse(jsonText);
  } catch (const json::parse_error& ex) {
    throw ParseError(ex.what());  // message carries line and column
  }
  if (!root.is_object()) {
    throw ValidationError("scenario document must be a JSON object");
  }
  checkKeys(root, "",
            {"schema_version", "name", "environment", "update_period_s", "seed",
             "satellite", "hap", "link", "channel", "table_paths"});

  Scenario s;
  if (const json* v = optionalField(root, "schema_version")) {
    const long long version = asInteger(*v, "schema_version");
    if (version != 1) {
      throw ValidationError("unsupported schema_version: " + std::to_string(version));
    }
    s.schemaVersion = static_cast<int>(version);
  }
  if (const json* v = optionalField(root, "name")) {
    s.name = asString(*v, "name");
  }

  const json* satellite = optionalField(root, "satellite");
  if (satellite == nullptr) {
    throw MissingFieldError("missing required field: satellite.position");
  }
  requireObject(*satellite, "satellite");
  checkKeys(*satellite, "satellite", {"position", "antenna"});
  s.satellitePosition = parsePosition(requireField(*satellite, "position", "satellite"),
                                      "satellite.position");
  if (const json* v = optionalField(*satellite, "antenna")) {
    s.satelliteAntenna = parseAntenna(*v, "satellite.antenna", s.satelliteAntenna);
  }

  const json* hapBlock = optionalField(root, "hap");
  if (hapBlock == nullptr) {
    throw MissingFieldError("missing required field: hap.points_of_interest");
  }
  const json& hap = *hapBlock;
  requireObject(hap, "hap");
  checkKeys(hap, "hap", {"points_of_interest", "speed_mps", "antenna", "sample_count"});
  const json& pois = requireField(hap, "points_of_interest", "hap");
  if (!pois.is_array() || pois.empty()) {
    throw ValidationError("hap.points_of_interest must be a non-empty array");
  }
  for (std::size_t i = 0; i < pois.size(); ++i) {
    const std::string path = "hap.points_of_interest[" + std::to_string(i) + "]";
    const json& entry = pois[i];
    PointOfInterest poi;
    poi.position = parsePosition(entry, path, /*allowInterestLevel=*/true);
    if (const json* v = optionalField(entry, "interest_level")) {
      const long long level = asInteger(*v, joinPath(path, "interest_level"));
      if (level < 1) {
        throw ValidationError(joinPath(path, "interest_level") + " must be at least 1");
      }
      poi.interestLevel = static_cast<int>(level);
    }
    s.hapPlan.pois.push_back(poi);
  }
  s.hapPlan.speedMps = optionalNumber(hap, "speed_mps", "hap", 24.0);
  if (s.hapPlan.speedMps <= 0.0) {
    throw ValidationError("hap.speed_mps must be positive");
  }
  s.hapPlan.sampleCount = 0;  // derive from arc length unless given
  if (const json* v = optionalField(hap, "sample_count")) {
    const long long count = asInteger(*v, "hap.sample_count");
    if (count < 2) {
      throw ValidationError("hap.sample_count must be at least 2");
    }
    s.hapPlan.sampleCount = static_cast<int>(count);
  }
  if (const json* v = optionalField(hap, "antenna")) {
    s.hapAntenna = parseAntenna(*v, "hap.antenna", s.hapAntenna);
  }

  if (const json* link = optionalField(root, "link")) {
    requireObject(*link, "link");
    checkKeys(*link, "link",
              {"carrier_frequency_ghz", "bandwidth_hz", "tx_power_dbm", "noise_figure_db",
               "eirp_density_dbw_per_mhz"});
    s.carrierFrequencyGhz =
        optionalNumber(*link, "carrier_frequency_ghz", "link", s.carrierFrequencyGhz);
    s.bandwidthHz = optionalNumber(*link, "bandwidth_hz", "link", s.bandwidthHz);
    s.txPowerDbm = optionalNumber(*link, "tx_power_dbm", "link", s.txPowerDbm);
    s.noiseFigureDb = optionalNumber(*link, "noise_figure_db", "link", s.noiseFigureDb);
    if (const json* v = optionalField(*link, "eirp_density_dbw_per_mhz")) {
      s.eirpDensityDbwPerMhz = asNumber(*v, "link.eirp_density_dbw_per_mhz");
    }
    if (s.carrierFrequencyGhz <= 0.0) {
      throw ValidationError("link.carrier_frequency_ghz must be positive");
    }
    if (s.bandwidthHz <= 0.0) {
      throw ValidationError("link.bandwidth_hz must be positive");
    }
  }

  if (const json* v = optionalField(root, "environment")) {
    s.environment = environmentFromString(asString(*v, "environment"));
  }

  if (const json* channel = optionalField(root, "channel")) {
    requireObject(*channel, "channel");
    checkKeys(*channel, "channel",
              {"shadowing", "tropospheric_scintillation", "ionospheric_scintillation",
               "force_los", "atmospheric_column_fraction", "p_fluc_4ghz_db"});
    s.channelOptions.shadowingEnabled = optionalBool(*channel, "shadowing", "channel", false);
    s.channelOptions.troposphericScintEnabled =
        optionalBool(*channel, "tropospheric_scintillation", "channel", false);
    s.channelOptions.ionosphericScintEnabled =
        optionalBool(*channel, "ionospheric_scintillation", "channel", false);
    if (const json* v = optionalField(*channel, "force_los")) {
      s.channelOptions.forceLos = asBool(*v, "channel.force_los");
    }
    s.channelOptions.atmosphericColumnFraction =
        optionalNumber(*channel, "atmospheric_column_fraction", "channel", 1.0);
    if (!(s.channelOptions.atmosphericColumnFraction > 0.0 &&
          s.channelOptions.atmosphericColumnFraction <= 1.0)) {
      throw ValidationError("channel.atmospheric_column_fraction must be in (0, 1]");
    }
    s.channelOptions.pFluc4GhzDb = optionalNumber(*channel, "p_fluc_4ghz_db", "channel", 1.1);
    if (s.channelOptions.pFluc4GhzDb < 0.0) {
      throw ValidationError("channel.p_fluc_4ghz_db must be nonnegative");
    }
  }

  s.updatePeriodS = optionalNumber(root, "update_period_s", "", 1.0);
  if (!(s.updatePeriodS > 0.0)) {
    throw ValidationError("update_period_s must be positive");
  }

  const bool needsSeed =
      s.channelOptions.shadowingEnabled || !s.channelOptions.forceLos.has_value();
  if (const json* v = optionalField(root, "seed")) {
    const long long seed = asInteger(*v, "seed");
    if (seed < 0) {
      throw ValidationError("seed must be nonnegative");
    }
    s.seed = static_cast<std::uint64_t>(seed);
  } else if (needsSeed) {
    throw MissingFieldError(
        "missing required field: seed (required when channel draws are stochastic)");
  }

  if (const json* paths = optionalField(root, "table_paths")) {
    requireObject(*paths, "table_paths");
    checkKeys(*paths, "table_paths",
              {"zenith_attenuation", "shadow_sigma", "clutter_loss", "tropo_scint",
               "los_probability"});
    if (const json* v = optionalField(*paths, "zenith_attenuation")) {
      s.tablePaths.zenithAttenuation = asString(*v, "table_paths.zenith_attenuation");
    }
    if (const json* v = optionalField(*paths, "shadow_sigma")) {
      s.tablePaths.shadowSigma = asString(*v, "table_paths.shadow_sigma");
    }
    if (const json* v = optionalField(*paths, "clutter_loss")) {
      s.tablePaths.clutterLoss = asString(*v, "table_paths.clutter_loss");
    }
    if (const json* v = optionalField(*paths, "tropo_scint")) {
      s.tablePaths.troposphericScintillation = asString(*v, "table_paths.tropo_scint");
    }
    if (const json* v = optionalField(*paths, "los_probability")) {
      s.tablePaths.losProbability = asString(*v, "table_paths.los_probability");
    }
  }

  // Pattern frequency follows the link carrier.
  s.satelliteAntenna.carrierFrequencyGhz = s.carrierFrequencyGhz;
  s.hapAntenna.carrierFrequencyGhz = s.carrierFrequencyGhz;

  if (s.eirpDensityDbwPerMhz.has_value()) {
    const double gap = eirpDensityGapDb(s.linkConfig(), *s.eirpDensityDbwPerMhz);
    if (gap > 0.1) {
      std::fprintf(stderr,
                   "ntnsim: warning: transmit power + antenna gain differ from the "
                   "declared EIRP density by %.3f dB\n",
                   gap);
    }
  }
  return s;
}

Scenario loadScenarioFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw FileError("cannot open scenario file: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return loadScenario(buffer.str());
}

TrajectoryPlan resolvedPlan(const Scenario& s) {
  TrajectoryPlan plan = s.hapPlan;
  if (plan.sampleCount == 0) {
    const ArcLengthTable table(plan);
    const double slots = table.totalLength() / (plan.speedMps * s.updatePeriodS);
    plan.sampleCount = std::max(2, static_cast<int>(std::ceil(slots)));
  }
  return plan;
}

std::vector<ResultRow> runMission(const Scenario& s) {
  return runMission(s, LossTables::load(s.tablePaths));
}

std::vector<ResultRow> runMission(const Scenario& s, const LossTables& tables) {
  TimedTrajectory timeline;
  try {
    timeline = constantSpeedTimeline(s.hapPlan, s.updatePeriodS);
  } catch (const DegenerateCurveError&) {
    // Every waypoint coincides, so the platform hovers in place. The link
    // geometry is static; one sample at t = 0 captures the whole mission.
    timeline.totalDurationS = 0.0;
    timeline.samples.push_back({0.0, s.hapPlan.pois.front().position});
  }
  const std::size_t n = timeline.samples.size();

  const GeocentricCoord satEcef = toGeocentric(s.satellitePosition);
  const GeographicCoord subSatellite =
      makeGeographic(s.satellitePosition.latitude, s.satellitePosition.longitude, 0.0);

  std::vector<double> px(n);
  std::vector<double> py(n);
  std::vector<double> pz(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GeocentricCoord p = toGeocentric(timeline.samples[i].position);
    px[i] = p.x;
    py[i] = p.y;
    pz[i] = p.z;
  }
  const kernels::Ops& ops = kernels::activeOps();
  std::vector<double> slant(n);
  ops.distanceToPointArray(px.data(), py.data(), pz.data(), n, satEcef.x, satEcef.y,
                           satEcef.z, slant.data());
  std::vector<double> fspl(n);
  ops.freeSpacePathLossArray(s.carrierFrequencyGhz, slant.data(), fspl.data(), n);

  AntennaConfig satAntenna = s.satelliteAntenna;
  AntennaConfig hapAntenna = s.hapAntenna;
  satAntenna.carrierFrequencyGhz = s.carrierFrequencyGhz;
  hapAntenna.carrierFrequencyGhz = s.carrierFrequencyGhz;
  const double noiseDbm = noisePowerDbm(s.bandwidthHz, s.noiseFigureDb);

  std::vector<ResultRow> rows(n);
  std::vector<double> snr(n);
  for (std::size_t i = 0; i < n; ++i) {
    const GeographicCoord& pos = timeline.samples[i].position;
    ResultRow& row = rows[i];
    row.timeS = timeline.samples[i].timeS;
    row.latDeg = pos.latitude * kDegPerRad;
    row.lonDeg = pos.longitude * kDegPerRad;
    row.altM = pos.altitude;
    row.slantM = slant[i];
    row.groundM = groundDistance(pos, subSatellite);
    row.elevDeg = elevationAngleDeg(pos, s.satellitePosition);

    Rng rng(s.seed, i);
    const bool los = losProbabilityDraw(tables, s.environment, row.elevDeg, rng,
                                        s.channelOptions.forceLos);
    row.fsplDb = fspl[i];
    row.sfDb = s.channelOptions.shadowingEnabled
                   ? sampleShadowFadingDb(tables, s.environment, los, row.elevDeg, rng)
                   : 0.0;
    row.clDb = clutterLossDb(tables, s.environment, los, row.elevDeg);
    row.atmDb = atmosphericAbsorptionDb(tables, s.carrierFrequencyGhz, row.elevDeg,
                                        s.channelOptions.atmosphericColumnFraction);
    row.tscintDb = troposphericScintillationDb(tables, s.carrierFrequencyGhz, row.elevDeg,
                                               s.channelOptions.troposphericScintEnabled);
    row.iscintDb = s.channelOptions.ionosphericScintEnabled
                       ? ionosphericScintillationDb(s.carrierFrequencyGhz, row.latDeg,
                                                    s.channelOptions.pFluc4GhzDb)
                       : 0.0;
    row.totalLossDb =
        row.fsplDb + row.sfDb + row.clDb + row.atmDb + row.tscintDb + row.iscintDb;

    const double txGain =
        apertureGainDbi(satAntenna, offBoresightAngleDeg(s.satellitePosition, satAntenna, pos));
    const double rxGain =
        apertureGainDbi(hapAntenna, offBoresightAngleDeg(pos, hapAntenna, s.satellitePosition));
    snr[i] = s.txPowerDbm + txGain + rxGain - row.totalLossDb - noiseDbm;
    row.snrDb = snr[i];
  }
  std::vector<double> capacity(n);
  ops.shannonCapacityArray(s.bandwidthHz, snr.data(), capacity.data(), n);
  for (std::size_t i = 0; i < n; ++i) {
    rows[i].capacityBps = capacity[i];
  }
  return rows;
}

std::vector<ResultRow> sweepFrequency(const Scenario& s, double fStartGhz, double fStopGhz,
                                      double fStepGhz) {
  return sweepFrequency(s, LossTables::load(s.tablePaths), fStartGhz, fStopGhz, fStepGhz);
}

std::vector<ResultRow> sweepFrequency(const Scenario& s, const LossTables& tables,
                                      double fStartGhz, double fStopGhz, double fStepGhz) {
  if (!(fStartGhz > 0.0) || !(fStopGhz >= fStartGhz) || !(fStepGhz > 0.0)) {
    throw ValidationError("sweep requires 0 < fstart <= fstop and fstep > 0");
  }
  if (s.hapPlan.pois.empty()) {
    throw EmptyPlanError("scenario has no points of interest");
  }

  // Hover at the point of interest with the best SNR at the scenario carrier.
  std::size_t best = 0;
  double bestSnr = -std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < s.hapPlan.pois.size(); ++j) {
    Rng rng(s.seed, j);
    const GeographicCoord& candidate = s.hapPlan.pois[j].position;
    const ChannelState state =
        evaluateChannel(tables, s.environment, s.carrierFrequencyGhz, s.satellitePosition,
                        candidate, s.channelOptions, rng);
    const double snr = computeSnrDb(s.linkConfig(), s.satellitePosition, candidate, state);
    if (snr > bestSnr) {
      bestSnr = snr;
      best = j;
    }
  }
  const GeographicCoord hover = s.hapPlan.pois[best].position;
  const GeographicCoord subSatellite =
      makeGeographic(s.satellitePosition.latitude, s.satellitePosition.longitude, 0.0);

  const std::size_t count =
      static_cast<std::size_t>((fStopGhz - fStartGhz) / fStepGhz + 1e-9) + 1;
  std::vector<ResultRow> rows(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double frequency = fStartGhz + static_cast<double>(i) * fStepGhz;
    LinkConfig cfg = s.linkConfig();
    cfg.carrierFrequencyGhz = frequency;
    Rng rng(s.seed, i);
    const ChannelState state = evaluateChannel(tables, s.environment, frequency,
                                               s.satellitePosition, hover,
                                               s.channelOptions, rng);
    ResultRow& row = rows[i];
    row.timeS = frequency;
    row.latDeg = hover.latitude * kDegPerRad;
    row.lonDeg = hover.longitude * kDegPerRad;
    row.altM = hover.altitude;
    row.slantM = state.slantDistanceM;
    row.groundM = groundDistance(hover, subSatellite);
    row.elevDeg = state.elevationDeg;
    row.fsplDb = state.fsplDb;
    row.sfDb = state.shadowFadingDb;
    row.clDb = state.clutterLossDb;
    row.atmDb = state.atmosphericLossDb;
    row.tscintDb = state.troposphericScintDb;
    row.iscintDb = state.ionosphericScintDb;
    row.totalLossDb = state.totalLossDb;
    row.snrDb = computeSnrDb(cfg, s.satellitePosition, hover, state);
    row.capacityBps = shannonCapacityBps(row.snrDb, s.bandwidthHz);
  }
  return rows;
}

std::vector<std::pair<double, double>> snrVsGroundDistance(
    const std::vector<ResultRow>& rows) {
  if (rows.empty()) {
    throw EmptyInputError("no rows to aggregate");
  }
  std::vector<std::pair<double, double>> pairs;
  pairs.reserve(rows.size());
  for (const ResultRow& row : rows) {
    pairs.emplace_back(row.groundM, row.snrDb);
  }
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<double, double>> merged;
  merged.reserve(pairs.size());
  std::size_t i = 0;
  while (i < pairs.size()) {
    std::size_t j = i;
    double sum = 0.0;
    while (j < pairs.size() && pairs[j].first == pairs[i].first) {
      sum += pairs[j].second;
      ++j;
    }
    merged.emplace_back(pairs[i].first, sum / static_cast<double>(j - i));
    i = j;
  }
  return merged;
}

namespace {

constexpr const char* kColumnsAfterFirst =
    ",lat_deg,lon_deg,alt_m,slant_m,ground_m,elev_deg,fspl_db,sf_db,cl_db,atm_db,"
    "tscint_db,iscint_db,total_loss_db,snr_db,capacity_bps";

}  // namespace

void writeResultCsv(const std::vector<ResultRow>& rows, std::ostream& out,
                    bool frequencyColumn) {
  out << (frequencyColumn ? "freq_ghz" : "time_s") << kColumnsAfterFirst << '\n';
  char line[600];
  for (const ResultRow& r : rows) {
    std::snprintf(line, sizeof line,
                  "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,"
                  "%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  r.timeS, r.latDeg, r.lonDeg, r.altM, r.slantM, r.groundM, r.elevDeg,
                  r.fsplDb, r.sfDb, r.clDb, r.atmDb, r.tscintDb, r.iscintDb,
                  r.totalLossDb, r.snrDb, r.capacityBps);
    out << line;
  }
}

std::vector<ResultRow> parseResultCsv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw ParseError("empty result file");
  }
  if (!line.empty() && line.back() == '\r') {
    line.pop_back();
  }
  if (line != std::string("time_s") + kColumnsAfterFirst &&
      line != std::string("freq_ghz") + kColumnsAfterFirst) {
    throw ParseError("unexpected result header: " + line);
  }
  std::vector<ResultRow> rows;
  std::size_t lineNo = 1;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      continue;
    }
    double values[16];
    const char* cursor = line.c_str();
    for (int f = 0; f < 16; ++f) {
      char* end = nullptr;
      values[f] = std::strtod(cursor, &end);
      if (end == cursor) {
        throw ParseError("line " + std::to_string(lineNo) + ": bad number in column " +
                         std::to_string(f + 1));
      }
      cursor = end;
      if (f < 15) {
        if (*cursor != ',') {
          throw ParseError("line " + std::to_string(lineNo) + ": expected 16 columns");
        }
        ++cursor;
      }
    }
    if (*cursor != '\0') {
      throw ParseError("line " + std::to_string(lineNo) + ": trailing characters");
    }
    ResultRow row;
    row.timeS = values[0];
    row.latDeg = values[1];
    row.lonDeg = values[2];
    row.altM = values[3];
    row.slantM = values[4];
    row.groundM = values[5];
    row.elevDeg = values[6];
    row.fsplDb = values[7];
    row.sfDb = values[8];
    row.clDb = values[9];
    row.atmDb = values[10];
    row.tscintDb = values[11];
    row.iscintDb = values[12];
    row.totalLossDb = values[13];
    row.snrDb = values[14];
    row.capacityBps = values[15];
    rows.push_back(row);
  }
  return rows;
}

void writeDistanceCsv(const std::vector<std::pair<double, double>>& pairs,
                      std::ostream& out) {
  out << "ground_m,snr_db\n";
  char line[80];
  for (const auto& [ground, snr] : pairs) {
    std::snprintf(line, sizeof line, "%.17g,%.17g\n", ground, snr);
    out << line;
  }
}

}  // namespace ntnsim
