#pragma once

#include "ntnsim/antenna.hpp"
#include "ntnsim/channel.hpp"
#include "ntnsim/geodesy.hpp"

namespace ntnsim {

/// One directed link (transmitter towards receiver). The antenna pattern
/// frequency follows carrierFrequencyGhz, so sweeping the carrier requires
/// no antenna reconfiguration.
struct LinkConfig {
  double txPowerDbm = 37.5;
  AntennaConfig txAntenna;
  AntennaConfig rxAntenna;
  double bandwidthHz = 4e8;
  double noiseFigureDb = 1.2;
  double carrierFrequencyGhz = 20.0;
};

/// Thermal noise floor: -174 dBm/Hz (290 K reference) plus bandwidth and
/// noise figure.
double noisePowerDbm(double bandwidthHz, double noiseFigureDb);

/// SNR [dB] of the link for an evaluated channel:
///   txPower + txGain + rxGain - totalLoss - noisePower
/// with each gain taken at that end's off-boresight angle toward the other
/// end.
double computeSnrDb(const LinkConfig& cfg, const GeographicCoord& txPos,
                    const GeographicCoord& rxPos, const ChannelState& channel,
                    const Ellipsoid& e = wgs84());

/// Shannon bound: bandwidth * log2(1 + 10^(snr/10)).
double shannonCapacityBps(double snrDb, double bandwidthHz);

/// Difference [dB] between the configured radiated power
/// (txPower - 30 + txAntenna.maxGain, in dBW) and a declared EIRP density
/// in dBW/MHz integrated over the bandwidth. Used as a consistency warning,
/// not an error.
double eirpDensityGapDb(const LinkConfig& cfg, double eirpDensityDbwPerMhz);

/// One evaluated mission sample.
struct SnrSample {
  double timeS = 0.0;
  double snrDb = 0.0;
  double groundDistanceM = 0.0;
  double slantDistanceM = 0.0;
  double elevationDeg = 0.0;
  double capacityBps = 0.0;
  ChannelState lossBreakdown;
};

}  // namespace ntnsim
