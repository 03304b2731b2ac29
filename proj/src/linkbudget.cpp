#include "ntnsim/linkbudget.hpp"

#include <cmath>

#include "ntnsim/error.hpp"

namespace ntnsim {

double noisePowerDbm(double bandwidthHz, double noiseFigureDb) {
  if (bandwidthHz <= 0.0) {
    throw NonPositiveInputError("bandwidth must be positive");
  }
  return -174.0 + 10.0 * std::log10(bandwidthHz) + noiseFigureDb;
}

double computeSnrDb(const LinkConfig& cfg, const GeographicCoord& txPos,
                    const GeographicCoord& rxPos, const ChannelState& channel,
                    const Ellipsoid& e) {
  AntennaConfig tx = cfg.txAntenna;
  AntennaConfig rx = cfg.rxAntenna;
  tx.carrierFrequencyGhz = cfg.carrierFrequencyGhz;
  rx.carrierFrequencyGhz = cfg.carrierFrequencyGhz;
  const double txGain = apertureGainDbi(tx, offBoresightAngleDeg(txPos, tx, rxPos, e));
  const double rxGain = apertureGainDbi(rx, offBoresightAngleDeg(rxPos, rx, txPos, e));
  return cfg.txPowerDbm + txGain + rxGain - channel.totalLossDb -
         noisePowerDbm(cfg.bandwidthHz, cfg.noiseFigureDb);
}

double shannonCapacityBps(double snrDb, double bandwidthHz) {
  if (bandwidthHz <= 0.0) {
    throw NonPositiveInputError("bandwidth must be positive");
  }
  return bandwidthHz * std::log2(1.0 + std::pow(10.0, snrDb / 10.0));
}

double eirpDensityGapDb(const LinkConfig& cfg, double eirpDensityDbwPerMhz) {
  const double radiatedDbw = cfg.txPowerDbm - 30.0 + cfg.txAntenna.maxGainDbi;
  const double declaredDbw =
      eirpDensityDbwPerMhz + 10.0 * std::log10(cfg.bandwidthHz / 1e6);
  return std::abs(radiatedDbw - declaredDbw);
}

}  // namespace ntnsim
