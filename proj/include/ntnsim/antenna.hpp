#pragma once

#include "ntnsim/geodesy.hpp"

namespace ntnsim {

/// Circular-aperture (reflector) antenna. The boresight is fixed relative
/// to the local vertical: 0 deg points at the zenith, 180 deg at the nadir.
/// maxGain is taken as configured; the diameter only shapes the pattern.
struct AntennaConfig {
  double maxGainDbi = 0.0;
  double apertureDiameterM = 1.0;
  double boresightInclinationDeg = 0.0;  // 0 = zenith, 180 = nadir
  double carrierFrequencyGhz = 20.0;
  double patternFloorDb = 60.0;  // clamp depth below maxGain for nulls/backlobe
};

/// Bessel function of the first kind, order 1. Absolute error stays below
/// 1e-8 for |x| <= 1e3 (power series up to |x| < 12, Hankel asymptotic
/// expansion beyond).
double besselJ1(double x);

/// Gain [dBi] of the circular aperture at an off-boresight angle.
///
///   gain(theta) = maxGain + 10 log10( 4 |J1(k a sin theta) / (k a sin theta)|^2 )
///
/// with k = 2 pi f / c and a = apertureDiameterM / 2. The normalized term
/// tends to 1 at boresight, so gain(0) = maxGain exactly. Pattern nulls and
/// the back hemisphere (theta > 90 deg) are clamped to
/// maxGain - patternFloorDb. Throws AngleRangeError outside [0, 180] deg and
/// NonPositiveInputError for non-positive diameter or frequency.
double apertureGainDbi(const AntennaConfig& cfg, double offBoresightDeg);

/// Angle [deg] between the antenna boresight at nodePos and the line of
/// sight to targetPos, in the geocentric frame. The boresight is the local
/// zenith rotated by the configured inclination; intermediate inclinations
/// tilt within the local north vertical plane (only 0 and 180 appear in the
/// packaged scenarios). Throws CoincidentPointsError when the positions
/// coincide and PoleSingularityError for intermediate inclinations at the
/// poles, where north is undefined.
double offBoresightAngleDeg(const GeographicCoord& nodePos, const AntennaConfig& cfg,
                            const GeographicCoord& targetPos,
                            const Ellipsoid& e = wgs84());

}  // namespace ntnsim
