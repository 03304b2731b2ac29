#include "ntnsim/antenna.hpp"

#include <algorithm>
#include <cmath>

#include "ntnsim/error.hpp"

namespace ntnsim {

namespace {

constexpr double kSpeedOfLight = 299792458.0;  // [m/s]

// Maclaurin series: J1(x) = sum_k (-1)^k (x/2)^(2k+1) / (k! (k+1)!).
// For x < 12 the largest term is ~4.2e3, so cancellation costs at most
// ~1e-12 absolute.
double j1Series(double x) {
  const double half = x / 2.0;
  double term = half;
  double total = term;
  for (int k = 1; k <= 60; ++k) {
    term *= -(half * half) / (static_cast<double>(k) * (k + 1));
    const double next = total + term;
    if (next == total) {
      break;
    }
    total = next;
  }
  return total;
}

// Hankel asymptotic expansion for x >= 12:
//   J1(x) = sqrt(2/(pi x)) (P(u) cos chi - Q(u) sin chi),
//   chi = x - 3 pi / 4, u = 1/(8x).
// P and Q carry the exact expansion coefficients for order 1; truncation
// error at x = 12 is ~2e-9 on the normalized amplitude.
double j1Asymptotic(double x) {
  const double u = 1.0 / (8.0 * x);
  const double u2 = u * u;
  const double p =
      1.0 + u2 * (7.5 + u2 * (-590.625 +
                  u2 * (177364.6875 +
                  u2 * (-115492916.6015625 + u2 * 130564742218.06641))));
  const double q =
      u * (3.0 + u2 * (-52.5 + u2 * (9095.625 +
                       u2 * (-4180739.0625 +
                       u2 * (3657275692.3828125 + u2 * -5186981122663.1836)))));
  const double chi = x - 2.3561944901923448;  // 3 pi / 4
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

}  // namespace

double besselJ1(double x) {
  const double ax = std::abs(x);
  const double value = ax < 12.0 ? j1Series(ax) : j1Asymptotic(ax);
  return x < 0.0 ? -value : value;
}

double apertureGainDbi(const AntennaConfig& cfg, double offBoresightDeg) {
  if (!(offBoresightDeg >= 0.0 && offBoresightDeg <= 180.0)) {
    throw AngleRangeError("off-boresight angle outside [0, 180] degrees");
  }
  if (cfg.apertureDiameterM <= 0.0) {
    throw NonPositiveInputError("aperture diameter must be positive");
  }
  if (cfg.carrierFrequencyGhz <= 0.0) {
    throw NonPositiveInputError("carrier frequency must be positive");
  }
  const double floorDbi = cfg.maxGainDbi - cfg.patternFloorDb;
  if (offBoresightDeg > 90.0) {
    return floorDbi;
  }
  if (offBoresightDeg == 0.0) {
    return cfg.maxGainDbi;
  }
  const double waveNumber = 2.0 * kPi * cfg.carrierFrequencyGhz * 1e9 / kSpeedOfLight;
  const double u = waveNumber * (cfg.apertureDiameterM / 2.0) *
                   std::sin(offBoresightDeg * kRadPerDeg);
  const double normalized = 2.0 * besselJ1(u) / u;  // -> 1 as u -> 0
  if (normalized == 0.0) {
    return floorDbi;  // exact pattern null
  }
  const double gain = cfg.maxGainDbi + 10.0 * std::log10(normalized * normalized);
  return std::max(gain, floorDbi);
}

double offBoresightAngleDeg(const GeographicCoord& nodePos, const AntennaConfig& cfg,
                            const GeographicCoord& targetPos, const Ellipsoid& e) {
  const double inclination = cfg.boresightInclinationDeg;
  if (!(inclination >= 0.0 && inclination <= 180.0)) {
    throw AngleRangeError("boresight inclination outside [0, 180] degrees");
  }
  const GeocentricCoord node = toGeocentric(nodePos, e);
  const GeocentricCoord target = toGeocentric(targetPos, e);
  const double dx = target.x - node.x;
  const double dy = target.y - node.y;
  const double dz = target.z - node.z;
  const double range = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (range == 0.0) {
    throw CoincidentPointsError("line of sight undefined for coincident points");
  }

  GeocentricCoord boresight;
  const double cl = std::cos(nodePos.latitude);
  const double sl = std::sin(nodePos.latitude);
  const double co = std::cos(nodePos.longitude);
  const double so = std::sin(nodePos.longitude);
  const GeocentricCoord up{cl * co, cl * so, sl};
  if (inclination == 0.0) {
    boresight = up;
  } else if (inclination == 180.0) {
    boresight = {-up.x, -up.y, -up.z};
  } else {
    // Tilt from zenith within the local north vertical plane.
    const EnuBasis basis = enuBasis(nodePos);
    const double ci = std::cos(inclination * kRadPerDeg);
    const double si = std::sin(inclination * kRadPerDeg);
    boresight = {ci * basis.up.x + si * basis.north.x,
                 ci * basis.up.y + si * basis.north.y,
                 ci * basis.up.z + si * basis.north.z};
  }
  const double cosine =
      (boresight.x * dx + boresight.y * dy + boresight.z * dz) / range;
  return std::acos(std::clamp(cosine, -1.0, 1.0)) * kDegPerRad;
}

}  // namespace ntnsim
