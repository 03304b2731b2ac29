#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <vector>

#include "ntnsim/antenna.hpp"
#include "ntnsim/error.hpp"
#include "ntnsim/geodesy.hpp"

using namespace ntnsim;

namespace {

GeographicCoord geo(double latDeg, double lonDeg, double altM) {
  return {latDeg * kRadPerDeg, lonDeg * kRadPerDeg, altM};
}

AntennaConfig satelliteAntenna() {
  AntennaConfig cfg;
  cfg.maxGainDbi = 58.5;
  cfg.apertureDiameterM = 5.0;
  cfg.boresightInclinationDeg = 180.0;
  cfg.carrierFrequencyGhz = 20.0;
  return cfg;
}

AntennaConfig hapAntenna() {
  AntennaConfig cfg;
  cfg.maxGainDbi = 39.7;
  cfg.apertureDiameterM = 0.6;
  cfg.boresightInclinationDeg = 0.0;
  cfg.carrierFrequencyGhz = 20.0;
  return cfg;
}

// Scans the pattern over [loDeg, hiDeg] on a fine grid and returns the angle
// of the deepest gain dip. Good to ~1e-5 deg, plenty for locating a null.
double deepestDipDeg(const AntennaConfig& cfg, double loDeg, double hiDeg) {
  double bestAngle = loDeg;
  double bestGain = apertureGainDbi(cfg, loDeg);
  const int steps = 25000;
  for (int i = 1; i <= steps; ++i) {
    const double angle = loDeg + (hiDeg - loDeg) * i / steps;
    const double gain = apertureGainDbi(cfg, angle);
    if (gain < bestGain) {
      bestGain = gain;
      bestAngle = angle;
    }
  }
  return bestAngle;
}

}  // namespace

TEST_CASE("besselJ1 matches reference values") {
  // Reference values computed with an independent implementation
  // (SciPy's j1, which wraps the Cephes library). Includes both series and
  // asymptotic branches, the first lobes' peaks and zeros, and negatives.
  const struct {
    double x;
    double expected;
  } table[] = {
      {0.0, 0.0},
      {1e-08, 5.000000000000001e-09},
      {0.001, 0.0004999999375000026},
      {0.1, 0.049937526036242},
      {0.5, 0.24226845767487387},
      {1.0, 0.44005058574493355},
      {1.8411837813406593, 0.5818652242815964},
      {2.0, 0.5767248077568734},
      {3.0, 0.33905895852593654},
      {3.8317059702075125, -9.335846914555864e-17},
      {5.0, -0.3275791375914653},
      {5.3314427735250325, -0.34612620185379156},
      {7.015586669815619, 5.434650993845187e-17},
      {8.0, 0.2346363468539146},
      {9.5, 0.1612644307575298},
      {10.173468135062722, 9.026079153265403e-17},
      {11.0, -0.17678529895672165},
      {11.9, -0.22898324966192404},
      {12.0, -0.2234471044906276},
      {12.1, -0.21574897337692486},
      {13.323691936314223, 1.577434578487455e-16},
      {15.0, 0.20510403861352278},
      {16.470630050877634, -5.115716513106776e-16},
      {20.0, 0.0668331241758502},
      {25.0, -0.1253502495802898},
      {30.0, -0.11875106261662305},
      {40.0, 0.126038318037585},
      {50.0, -0.09751182812517509},
      {75.0, -0.08513999504482932},
      {100.0, -0.0771453520141123},
      {150.0, -0.06514516365772736},
      {250.0, -0.043269038410330966},
      {400.0, -0.009222058428585565},
      {500.0, 0.01047261347037299},
      {650.0, 0.027812398473643713},
      {800.0, 0.026775138722323014},
      {1000.0, 0.00472831190708902},
      {-1.0, -0.44005058574493355},
      {-12.5, 0.16548380461475956},
      {-300.0, 0.03188743137749927},
  };
  for (const auto& row : table) {
    CAPTURE(row.x);
    CHECK(std::abs(besselJ1(row.x) - row.expected) < 1e-8);
  }
}

TEST_CASE("besselJ1 agrees with the standard library special function") {
  // Dense sweep against libstdc++'s independent cyl_bessel_j. The step is
  // irrational-ish so the grid never lands exactly on a zero of J1.
  for (double x = 0.0137; x < 60.0; x += 0.0734) {
    CAPTURE(x);
    CHECK(std::abs(besselJ1(x) - std::cyl_bessel_j(1.0, x)) < 1e-8);
  }
}

TEST_CASE("besselJ1 is odd and continuous across the branch switch") {
  for (double x : {0.3, 1.7, 4.2, 11.99, 12.01, 33.0, 250.0}) {
    CHECK(besselJ1(-x) == -besselJ1(x));
  }
  // The series hands over to the asymptotic expansion at |x| = 12; both
  // sides of the seam must stay on the reference curve.
  CHECK(std::abs(besselJ1(11.999999) - std::cyl_bessel_j(1.0, 11.999999)) < 1e-8);
  CHECK(std::abs(besselJ1(12.000001) - std::cyl_bessel_j(1.0, 12.000001)) < 1e-8);
}

TEST_CASE("aperture gain is the configured maximum on boresight") {
  CHECK(apertureGainDbi(satelliteAntenna(), 0.0) == 58.5);
  CHECK(apertureGainDbi(hapAntenna(), 0.0) == 39.7);
  // Continuity just off boresight.
  CHECK(apertureGainDbi(hapAntenna(), 1e-7) == doctest::Approx(39.7).epsilon(1e-9));
}

TEST_CASE("aperture gain matches a from-scratch evaluation of the pattern") {
  const AntennaConfig cfg = satelliteAntenna();
  for (double deg : {0.05, 0.1, 0.15, 0.3, 1.0, 5.0, 20.0}) {
    CAPTURE(deg);
    const double k = 2.0 * kPi * cfg.carrierFrequencyGhz * 1e9 / 299792458.0;
    const double u = k * (cfg.apertureDiameterM / 2.0) * std::sin(deg * kRadPerDeg);
    const double normalized = 2.0 * std::cyl_bessel_j(1.0, u) / u;
    const double expected = std::max(
        cfg.maxGainDbi + 10.0 * std::log10(normalized * normalized),
        cfg.maxGainDbi - cfg.patternFloorDb);
    CHECK(apertureGainDbi(cfg, deg) == doctest::Approx(expected).epsilon(1e-9));
  }
}

TEST_CASE("aperture gain decreases monotonically across the main lobe") {
  // First null of the 5 m dish at 20 GHz sits near 0.2095 deg; stay inside.
  const AntennaConfig cfg = satelliteAntenna();
  double previous = apertureGainDbi(cfg, 0.0);
  for (int i = 1; i <= 19; ++i) {
    const double gain = apertureGainDbi(cfg, 0.01 * i);
    CHECK(gain < previous);
    previous = gain;
  }
  // At the first null itself the pattern collapses toward the floor.
  const double k = 2.0 * kPi * cfg.carrierFrequencyGhz * 1e9 / 299792458.0;
  const double firstNullDeg =
      std::asin(3.8317059702075125 / (k * cfg.apertureDiameterM / 2.0)) * kDegPerRad;
  CHECK(apertureGainDbi(cfg, firstNullDeg) < cfg.maxGainDbi - 50.0);
}

TEST_CASE("aperture gain stays within the floor-to-peak envelope") {
  const AntennaConfig cfg = hapAntenna();
  const double floor = cfg.maxGainDbi - cfg.patternFloorDb;
  for (double deg = 0.05; deg <= 90.0; deg += 0.05) {
    const double gain = apertureGainDbi(cfg, deg);
    CHECK(gain <= cfg.maxGainDbi);
    CHECK(gain >= floor);
  }
}

TEST_CASE("back hemisphere clamps to the pattern floor") {
  const AntennaConfig cfg = hapAntenna();
  const double floor = cfg.maxGainDbi - cfg.patternFloorDb;
  CHECK(apertureGainDbi(cfg, 90.000001) == floor);
  CHECK(apertureGainDbi(cfg, 120.0) == floor);
  CHECK(apertureGainDbi(cfg, 180.0) == floor);
  // The edge of the visible hemisphere is far down the sidelobes.
  CHECK(apertureGainDbi(cfg, 90.0) <= cfg.maxGainDbi - 30.0);
}

TEST_CASE("doubling the frequency halves the first-null angle") {
  AntennaConfig cfg = hapAntenna();
  const double nullAt20 = deepestDipDeg(cfg, 1.5, 2.0);
  cfg.carrierFrequencyGhz = 40.0;
  const double nullAt40 = deepestDipDeg(cfg, 0.7, 1.1);
  CHECK(nullAt20 / nullAt40 == doctest::Approx(2.0).epsilon(0.01));
}

TEST_CASE("aperture gain rejects bad inputs") {
  AntennaConfig cfg = hapAntenna();
  CHECK_THROWS_AS(apertureGainDbi(cfg, -0.001), AngleRangeError);
  CHECK_THROWS_AS(apertureGainDbi(cfg, 180.001), AngleRangeError);
  CHECK_THROWS_AS(apertureGainDbi(cfg, std::nan("")), AngleRangeError);
  cfg.apertureDiameterM = 0.0;
  CHECK_THROWS_AS(apertureGainDbi(cfg, 1.0), NonPositiveInputError);
  cfg = hapAntenna();
  cfg.carrierFrequencyGhz = -20.0;
  CHECK_THROWS_AS(apertureGainDbi(cfg, 1.0), NonPositiveInputError);
}

TEST_CASE("off-boresight angle vanishes for aligned zenith and nadir looks") {
  const GeographicCoord below = geo(10.0, 20.0, 20000.0);
  const GeographicCoord above = geo(10.0, 20.0, 35786000.0);
  // Both points sit on the same ellipsoid normal, so a zenith antenna at the
  // lower point and a nadir antenna at the upper one stare at each other.
  CHECK(offBoresightAngleDeg(below, hapAntenna(), above) ==
        doctest::Approx(0.0).epsilon(1e-6));
  CHECK(offBoresightAngleDeg(above, satelliteAntenna(), below) ==
        doctest::Approx(0.0).epsilon(1e-6));
  AntennaConfig flipped = hapAntenna();
  flipped.boresightInclinationDeg = 180.0;
  CHECK(offBoresightAngleDeg(below, flipped, above) ==
        doctest::Approx(180.0).epsilon(1e-9));
}

TEST_CASE("zenith off-boresight angle complements the elevation angle") {
  const GeographicCoord sat = geo(0.04, -4.95, 35770880.0);
  const AntennaConfig up = hapAntenna();
  for (double latDeg : {-40.0, -5.0, 0.04, 12.0, 47.6, 71.0}) {
    CAPTURE(latDeg);
    const GeographicCoord node = geo(latDeg, -4.95, 20000.0);
    const double elevation = elevationAngleDeg(node, sat);
    const double off = offBoresightAngleDeg(node, up, sat);
    CHECK(off == doctest::Approx(90.0 - elevation).epsilon(1e-9));
  }
}

TEST_CASE("off-boresight angle grows with ground offset") {
  const GeographicCoord node = geo(0.0, 0.0, 20000.0);
  const AntennaConfig up = hapAntenna();
  double previous = -1.0;
  for (int lonDeg = 0; lonDeg <= 8; ++lonDeg) {
    const double off =
        offBoresightAngleDeg(node, up, geo(0.0, lonDeg, 35786000.0));
    CHECK(off > previous);
    previous = off;
  }
  CHECK(offBoresightAngleDeg(node, up, geo(0.0, 0.0, 35786000.0)) ==
        doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("tilted boresight stays in the north vertical plane") {
  AntennaConfig tilted = hapAntenna();
  tilted.boresightInclinationDeg = 45.0;
  const GeographicCoord node = geo(0.0, 0.0, 20000.0);
  // A target straight up is 45 deg off the tilted boresight.
  CHECK(offBoresightAngleDeg(node, tilted, geo(0.0, 0.0, 35786000.0)) ==
        doctest::Approx(45.0).epsilon(1e-6));
  // Tilting toward north moves the boresight away from a southern target.
  const GeographicCoord south = geo(-5.0, 0.0, 35786000.0);
  const double fromTilted = offBoresightAngleDeg(node, tilted, south);
  const double fromZenith = offBoresightAngleDeg(node, hapAntenna(), south);
  CHECK(fromTilted > fromZenith);
}

TEST_CASE("off-boresight angle error cases") {
  const GeographicCoord node = geo(10.0, 20.0, 20000.0);
  const GeographicCoord target = geo(10.0, 21.0, 35786000.0);
  AntennaConfig bad = hapAntenna();
  bad.boresightInclinationDeg = -5.0;
  CHECK_THROWS_AS(offBoresightAngleDeg(node, bad, target), AngleRangeError);
  bad.boresightInclinationDeg = 200.0;
  CHECK_THROWS_AS(offBoresightAngleDeg(node, bad, target), AngleRangeError);
  CHECK_THROWS_AS(offBoresightAngleDeg(node, hapAntenna(), node),
                  CoincidentPointsError);

  // Intermediate tilts need a defined north, which the poles lack. Straight
  // zenith and nadir remain fine there.
  AntennaConfig tilted = hapAntenna();
  tilted.boresightInclinationDeg = 45.0;
  const GeographicCoord pole = geo(90.0, 0.0, 20000.0);
  CHECK_THROWS_AS(offBoresightAngleDeg(pole, tilted, target),
                  PoleSingularityError);
  CHECK_NOTHROW(offBoresightAngleDeg(pole, hapAntenna(), target));
}
