#pragma once

#include <cmath>

#include "ntnsim/error.hpp"

namespace ntnsim {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kDegPerRad = 180.0 / kPi;
inline constexpr double kRadPerDeg = kPi / 180.0;

/// Reference ellipsoid plus the scale exponents of the projected frame.
struct Ellipsoid {
  double semiMajorAxis = 6378137.0;            // equatorial radius [m]
  double eccentricity = 0.0818191908426215;    // first eccentricity
  double projectionAlpha = 25.059;             // horizontal map scale exponent
  double projectionBeta = 24.665;              // vertical map scale exponent

  double eccentricitySquared() const { return eccentricity * eccentricity; }

  /// Prime-vertical radius of curvature at a geodetic latitude [rad].
  double primeVerticalRadius(double latitudeRad) const {
    const double s = std::sin(latitudeRad);
    return semiMajorAxis / std::sqrt(1.0 - eccentricitySquared() * s * s);
  }
};

/// Shared default ellipsoid (WGS84 with the standard map exponents).
const Ellipsoid& wgs84();

/// Geodetic position. Angles are radians; altitude is meters above the
/// ellipsoid surface.
struct GeographicCoord {
  double latitude = 0.0;   // [rad], in [-pi/2, pi/2]
  double longitude = 0.0;  // [rad], normalized to [-pi, pi)
  double altitude = 0.0;   // [m]
};

/// Earth-centered, earth-fixed Cartesian position [m].
struct GeocentricCoord {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Position in the planar map frame used for trajectory geometry.
/// x and y are dimensionless map units; z is meters (altitude passes
/// through the projection unchanged).
struct ProjectedCoord {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
};

/// Wrap a longitude into [-pi, pi).
double normalizeLongitude(double longitudeRad);

/// Build a validated geographic coordinate from radians. Throws
/// DomainError on non-finite values or latitude outside [-pi/2, pi/2];
/// the longitude is normalized.
GeographicCoord makeGeographic(double latitudeRad, double longitudeRad, double altitudeM);

/// Convenience form of makeGeographic taking degrees.
GeographicCoord geographicFromDegrees(double latitudeDeg, double longitudeDeg, double altitudeM);

/// Map a geodetic position into the planar frame:
///   x = 2^alpha / (2 pi) * (lon + pi)
///   y = 2^beta  / (2 pi) * (pi - ln tan(pi/4 + lat/2))
///   z = altitude
/// The x axis carries longitude and the y axis carries latitude.
/// Throws PoleSingularityError when |lat| is at the pole, where the
/// vertical map coordinate diverges.
ProjectedCoord toProjected(const GeographicCoord& g, const Ellipsoid& e = wgs84());

/// Invert toProjected. The inputs are clamped to nothing: projected
/// points map back to latitude in (-pi/2, pi/2) and longitude wrapped
/// into [-pi, pi).
GeographicCoord fromProjected(const ProjectedCoord& p, const Ellipsoid& e = wgs84());

/// Geodetic to earth-centered Cartesian:
///   x = (r + h) cos lat cos lon
///   y = (r + h) cos lat sin lon
///   z = ((1 - e^2) r + h) sin lat
/// with r the prime-vertical radius at the latitude.
GeocentricCoord toGeocentric(const GeographicCoord& g, const Ellipsoid& e = wgs84());

/// Straight-line (chord) distance in meters between two geodetic
/// positions, computed through the earth-centered frame.
double slantDistance(const GeographicCoord& a, const GeographicCoord& b,
                     const Ellipsoid& e = wgs84());

/// Elevation angle [deg] of the target above the observer's local
/// horizontal plane; negative when the target is below it. Throws
/// CoincidentPointsError when the two positions coincide.
double elevationAngleDeg(const GeographicCoord& observer, const GeographicCoord& target,
                         const Ellipsoid& e = wgs84());

/// Great-circle distance [m] between the ground tracks of two
/// positions, on a sphere of the equatorial radius. Altitudes are
/// ignored.
double groundDistance(const GeographicCoord& a, const GeographicCoord& b,
                      const Ellipsoid& e = wgs84());

/// Local east/north/up unit vectors of a geodetic position, expressed
/// in the earth-centered frame. Throws PoleSingularityError at the
/// poles, where east and north lose direction.
struct EnuBasis {
  GeocentricCoord east;
  GeocentricCoord north;
  GeocentricCoord up;
};

EnuBasis enuBasis(const GeographicCoord& g);

}  // namespace ntnsim
