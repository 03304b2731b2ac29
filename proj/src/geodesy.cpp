#include "ntnsim/geodesy.hpp"

#include <algorithm>
#include <cmath>

namespace ntnsim {

namespace {

bool allFinite(double a, double b, double c) {
  return std::isfinite(a) && std::isfinite(b) && std::isfinite(c);
}

// Unit up vector of the local horizontal plane. Well defined at the
// poles too (reduces to +/- z).
GeocentricCoord upVector(const GeographicCoord& g) {
  const double cl = std::cos(g.latitude);
  return {cl * std::cos(g.longitude), cl * std::sin(g.longitude), std::sin(g.latitude)};
}

}  // namespace

const Ellipsoid& wgs84() {
  static const Ellipsoid e{};
  return e;
}

double normalizeLongitude(double longitudeRad) {
  double wrapped = std::fmod(longitudeRad + kPi, 2.0 * kPi);
  if (wrapped < 0.0) {
    wrapped += 2.0 * kPi;
  }
  return wrapped - kPi;
}

GeographicCoord makeGeographic(double latitudeRad, double longitudeRad, double altitudeM) {
  if (!allFinite(latitudeRad, longitudeRad, altitudeM)) {
    throw DomainError("geographic coordinate has a non-finite component");
  }
  if (std::abs(latitudeRad) > kPi / 2.0) {
    throw DomainError("latitude outside [-pi/2, pi/2]");
  }
  return {latitudeRad, normalizeLongitude(longitudeRad), altitudeM};
}

GeographicCoord geographicFromDegrees(double latitudeDeg, double longitudeDeg, double altitudeM) {
  return makeGeographic(latitudeDeg * kRadPerDeg, longitudeDeg * kRadPerDeg, altitudeM);
}

ProjectedCoord toProjected(const GeographicCoord& g, const Ellipsoid& e) {
  if (!(std::abs(g.latitude) < kPi / 2.0)) {
    throw PoleSingularityError("projection diverges at the poles");
  }
  const double scaleX = std::exp2(e.projectionAlpha) / (2.0 * kPi);
  const double scaleY = std::exp2(e.projectionBeta) / (2.0 * kPi);
  const double mercator = std::log(std::tan(kPi / 4.0 + g.latitude / 2.0));
  return {scaleX * (g.longitude + kPi), scaleY * (kPi - mercator), g.altitude};
}

GeographicCoord fromProjected(const ProjectedCoord& p, const Ellipsoid& e) {
  const double scaleX = std::exp2(e.projectionAlpha) / (2.0 * kPi);
  const double scaleY = std::exp2(e.projectionBeta) / (2.0 * kPi);
  const double longitude = normalizeLongitude(p.x / scaleX - kPi);
  const double mercator = kPi - p.y / scaleY;
  const double latitude = 2.0 * std::atan(std::exp(mercator)) - kPi / 2.0;
  return {latitude, longitude, p.z};
}

GeocentricCoord toGeocentric(const GeographicCoord& g, const Ellipsoid& e) {
  const double r = e.primeVerticalRadius(g.latitude);
  const double cl = std::cos(g.latitude);
  const double sl = std::sin(g.latitude);
  return {(r + g.altitude) * cl * std::cos(g.longitude),
          (r + g.altitude) * cl * std::sin(g.longitude),
          ((1.0 - e.eccentricitySquared()) * r + g.altitude) * sl};
}

double slantDistance(const GeographicCoord& a, const GeographicCoord& b, const Ellipsoid& e) {
  const GeocentricCoord pa = toGeocentric(a, e);
  const GeocentricCoord pb = toGeocentric(b, e);
  const double dx = pb.x - pa.x;
  const double dy = pb.y - pa.y;
  const double dz = pb.z - pa.z;
  return std::sqrt(dx * dx + dy * dy + dz * dz);
}

double elevationAngleDeg(const GeographicCoord& observer, const GeographicCoord& target,
                         const Ellipsoid& e) {
  const GeocentricCoord po = toGeocentric(observer, e);
  const GeocentricCoord pt = toGeocentric(target, e);
  const double dx = pt.x - po.x;
  const double dy = pt.y - po.y;
  const double dz = pt.z - po.z;
  const double range = std::sqrt(dx * dx + dy * dy + dz * dz);
  if (range == 0.0) {
    throw CoincidentPointsError("elevation angle undefined for coincident points");
  }
  const GeocentricCoord up = upVector(observer);
  const double cosine = (up.x * dx + up.y * dy + up.z * dz) / range;
  return std::asin(std::clamp(cosine, -1.0, 1.0)) * kDegPerRad;
}

double groundDistance(const GeographicCoord& a, const GeographicCoord& b, const Ellipsoid& e) {
  const double dLat = b.latitude - a.latitude;
  const double dLon = b.longitude - a.longitude;
  const double sLat = std::sin(dLat / 2.0);
  const double sLon = std::sin(dLon / 2.0);
  const double h = sLat * sLat + std::cos(a.latitude) * std::cos(b.latitude) * sLon * sLon;
  return 2.0 * e.semiMajorAxis * std::asin(std::min(1.0, std::sqrt(h)));
}

EnuBasis enuBasis(const GeographicCoord& g) {
  if (!(std::abs(g.latitude) < kPi / 2.0)) {
    throw PoleSingularityError("east/north directions undefined at the poles");
  }
  const double cl = std::cos(g.latitude);
  const double sl = std::sin(g.latitude);
  const double co = std::cos(g.longitude);
  const double so = std::sin(g.longitude);
  EnuBasis basis;
  basis.east = {-so, co, 0.0};
  basis.north = {-sl * co, -sl * so, cl};
  basis.up = {cl * co, cl * so, sl};
  return basis;
}

}  // namespace ntnsim
