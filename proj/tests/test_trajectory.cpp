#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "doctest.h"

#include "ntnsim/trajectory.hpp"

using namespace ntnsim;

namespace {

// Independent reference evaluator: textbook de Casteljau on the projected
// control polygon, one lerp cascade per component.
ProjectedCoord deCasteljau(std::vector<ProjectedCoord> pts, double t) {
  for (std::size_t level = pts.size() - 1; level > 0; --level) {
    for (std::size_t i = 0; i < level; ++i) {
      pts[i].x += t * (pts[i + 1].x - pts[i].x);
      pts[i].y += t * (pts[i + 1].y - pts[i].y);
      pts[i].z += t * (pts[i + 1].z - pts[i].z);
    }
  }
  return pts.front();
}

std::vector<ProjectedCoord> projectedControls(const TrajectoryPlan& plan,
                                              bool expandLevels) {
  std::vector<ProjectedCoord> pts;
  for (const PointOfInterest& poi : plan.pois) {
    const ProjectedCoord p = toProjected(poi.position);
    const int repeats = expandLevels ? poi.interestLevel : 1;
    for (int r = 0; r < repeats; ++r) {
      pts.push_back(p);
    }
  }
  return pts;
}

PointOfInterest poiDeg(double latDeg, double lonDeg, double altM, int level = 1) {
  return {geographicFromDegrees(latDeg, lonDeg, altM), level};
}

TrajectoryPlan equatorialSegment(double groundLengthM, double altitudeM,
                                 double speed = 24.0) {
  const double lonSpanDeg = groundLengthM / wgs84().semiMajorAxis * kDegPerRad;
  TrajectoryPlan plan;
  plan.pois = {poiDeg(0.0, 0.0, altitudeM), poiDeg(0.0, lonSpanDeg, altitudeM)};
  plan.speedMps = speed;
  return plan;
}

double relDistance(const ProjectedCoord& a, const ProjectedCoord& b) {
  const double d = std::hypot(a.x - b.x, std::hypot(a.y - b.y, a.z - b.z));
  const double scale = std::max({std::abs(a.x), std::abs(a.y), std::abs(a.z), 1.0});
  return d / scale;
}

}  // namespace

TEST_CASE("curve matches de Casteljau on random single-level plans") {
  std::mt19937_64 gen(11);
  std::uniform_int_distribution<int> countDist(2, 8);
  std::uniform_real_distribution<double> latDeg(-60.0, 60.0);
  std::uniform_real_distribution<double> lonDeg(-170.0, 170.0);
  std::uniform_real_distribution<double> altM(0.0, 30000.0);
  std::uniform_real_distribution<double> tDist(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    TrajectoryPlan plan;
    const int n = countDist(gen);
    for (int i = 0; i < n; ++i) {
      plan.pois.push_back(poiDeg(latDeg(gen), lonDeg(gen), altM(gen)));
    }
    const std::vector<ProjectedCoord> controls = projectedControls(plan, false);
    for (const double t : {0.0, tDist(gen), 0.5, tDist(gen), 1.0}) {
      const ProjectedCoord ours = bezierCurve(plan, t);
      const ProjectedCoord reference = deCasteljau(controls, t);
      CHECK(relDistance(ours, reference) < 1e-9);
    }
  }
}

TEST_CASE("interest levels behave as repeated control points") {
  TrajectoryPlan leveled;
  leveled.pois = {poiDeg(10.0, 20.0, 18000.0, 2), poiDeg(12.0, 24.0, 20000.0, 3),
                  poiDeg(8.0, 28.0, 22000.0, 1)};
  TrajectoryPlan expanded;
  for (const PointOfInterest& poi : leveled.pois) {
    for (int r = 0; r < poi.interestLevel; ++r) {
      expanded.pois.push_back({poi.position, 1});
    }
  }
  for (const double t : {0.0, 0.125, 0.3, 0.5, 0.77, 1.0}) {
    const ProjectedCoord a = bezierCurve(leveled, t);
    const ProjectedCoord b = bezierCurve(expanded, t);
    CHECK(relDistance(a, b) < 1e-12);
    // and both agree with de Casteljau on the expanded polygon
    const ProjectedCoord reference = deCasteljau(projectedControls(leveled, true), t);
    CHECK(relDistance(a, reference) < 1e-9);
  }
}

TEST_CASE("endpoints interpolate the first and last point exactly") {
  TrajectoryPlan plan;
  plan.pois = {poiDeg(78.244789, 15.4843571, 20000.0, 1),
               poiDeg(35.7074505, 51.1498211, 20000.0, 3),
               poiDeg(0.04, -4.95, 20000.0, 12), poiDeg(64.133542, -21.9348416, 20000.0, 1)};
  const ProjectedCoord first = toProjected(plan.pois.front().position);
  const ProjectedCoord last = toProjected(plan.pois.back().position);
  const ProjectedCoord at0 = bezierCurve(plan, 0.0);
  const ProjectedCoord at1 = bezierCurve(plan, 1.0);
  CHECK(at0.x == first.x);
  CHECK(at0.y == first.y);
  CHECK(at0.z == first.z);
  CHECK(at1.x == last.x);
  CHECK(at1.y == last.y);
  CHECK(at1.z == last.z);
}

TEST_CASE("a single point of interest gives a constant curve") {
  TrajectoryPlan plan;
  plan.pois = {poiDeg(5.0, 6.0, 7000.0, 4)};
  const ProjectedCoord p = toProjected(plan.pois[0].position);
  for (const double t : {0.0, 0.25, 0.5, 0.9, 1.0}) {
    const ProjectedCoord c = bezierCurve(plan, t);
    CHECK(c.x == doctest::Approx(p.x).epsilon(1e-15));
    CHECK(c.y == doctest::Approx(p.y).epsilon(1e-15));
    CHECK(c.z == doctest::Approx(p.z).epsilon(1e-15));
  }
}

TEST_CASE("weights are a convex combination and keep the curve in the control box") {
  TrajectoryPlan plan;
  plan.pois = {poiDeg(10.0, 20.0, 18000.0, 2), poiDeg(12.0, 24.0, 20000.0, 3),
               poiDeg(8.0, 28.0, 22000.0, 1), poiDeg(9.0, 25.0, 19000.0, 2)};
  const std::vector<ProjectedCoord> controls = projectedControls(plan, false);
  double minX = controls[0].x, maxX = controls[0].x;
  double minY = controls[0].y, maxY = controls[0].y;
  for (const ProjectedCoord& c : controls) {
    minX = std::min(minX, c.x);
    maxX = std::max(maxX, c.x);
    minY = std::min(minY, c.y);
    maxY = std::max(maxY, c.y);
  }
  for (int k = 0; k <= 50; ++k) {
    const double t = k / 50.0;
    const std::vector<double> w = bezierWeights(plan, t);
    double sum = 0.0;
    for (const double wi : w) {
      CHECK(wi >= 0.0);
      sum += wi;
    }
    CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
    const ProjectedCoord c = bezierCurve(plan, t);
    CHECK(c.x >= minX - 1e-6);
    CHECK(c.x <= maxX + 1e-6);
    CHECK(c.y >= minY - 1e-6);
    CHECK(c.y <= maxY + 1e-6);
  }
}

TEST_CASE("binomial weights are exact at high degree") {
  // 61 points, all level 1: degree 60. At t = 0.5 every weight is
  // C(60, i) / 2^60, so the center weight recovers C(60, 30) exactly.
  TrajectoryPlan plan;
  for (int i = 0; i < 61; ++i) {
    plan.pois.push_back(poiDeg(0.0, i * 0.1, 0.0));
  }
  const std::vector<double> w = bezierWeights(plan, 0.5);
  const double center = w[30] * std::exp2(60.0);
  CHECK(center == doctest::Approx(118264581564861424.0).epsilon(1e-12));
  // beyond the exact-integer range the log-gamma path must stay consistent
  TrajectoryPlan big;
  for (int i = 0; i < 71; ++i) {
    big.pois.push_back(poiDeg(0.0, i * 0.1, 0.0));
  }
  const std::vector<double> bw = bezierWeights(big, 0.37);
  double sum = 0.0;
  for (const double wi : bw) {
    sum += wi;
  }
  CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("uniform parameter sampling hits the segment midpoint") {
  TrajectoryPlan plan = equatorialSegment(20000.0, 0.0);
  plan.sampleCount = 2;
  const std::vector<ProjectedCoord> samples = sampleUniformParameter(plan);
  REQUIRE(samples.size() == 3);
  const ProjectedCoord a = toProjected(plan.pois[0].position);
  const ProjectedCoord b = toProjected(plan.pois[1].position);
  CHECK(samples[0].x == a.x);
  CHECK(samples[2].x == b.x);
  CHECK(samples[1].x == doctest::Approx(0.5 * (a.x + b.x)).epsilon(1e-15));
  CHECK(samples[1].y == doctest::Approx(a.y).epsilon(1e-15));
}

TEST_CASE("equatorial arc length matches circle geometry") {
  // Two points on the equator at the same altitude: the curve runs along a
  // circle of radius (a + h), so length = (a + h) * dlon.
  const double a = wgs84().semiMajorAxis;
  for (const double h : {0.0, 20000.0}) {
    TrajectoryPlan plan;
    plan.pois = {poiDeg(0.0, 3.0, h), poiDeg(0.0, 11.5, h)};
    const ArcLengthTable table(plan);
    const double dlon = 8.5 * kRadPerDeg;
    CHECK(table.totalLength() == doctest::Approx((a + h) * dlon).epsilon(1e-9));
  }
}

TEST_CASE("meridian arc length matches the ellipse quadrature") {
  // Points on one meridian: length = integral of (M(lat) + h) dlat with M the
  // meridian curvature radius. Simpson integration is the oracle.
  const double a = wgs84().semiMajorAxis;
  const double e2 = wgs84().eccentricitySquared();
  const double h = 20000.0;
  const double lat0 = -5.0 * kRadPerDeg;
  const double lat1 = 9.0 * kRadPerDeg;
  TrajectoryPlan plan;
  plan.pois = {poiDeg(-5.0, 30.0, h), poiDeg(9.0, 30.0, h)};
  const ArcLengthTable table(plan);

  const auto meridianRadius = [&](double lat) {
    const double s = std::sin(lat);
    return a * (1.0 - e2) / std::pow(1.0 - e2 * s * s, 1.5) + h;
  };
  const int steps = 2000;  // even
  const double dLat = (lat1 - lat0) / steps;
  double integral = meridianRadius(lat0) + meridianRadius(lat1);
  for (int i = 1; i < steps; ++i) {
    integral += meridianRadius(lat0 + i * dLat) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  integral *= dLat / 3.0;

  CHECK(table.totalLength() == doctest::Approx(integral).epsilon(5e-4));
}

TEST_CASE("curved plan duration matches derivative quadrature") {
  // Independent oracle: integrate the speed of t -> ECEF(curve(t)) with
  // central differences and Simpson's rule.
  TrajectoryPlan plan;
  plan.pois = {poiDeg(10.0, 20.0, 18000.0), poiDeg(14.0, 26.0, 20000.0),
               poiDeg(9.0, 31.0, 22000.0), poiDeg(12.0, 36.0, 19000.0)};
  plan.speedMps = 24.0;

  const auto position = [&](double t) {
    return toGeocentric(fromProjected(bezierCurve(plan, t)));
  };
  const auto speedAt = [&](double t) {
    const double step = 1e-7;
    const double lo = std::max(0.0, t - step);
    const double hi = std::min(1.0, t + step);
    const GeocentricCoord p0 = position(lo);
    const GeocentricCoord p1 = position(hi);
    return std::sqrt((p1.x - p0.x) * (p1.x - p0.x) + (p1.y - p0.y) * (p1.y - p0.y) +
                     (p1.z - p0.z) * (p1.z - p0.z)) /
           (hi - lo);
  };
  const int steps = 2000;
  const double dt = 1.0 / steps;
  double integral = speedAt(0.0) + speedAt(1.0);
  for (int i = 1; i < steps; ++i) {
    integral += speedAt(i * dt) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  integral *= dt / 3.0;

  CHECK(missionDuration(plan) == doctest::Approx(integral / plan.speedMps).epsilon(5e-3));
}

TEST_CASE("denser uniform sampling converges on the arc length") {
  TrajectoryPlan plan;
  plan.pois = {poiDeg(10.0, 20.0, 18000.0), poiDeg(14.0, 26.0, 20000.0),
               poiDeg(9.0, 31.0, 22000.0)};
  const ArcLengthTable coarse(plan, wgs84(), 1000);
  const ArcLengthTable fine(plan, wgs84(), 10000);
  CHECK(std::abs(coarse.totalLength() - fine.totalLength()) / fine.totalLength() < 1e-3);
}

TEST_CASE("raising an interest level pulls the curve toward its point") {
  TrajectoryPlan base;
  base.pois = {poiDeg(0.0, 0.0, 20000.0, 1), poiDeg(5.0, 5.0, 20000.0, 1),
               poiDeg(0.0, 10.0, 20000.0, 1)};
  const ProjectedCoord target = toProjected(base.pois[1].position);
  const auto minDistance = [&](const TrajectoryPlan& plan) {
    double best = std::numeric_limits<double>::infinity();
    for (int k = 0; k <= 400; ++k) {
      const ProjectedCoord c = bezierCurve(plan, k / 400.0);
      best = std::min(best, std::hypot(c.x - target.x, c.y - target.y));
    }
    return best;
  };
  const double d1 = minDistance(base);
  TrajectoryPlan pulled = base;
  pulled.pois[1].interestLevel = 5;
  const double d5 = minDistance(pulled);
  CHECK(d5 < d1);
}

TEST_CASE("timeline spacing is uniform at the configured speed") {
  TrajectoryPlan plan;
  plan.pois = {poiDeg(10.0, 20.0, 18000.0), poiDeg(14.0, 26.0, 20000.0),
               poiDeg(9.0, 31.0, 22000.0)};
  plan.speedMps = 24.0;
  const double step = 600.0;
  const TimedTrajectory timeline = constantSpeedTimeline(plan, step);
  REQUIRE(timeline.samples.size() > 10);
  double minSpacing = std::numeric_limits<double>::infinity();
  double maxSpacing = 0.0;
  // the final sample may close a partial interval; exclude it
  for (std::size_t i = 1; i + 1 < timeline.samples.size(); ++i) {
    const double d =
        slantDistance(timeline.samples[i - 1].position, timeline.samples[i].position);
    minSpacing = std::min(minSpacing, d);
    maxSpacing = std::max(maxSpacing, d);
  }
  CHECK(maxSpacing / minSpacing <= 1.02);
  CHECK(maxSpacing <= plan.speedMps * step * 1.01);
  CHECK(minSpacing >= plan.speedMps * step * 0.99);
  CHECK(timeline.samples[0].timeS == 0.0);
  CHECK(timeline.samples[1].timeS == step);
}

TEST_CASE("a 24 km equatorial segment at 24 m/s takes 1000 seconds") {
  TrajectoryPlan plan = equatorialSegment(24000.0, 0.0, 24.0);
  const TimedTrajectory timeline = constantSpeedTimeline(plan, 1.0);
  CHECK(timeline.totalDurationS == doctest::Approx(1000.0).epsilon(1e-9));
  CHECK(timeline.samples.size() == 1001);
  CHECK(timeline.samples.back().timeS == 1000.0);
}

TEST_CASE("doubling the speed halves the duration exactly") {
  TrajectoryPlan slow;
  slow.pois = {poiDeg(10.0, 20.0, 18000.0), poiDeg(14.0, 26.0, 20000.0)};
  slow.speedMps = 24.0;
  TrajectoryPlan fast = slow;
  fast.speedMps = 48.0;
  CHECK(missionDuration(fast) == missionDuration(slow) / 2.0);
}

TEST_CASE("altitude scaling changes a constant-altitude plan only marginally") {
  TrajectoryPlan low;
  low.pois = {poiDeg(10.0, 20.0, 20000.0), poiDeg(14.0, 26.0, 20000.0),
              poiDeg(9.0, 31.0, 20000.0)};
  TrajectoryPlan high = low;
  for (PointOfInterest& poi : high.pois) {
    poi.position.altitude *= 2.0;
  }
  const double a = missionDuration(low);
  const double b = missionDuration(high);
  CHECK(std::abs(b - a) / a < 0.01);  // only the (a + h) radius factor moves
  CHECK(b > a);                       // higher circle, slightly longer path
}

TEST_CASE("degenerate and invalid plans raise the documented errors") {
  TrajectoryPlan empty;
  CHECK_THROWS_AS(bezierWeights(empty, 0.5), EmptyPlanError);
  CHECK_THROWS_AS(missionDuration(empty), EmptyPlanError);

  TrajectoryPlan plan = equatorialSegment(24000.0, 0.0);
  CHECK_THROWS_AS(bezierWeights(plan, -0.1), DomainError);
  CHECK_THROWS_AS(bezierWeights(plan, 1.1), DomainError);

  TrajectoryPlan badLevel = plan;
  badLevel.pois[0].interestLevel = 0;
  CHECK_THROWS_AS(bezierWeights(badLevel, 0.5), DomainError);

  TrajectoryPlan stationary;
  stationary.pois = {poiDeg(5.0, 5.0, 20000.0), poiDeg(5.0, 5.0, 20000.0)};
  CHECK_THROWS_AS(constantSpeedTimeline(stationary, 1.0), DegenerateCurveError);

  CHECK_THROWS_AS(constantSpeedTimeline(plan, 0.0), NonPositiveInputError);
  CHECK_THROWS_AS(constantSpeedTimeline(plan, -1.0), NonPositiveInputError);
  TrajectoryPlan noSpeed = plan;
  noSpeed.speedMps = 0.0;
  CHECK_THROWS_AS(constantSpeedTimeline(noSpeed, 1.0), NonPositiveInputError);

  TrajectoryPlan tooFew = plan;
  tooFew.sampleCount = 1;
  CHECK_THROWS_AS(sampleUniformParameter(tooFew), DomainError);
}

TEST_CASE("trajectory csv carries time and position columns") {
  TrajectoryPlan plan = equatorialSegment(240.0, 500.0);
  const TimedTrajectory timeline = constantSpeedTimeline(plan, 5.0);
  std::ostringstream out;
  writeTrajectoryCsv(timeline, out);
  const std::string text = out.str();
  CHECK(text.rfind("time_s,lat_deg,lon_deg,alt_m\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        static_cast<long>(timeline.samples.size()) + 1);
  CHECK(text.find(",500") != std::string::npos);
}
