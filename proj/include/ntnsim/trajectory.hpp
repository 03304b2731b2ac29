#pragma once

#include <iosfwd>
#include <vector>

#include "ntnsim/geodesy.hpp"

namespace ntnsim {

/// A waypoint the trajectory is attracted to. Raising interestLevel pulls
/// the curve closer to the point by repeating its control point.
struct PointOfInterest {
  GeographicCoord position;
  int interestLevel = 1;
};

struct TrajectoryPlan {
  std::vector<PointOfInterest> pois;
  int sampleCount = 1000;  // K: number of uniform-parameter time slots
  double speedMps = 24.0;
};

struct TimedSample {
  double timeS = 0.0;
  GeographicCoord position;
};

struct TimedTrajectory {
  std::vector<TimedSample> samples;
  double totalDurationS = 0.0;
};

/// Curve degree: (sum of interest levels) - 1.
int totalDegree(const TrajectoryPlan& plan);

/// Control-point weights at parameter t. Weight i is the sum of the
/// Bernstein polynomials of degree totalDegree whose indices fall in the
/// block of point i, i.e. the curve equals a plain Bezier curve whose
/// control points repeat each PoI interestLevel times. Binomials use exact
/// integer arithmetic up to degree 60 and log-gamma beyond.
std::vector<double> bezierWeights(const TrajectoryPlan& plan, double t);

/// Evaluate the trajectory curve at parameter t in [0, 1], in the projected
/// frame. Endpoints interpolate the first and last PoI exactly.
ProjectedCoord bezierCurve(const TrajectoryPlan& plan, double t,
                           const Ellipsoid& e = wgs84());

/// The K+1 curve points at t = k/K for k = 0..K, K = plan.sampleCount.
std::vector<ProjectedCoord> sampleUniformParameter(const TrajectoryPlan& plan,
                                                   const Ellipsoid& e = wgs84());

/// Cumulative arc length of the curve, measured in true meters: the curve
/// is sampled densely at uniform parameter, each knot is mapped back to a
/// geographic position, and segment lengths are geocentric chords. Lookup
/// interpolates linearly between knots, so positions are accurate to the
/// knot spacing (~200 m of arc for the packaged mission) while distances
/// accumulate to much better than 0.1%.
class ArcLengthTable {
 public:
  static constexpr int kDefaultKnots = 100000;

  explicit ArcLengthTable(const TrajectoryPlan& plan, const Ellipsoid& e = wgs84(),
                          int knots = kDefaultKnots);

  double totalLength() const { return cumulative_.back(); }

  /// Position at arc length s from the start; s is clamped into [0, total].
  ProjectedCoord positionAtArc(double s) const;

 private:
  std::vector<ProjectedCoord> points_;
  std::vector<double> cumulative_;
};

/// Reparameterize the curve to constant speed and emit one sample per
/// timeStep, including t = 0. totalDuration = arcLength / speed. Throws
/// DegenerateCurveError when the curve is stationary (arc length under
/// a centimeter).
TimedTrajectory constantSpeedTimeline(const TrajectoryPlan& plan, double timeStepS,
                                      const Ellipsoid& e = wgs84());

/// Arc length divided by speed; 0 for a stationary curve.
double missionDuration(const TrajectoryPlan& plan, const Ellipsoid& e = wgs84());

/// Write samples as CSV with header time_s,lat_deg,lon_deg,alt_m.
void writeTrajectoryCsv(const TimedTrajectory& trajectory, std::ostream& out);

}  // namespace ntnsim
