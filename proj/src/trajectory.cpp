#include "ntnsim/trajectory.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "ntnsim/error.hpp"

namespace ntnsim {

namespace {

// Below this arc length a plan is treated as stationary. Evaluating a
// constant curve leaves sub-ulp wobble in every knot, and those phantom
// chords can sum to a fraction of a millimeter across the table, so an
// exact zero test would misclassify a hovering platform. Real plans cover
// meters; anything under a centimeter is a hover.
constexpr double kDegenerateArcLengthM = 0.01;

void validatePlan(const TrajectoryPlan& plan) {
  if (plan.pois.empty()) {
    throw EmptyPlanError("trajectory plan has no points of interest");
  }
  for (const PointOfInterest& poi : plan.pois) {
    if (poi.interestLevel < 1) {
      throw DomainError("interest level must be at least 1");
    }
  }
}

// C(n, k) exactly; intermediate products stay integral and fit 64 bits
// for n <= 60 (C(60, 30) < 2^63).
double exactBinomial(int n, int k) {
  if (k > n - k) {
    k = n - k;
  }
  unsigned long long c = 1;
  for (int i = 1; i <= k; ++i) {
    c = c / i * (n - k + i) + c % i * (n - k + i) / i;
  }
  return static_cast<double>(c);
}

// Bernstein basis value B(degree, index, t) for t strictly inside (0, 1).
double bernstein(int degree, int index, double t) {
  if (degree <= 60) {
    return exactBinomial(degree, index) * std::pow(1.0 - t, degree - index) *
           std::pow(t, index);
  }
  const double logC = std::lgamma(degree + 1.0) - std::lgamma(index + 1.0) -
                      std::lgamma(degree - index + 1.0);
  return std::exp(logC + (degree - index) * std::log1p(-t) + index * std::log(t));
}

}  // namespace

int totalDegree(const TrajectoryPlan& plan) {
  validatePlan(plan);
  int sum = 0;
  for (const PointOfInterest& poi : plan.pois) {
    sum += poi.interestLevel;
  }
  return sum - 1;
}

std::vector<double> bezierWeights(const TrajectoryPlan& plan, double t) {
  validatePlan(plan);
  if (!(t >= 0.0 && t <= 1.0)) {
    throw DomainError("curve parameter outside [0, 1]");
  }
  const std::size_t n = plan.pois.size();
  std::vector<double> weights(n, 0.0);
  if (t == 0.0) {
    weights.front() = 1.0;
    return weights;
  }
  if (t == 1.0) {
    weights.back() = 1.0;
    return weights;
  }
  const int degree = totalDegree(plan);
  int offset = 0;  // first Bernstein index of the current point's block
  for (std::size_t i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < plan.pois[i].interestLevel; ++j) {
      sum += bernstein(degree, offset + j, t);
    }
    weights[i] = sum;
    offset += plan.pois[i].interestLevel;
  }
  return weights;
}

ProjectedCoord bezierCurve(const TrajectoryPlan& plan, double t, const Ellipsoid& e) {
  const std::vector<double> weights = bezierWeights(plan, t);
  ProjectedCoord result;
  for (std::size_t i = 0; i < plan.pois.size(); ++i) {
    const ProjectedCoord p = toProjected(plan.pois[i].position, e);
    result.x += weights[i] * p.x;
    result.y += weights[i] * p.y;
    result.z += weights[i] * p.z;
  }
  return result;
}

std::vector<ProjectedCoord> sampleUniformParameter(const TrajectoryPlan& plan,
                                                   const Ellipsoid& e) {
  validatePlan(plan);
  if (plan.sampleCount < 2) {
    throw DomainError("sample count must be at least 2");
  }
  const int k = plan.sampleCount;
  std::vector<ProjectedCoord> samples;
  samples.reserve(k + 1);
  for (int i = 0; i <= k; ++i) {
    samples.push_back(bezierCurve(plan, static_cast<double>(i) / k, e));
  }
  return samples;
}

ArcLengthTable::ArcLengthTable(const TrajectoryPlan& plan, const Ellipsoid& e, int knots) {
  validatePlan(plan);
  if (knots < 2) {
    throw DomainError("arc-length table needs at least 2 knots");
  }
  // Project the control points once; the weight loop is the hot path here.
  std::vector<ProjectedCoord> control;
  control.reserve(plan.pois.size());
  for (const PointOfInterest& poi : plan.pois) {
    control.push_back(toProjected(poi.position, e));
  }
  points_.reserve(knots + 1);
  cumulative_.reserve(knots + 1);
  GeographicCoord previous;
  // Compensated summation: across 1e5 segments a naive sum drifts enough
  // to flip sample counts when a mission duration lands on a step multiple.
  double sum = 0.0;
  double carry = 0.0;
  for (int i = 0; i <= knots; ++i) {
    const double t = static_cast<double>(i) / knots;
    const std::vector<double> weights = bezierWeights(plan, t);
    ProjectedCoord p;
    for (std::size_t j = 0; j < control.size(); ++j) {
      p.x += weights[j] * control[j].x;
      p.y += weights[j] * control[j].y;
      p.z += weights[j] * control[j].z;
    }
    points_.push_back(p);
    const GeographicCoord geo = fromProjected(p, e);
    if (i == 0) {
      cumulative_.push_back(0.0);
    } else {
      const double term = slantDistance(previous, geo, e) - carry;
      const double next = sum + term;
      carry = (next - sum) - term;
      sum = next;
      cumulative_.push_back(sum);
    }
    previous = geo;
  }
}

ProjectedCoord ArcLengthTable::positionAtArc(double s) const {
  s = std::clamp(s, 0.0, cumulative_.back());
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), s);
  if (it == cumulative_.begin()) {
    return points_.front();
  }
  if (it == cumulative_.end()) {
    return points_.back();
  }
  const std::size_t hi = static_cast<std::size_t>(it - cumulative_.begin());
  const std::size_t lo = hi - 1;
  const double span = cumulative_[hi] - cumulative_[lo];
  const double f = span > 0.0 ? (s - cumulative_[lo]) / span : 0.0;
  return {points_[lo].x + f * (points_[hi].x - points_[lo].x),
          points_[lo].y + f * (points_[hi].y - points_[lo].y),
          points_[lo].z + f * (points_[hi].z - points_[lo].z)};
}

TimedTrajectory constantSpeedTimeline(const TrajectoryPlan& plan, double timeStepS,
                                      const Ellipsoid& e) {
  if (timeStepS <= 0.0) {
    throw NonPositiveInputError("time step must be positive");
  }
  if (plan.speedMps <= 0.0) {
    throw NonPositiveInputError("speed must be positive");
  }
  const ArcLengthTable table(plan, e);
  const double length = table.totalLength();
  if (length < kDegenerateArcLengthM) {
    throw DegenerateCurveError("trajectory has zero arc length");
  }
  TimedTrajectory trajectory;
  trajectory.totalDurationS = length / plan.speedMps;
  // The arc length carries noise from rounding each knot coordinate, which
  // puts the duration up to ~1e-8 steps shy of an exact multiple. The
  // epsilon absorbs that so the trailing sample is not dropped; it can only
  // add a sample when the duration sits within a microsecond-scale sliver
  // of a multiple, where the clamped end position makes the row harmless.
  const double slots = trajectory.totalDurationS / timeStepS;
  const std::size_t count = static_cast<std::size_t>(slots + 1e-6) + 1;
  trajectory.samples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double time = static_cast<double>(i) * timeStepS;
    const ProjectedCoord p = table.positionAtArc(plan.speedMps * time);
    trajectory.samples.push_back({time, fromProjected(p, e)});
  }
  return trajectory;
}

double missionDuration(const TrajectoryPlan& plan, const Ellipsoid& e) {
  if (plan.speedMps <= 0.0) {
    throw NonPositiveInputError("speed must be positive");
  }
  const ArcLengthTable table(plan, e);
  const double length = table.totalLength();
  return length < kDegenerateArcLengthM ? 0.0 : length / plan.speedMps;
}

void writeTrajectoryCsv(const TimedTrajectory& trajectory, std::ostream& out) {
  out << "time_s,lat_deg,lon_deg,alt_m\n";
  char line[128];
  for (const TimedSample& sample : trajectory.samples) {
    std::snprintf(line, sizeof line, "%.17g,%.17g,%.17g,%.17g\n", sample.timeS,
                  sample.position.latitude * kDegPerRad,
                  sample.position.longitude * kDegPerRad, sample.position.altitude);
    out << line;
  }
}

}  // namespace ntnsim
