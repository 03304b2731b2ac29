#include <algorithm>
#include <cmath>

#include "ntnsim/kernels/kernels.hpp"

namespace ntnsim::kernels {

namespace {

void log2Scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::log2(x[i]);
  }
}

void exp2Scalar(const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp2(std::clamp(x[i], -1000.0, 1000.0));
  }
}

void fsplScalar(double frequencyGhz, const double* distanceM, double* outDb, std::size_t n) {
  const double base = 32.45 + 20.0 * std::log10(frequencyGhz);
  for (std::size_t i = 0; i < n; ++i) {
    outDb[i] = base + 20.0 * std::log10(distanceM[i]);
  }
}

void distanceScalar(const double* x, const double* y, const double* z, std::size_t n,
                    double px, double py, double pz, double* outM) {
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - px;
    const double dy = y[i] - py;
    const double dz = z[i] - pz;
    outM[i] = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
}

void capacityScalar(double bandwidthHz, const double* snrDb, double* outBps, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    outBps[i] = bandwidthHz * std::log2(1.0 + std::pow(10.0, snrDb[i] / 10.0));
  }
}

}  // namespace

const Ops& scalarOps() noexcept {
  static const Ops ops{"scalar", log2Scalar,     exp2Scalar,
                       fsplScalar, distanceScalar, capacityScalar};
  return ops;
}

}  // namespace ntnsim::kernels
