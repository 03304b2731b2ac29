#pragma once

#include <cstddef>

namespace ntnsim::kernels {

/// One implementation of the batch math used by the mission loop.
///
/// Every function processes n elements; output arrays may alias their own
/// input array but not a different one. Domains are deliberately narrow --
/// these are link-budget kernels, not general math replacements:
///   log2Array:  x must be positive, finite, and normal
///   exp2Array:  x is clamped into [-1000, 1000] before evaluation
/// Both lanes (scalar and SIMD) implement the same clamping so they agree
/// on every input.
struct Ops {
  const char* name;
  void (*log2Array)(const double* x, double* out, std::size_t n);
  void (*exp2Array)(const double* x, double* out, std::size_t n);
  /// 32.45 + 20 log10(frequencyGhz) + 20 log10(distanceM[i]).
  void (*freeSpacePathLossArray)(double frequencyGhz, const double* distanceM,
                                 double* outDb, std::size_t n);
  /// Euclidean distance from (x[i], y[i], z[i]) to the fixed point (px, py, pz).
  void (*distanceToPointArray)(const double* x, const double* y, const double* z,
                               std::size_t n, double px, double py, double pz,
                               double* outM);
  /// bandwidthHz * log2(1 + 10^(snrDb[i] / 10)).
  void (*shannonCapacityArray)(double bandwidthHz, const double* snrDb,
                               double* outBps, std::size_t n);
};

/// Portable reference lane. Always available; the SIMD lanes are tested
/// for agreement against it.
const Ops& scalarOps() noexcept;

/// True when an AVX2+FMA lane is compiled in and the CPU supports it.
bool avx2Available() noexcept;

/// The AVX2 lane, or nullptr when unavailable.
const Ops* avx2Ops() noexcept;

/// Lane used by the simulation: the widest available one, unless the
/// environment variable NTNSIM_KERNEL ("scalar" or "avx2") overrides the
/// choice. An unsatisfiable override falls back with a warning on stderr.
const Ops& activeOps();

namespace detail {
const Ops& avx2OpsImpl();  // defined only in the AVX2 translation unit
}

}  // namespace ntnsim::kernels
