// AVX2+FMA lane. Compiled with -mavx2 -mfma in its own translation unit;
// nothing here runs unless the dispatcher verified CPU support first.

#include "ntnsim/kernels/kernels.hpp"

#if defined(NTNSIM_HAVE_AVX2)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace ntnsim::kernels {

namespace {

// log2 of the reduced mantissa via the atanh series:
//   log2(m) = r * sum K_j r^(2j),  r = (m-1)/(m+1),  K_j = (2/ln2)/(2j+1).
// With m in [sqrt(2)/2, sqrt(2)], |r| <= 0.1716 and the r^19 truncation
// error is below 1e-17.
constexpr double kLog2K[10] = {
    2.8853900817779268,  0.96179669392597555, 0.57707801635558531,
    0.41219858311113239, 0.3205988979753252,  0.26230818925253879,
    0.22195308321368667, 0.19235933878519512, 0.16972882833987804,
    0.15186263588304877};

// exp2 on [-0.5, 0.5] via the Taylor series of 2^f = e^(f ln2);
// c_k = ln2^k / k!, truncated after k = 13 (error < 5e-18).
constexpr double kExp2C[14] = {
    1.0,
    0.69314718055994529,
    0.24022650695910069,
    0.055504108664821576,
    0.0096181291076284769,
    0.0013333558146428441,
    0.00015403530393381606,
    1.5252733804059838e-05,
    1.3215486790144305e-06,
    1.0178086009239696e-07,
    7.0549116208011209e-09,
    4.4455382718708101e-10,
    2.5678435993488196e-11,
    1.3691488853904124e-12};

const __m256i kMantissaMask = _mm256_set1_epi64x(0x000FFFFFFFFFFFFFll);
const __m256i kOneBits = _mm256_set1_epi64x(0x3FF0000000000000ll);
// 1.5 * 2^52: adding it parks any integer in (-2^51, 2^51) inside the
// [2^52, 2^53) binade, where bit pattern and integer value differ by a
// constant. That makes the conversions exact for negative values too.
const __m256i kMagicBits = _mm256_set1_epi64x(0x4338000000000000ll);

inline __m256d smallInt64ToDouble(__m256i v) {
  return _mm256_sub_pd(_mm256_castsi256_pd(_mm256_add_epi64(v, kMagicBits)),
                       _mm256_castsi256_pd(kMagicBits));
}

inline __m256i doubleToSmallInt64(__m256d v) {
  return _mm256_sub_epi64(
      _mm256_castpd_si256(_mm256_add_pd(v, _mm256_castsi256_pd(kMagicBits))),
      kMagicBits);
}

inline __m256d log2Vec(__m256d x) {
  const __m256i bits = _mm256_castpd_si256(x);
  // Biased exponent as a double.
  const __m256i expRaw = _mm256_srli_epi64(bits, 52);
  __m256d e = _mm256_sub_pd(smallInt64ToDouble(expRaw), _mm256_set1_pd(1023.0));
  // Mantissa remapped into [1, 2), then folded into [sqrt2/2, sqrt2].
  __m256d m = _mm256_castsi256_pd(
      _mm256_or_si256(_mm256_and_si256(bits, kMantissaMask), kOneBits));
  const __m256d sqrt2 = _mm256_set1_pd(1.4142135623730951);
  const __m256d fold = _mm256_cmp_pd(m, sqrt2, _CMP_GT_OQ);
  m = _mm256_blendv_pd(m, _mm256_mul_pd(m, _mm256_set1_pd(0.5)), fold);
  e = _mm256_add_pd(e, _mm256_and_pd(fold, _mm256_set1_pd(1.0)));

  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d r = _mm256_div_pd(_mm256_sub_pd(m, one), _mm256_add_pd(m, one));
  const __m256d s = _mm256_mul_pd(r, r);
  __m256d poly = _mm256_set1_pd(kLog2K[9]);
  for (int j = 8; j >= 0; --j) {
    poly = _mm256_fmadd_pd(poly, s, _mm256_set1_pd(kLog2K[j]));
  }
  return _mm256_fmadd_pd(r, poly, e);
}

inline __m256d exp2Vec(__m256d x) {
  x = _mm256_max_pd(_mm256_set1_pd(-1000.0), _mm256_min_pd(x, _mm256_set1_pd(1000.0)));
  const __m256d n = _mm256_round_pd(x, _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  const __m256d f = _mm256_sub_pd(x, n);  // in [-0.5, 0.5]
  __m256d poly = _mm256_set1_pd(kExp2C[13]);
  for (int k = 12; k >= 0; --k) {
    poly = _mm256_fmadd_pd(poly, f, _mm256_set1_pd(kExp2C[k]));
  }
  // Assemble 2^n from the exponent bits; |n| <= 1000 keeps it normal.
  const __m256i ni = doubleToSmallInt64(n);
  const __m256i scaleBits =
      _mm256_slli_epi64(_mm256_add_epi64(ni, _mm256_set1_epi64x(1023)), 52);
  return _mm256_mul_pd(poly, _mm256_castsi256_pd(scaleBits));
}

void log2Avx2(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, log2Vec(_mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) {
    out[i] = std::log2(x[i]);
  }
}

void exp2Avx2(const double* x, double* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    _mm256_storeu_pd(out + i, exp2Vec(_mm256_loadu_pd(x + i)));
  }
  for (; i < n; ++i) {
    out[i] = std::exp2(x[i] < -1000.0 ? -1000.0 : (x[i] > 1000.0 ? 1000.0 : x[i]));
  }
}

void fsplAvx2(double frequencyGhz, const double* distanceM, double* outDb, std::size_t n) {
  const double base = 32.45 + 20.0 * std::log10(frequencyGhz);
  const __m256d baseV = _mm256_set1_pd(base);
  const __m256d dbPerOctave = _mm256_set1_pd(6.0205999132796242);  // 20 log10(2)
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_loadu_pd(distanceM + i);
    _mm256_storeu_pd(outDb + i, _mm256_fmadd_pd(dbPerOctave, log2Vec(d), baseV));
  }
  for (; i < n; ++i) {
    outDb[i] = base + 20.0 * std::log10(distanceM[i]);
  }
}

void distanceAvx2(const double* x, const double* y, const double* z, std::size_t n,
                  double px, double py, double pz, double* outM) {
  const __m256d pxv = _mm256_set1_pd(px);
  const __m256d pyv = _mm256_set1_pd(py);
  const __m256d pzv = _mm256_set1_pd(pz);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(x + i), pxv);
    const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(y + i), pyv);
    const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(z + i), pzv);
    __m256d sq = _mm256_mul_pd(dx, dx);
    sq = _mm256_fmadd_pd(dy, dy, sq);
    sq = _mm256_fmadd_pd(dz, dz, sq);
    _mm256_storeu_pd(outM + i, _mm256_sqrt_pd(sq));
  }
  for (; i < n; ++i) {
    const double dx = x[i] - px;
    const double dy = y[i] - py;
    const double dz = z[i] - pz;
    outM[i] = std::sqrt(dx * dx + dy * dy + dz * dz);
  }
}

void capacityAvx2(double bandwidthHz, const double* snrDb, double* outBps, std::size_t n) {
  const __m256d bw = _mm256_set1_pd(bandwidthHz);
  const __m256d toLog2 = _mm256_set1_pd(0.3321928094887362);  // log2(10)/10
  const __m256d one = _mm256_set1_pd(1.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d snr = _mm256_loadu_pd(snrDb + i);
    const __m256d linear = exp2Vec(_mm256_mul_pd(snr, toLog2));
    _mm256_storeu_pd(outBps + i,
                     _mm256_mul_pd(bw, log2Vec(_mm256_add_pd(one, linear))));
  }
  for (; i < n; ++i) {
    outBps[i] = bandwidthHz * std::log2(1.0 + std::pow(10.0, snrDb[i] / 10.0));
  }
}

}  // namespace

namespace detail {

const Ops& avx2OpsImpl() {
  static const Ops ops{"avx2",   log2Avx2,     exp2Avx2,
                       fsplAvx2, distanceAvx2, capacityAvx2};
  return ops;
}

}  // namespace detail

}  // namespace ntnsim::kernels

#endif  // NTNSIM_HAVE_AVX2
