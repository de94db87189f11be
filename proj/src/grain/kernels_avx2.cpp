// AVX2 variants of the batched simulator loops.  This is the only
// translation unit built with -mavx2 -mfma; the rest of the library stays on
// the baseline ISA and selects these at runtime.

#include "grain/kernels.hpp"

#if defined(GRAIN_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>
#include <cstdint>

namespace grain {
namespace kernels {

namespace {

// ---- vectorized log/exp (cephes polynomial evaluation) ----

inline __m256d poly5(__m256d x, double c0, double c1, double c2, double c3,
                     double c4, double c5) {
  __m256d r = _mm256_set1_pd(c0);
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c1));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c2));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c3));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c4));
  r = _mm256_fmadd_pd(r, x, _mm256_set1_pd(c5));
  return r;
}

// natural log for strictly positive normal inputs
inline __m256d log_pd(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d half = _mm256_set1_pd(0.5);

  // split into mantissa in [0.5,1) and exponent
  __m256i bits = _mm256_castpd_si256(x);
  __m256i expo = _mm256_srli_epi64(bits, 52);
  expo = _mm256_sub_epi64(expo, _mm256_set1_epi64x(1022));
  // replace exponent field so the mantissa lands in [0.5, 1)
  __m256i mant_bits = _mm256_or_si256(
      _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
      _mm256_set1_epi64x(0x3FE0000000000000LL));
  __m256d m = _mm256_castsi256_pd(mant_bits);

  // convert packed 64-bit exponents to doubles lane by lane
  alignas(32) std::int64_t e64[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(e64), expo);
  __m256d e = _mm256_set_pd(static_cast<double>(e64[3]),
                            static_cast<double>(e64[2]),
                            static_cast<double>(e64[1]),
                            static_cast<double>(e64[0]));

  // if m < sqrt(1/2): m = 2m, e -= 1
  const __m256d sqrth = _mm256_set1_pd(0.70710678118654752440);
  __m256d below = _mm256_cmp_pd(m, sqrth, _CMP_LT_OQ);
  m = _mm256_blendv_pd(m, _mm256_add_pd(m, m), below);
  e = _mm256_sub_pd(e, _mm256_and_pd(below, one));
  m = _mm256_sub_pd(m, one);

  __m256d z = _mm256_mul_pd(m, m);
  __m256d p = poly5(m, 1.01875663804580931796e-4, 4.97494994976747001425e-1,
                    4.70579119878881725854e0, 1.44989225341610930846e1,
                    1.79368678507819816313e1, 7.70838733755885391666e0);
  // q is monic of degree 5
  __m256d q = _mm256_add_pd(m, _mm256_set1_pd(1.12873587189167450590e1));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(4.52279145837532221105e1));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(8.29875266912776603211e1));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(7.11544750618563894466e1));
  q = _mm256_fmadd_pd(q, m, _mm256_set1_pd(2.31251620126765340583e1));

  __m256d y = _mm256_mul_pd(_mm256_mul_pd(m, z), _mm256_div_pd(p, q));
  y = _mm256_fnmadd_pd(e, _mm256_set1_pd(2.121944400546905827679e-4), y);
  y = _mm256_fnmadd_pd(half, z, y);
  y = _mm256_add_pd(y, m);
  y = _mm256_fmadd_pd(e, _mm256_set1_pd(0.693359375), y);
  return y;
}

inline __m256d exp_pd(__m256d x) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d hi = _mm256_set1_pd(709.782712893384);
  const __m256d lo = _mm256_set1_pd(-708.396418532264);
  __m256d over = _mm256_cmp_pd(x, hi, _CMP_GT_OQ);
  __m256d under = _mm256_cmp_pd(x, lo, _CMP_LT_OQ);
  x = _mm256_min_pd(_mm256_max_pd(x, lo), hi);

  __m256d n = _mm256_round_pd(
      _mm256_fmadd_pd(x, _mm256_set1_pd(1.4426950408889634), _mm256_set1_pd(0.0)),
      _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC);
  x = _mm256_fnmadd_pd(n, _mm256_set1_pd(0.693145751953125), x);
  x = _mm256_fnmadd_pd(n, _mm256_set1_pd(1.42860682030941723212e-6), x);

  __m256d xx = _mm256_mul_pd(x, x);
  __m256d px = _mm256_set1_pd(1.26177193074810590878e-4);
  px = _mm256_fmadd_pd(px, xx, _mm256_set1_pd(3.02994407707441961300e-2));
  px = _mm256_fmadd_pd(px, xx, _mm256_set1_pd(9.99999999999999999910e-1));
  px = _mm256_mul_pd(px, x);
  __m256d qx = _mm256_set1_pd(3.00198505138664455042e-6);
  qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.52448340349684104192e-3));
  qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.27265548208155028766e-1));
  qx = _mm256_fmadd_pd(qx, xx, _mm256_set1_pd(2.00000000000000000005e0));
  __m256d r = _mm256_div_pd(px, _mm256_sub_pd(qx, px));
  r = _mm256_fmadd_pd(_mm256_set1_pd(2.0), r, one);

  // scale by 2^n through the exponent field
  alignas(32) double nd[4];
  _mm256_store_pd(nd, n);
  __m256i scale = _mm256_set_epi64x(
      (static_cast<std::int64_t>(nd[3]) + 1023) << 52,
      (static_cast<std::int64_t>(nd[2]) + 1023) << 52,
      (static_cast<std::int64_t>(nd[1]) + 1023) << 52,
      (static_cast<std::int64_t>(nd[0]) + 1023) << 52);
  r = _mm256_mul_pd(r, _mm256_castsi256_pd(scale));

  r = _mm256_blendv_pd(r, _mm256_set1_pd(HUGE_VAL), over);
  r = _mm256_blendv_pd(r, _mm256_setzero_pd(), under);
  return r;
}

void pow_transform_avx2(const double* u, double* out, std::size_t n,
                        double r_min, double exponent) {
  const __m256d e = _mm256_set1_pd(exponent);
  const __m256d rm = _mm256_set1_pd(r_min);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d x = _mm256_loadu_pd(u + i);
    __m256d y = exp_pd(_mm256_mul_pd(e, log_pd(x)));
    _mm256_storeu_pd(out + i, _mm256_mul_pd(rm, y));
  }
  for (; i < n; ++i) out[i] = r_min * std::pow(u[i], exponent);
}

double overlap_area_sum_avx2(const double* u, const double* v,
                             const double* rx, const double* ry,
                             std::size_t n, double X, double Y) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d vx = _mm256_set1_pd(X);
  const __m256d vy = _mm256_set1_pd(Y);
  __m256d acc = zero;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d uu = _mm256_loadu_pd(u + i);
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d ox = _mm256_sub_pd(
        _mm256_min_pd(_mm256_add_pd(uu, _mm256_loadu_pd(rx + i)), vx),
        _mm256_max_pd(uu, zero));
    __m256d oy = _mm256_sub_pd(
        _mm256_min_pd(_mm256_add_pd(vv, _mm256_loadu_pd(ry + i)), vy),
        _mm256_max_pd(vv, zero));
    __m256d mask = _mm256_and_pd(_mm256_cmp_pd(ox, zero, _CMP_GT_OQ),
                                 _mm256_cmp_pd(oy, zero, _CMP_GT_OQ));
    acc = _mm256_add_pd(acc,
                        _mm256_and_pd(mask, _mm256_mul_pd(ox, oy)));
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, acc);
  double total = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
  for (; i < n; ++i) {
    double ox = std::min(u[i] + rx[i], X) - std::max(u[i], 0.0);
    double oy = std::min(v[i] + ry[i], Y) - std::max(v[i], 0.0);
    if (ox > 0.0 && oy > 0.0) total += ox * oy;
  }
  return total;
}

std::size_t cover_count_avx2(const double* u, const double* v,
                             const double* rx, const double* ry,
                             std::size_t n, double x, double y) {
  const __m256d px = _mm256_set1_pd(x);
  const __m256d py = _mm256_set1_pd(y);
  std::size_t count = 0;
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d uu = _mm256_loadu_pd(u + i);
    __m256d vv = _mm256_loadu_pd(v + i);
    __m256d inx = _mm256_and_pd(
        _mm256_cmp_pd(px, uu, _CMP_GT_OQ),
        _mm256_cmp_pd(px, _mm256_add_pd(uu, _mm256_loadu_pd(rx + i)),
                      _CMP_LE_OQ));
    __m256d iny = _mm256_and_pd(
        _mm256_cmp_pd(py, vv, _CMP_GT_OQ),
        _mm256_cmp_pd(py, _mm256_add_pd(vv, _mm256_loadu_pd(ry + i)),
                      _CMP_LE_OQ));
    count += static_cast<std::size_t>(
        _mm_popcnt_u32(_mm256_movemask_pd(_mm256_and_pd(inx, iny))));
  }
  for (; i < n; ++i) {
    bool inx = x > u[i] && x <= u[i] + rx[i];
    bool iny = y > v[i] && y <= v[i] + ry[i];
    count += (inx && iny) ? 1 : 0;
  }
  return count;
}

const Ops avx2{"avx2", pow_transform_avx2, overlap_area_sum_avx2,
               cover_count_avx2};

}  // namespace

const Ops* avx2_ops() {
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2 : nullptr;
}

}  // namespace kernels
}  // namespace grain

#else  // !GRAIN_HAVE_AVX2_TU

namespace grain {
namespace kernels {

const Ops* avx2_ops() { return nullptr; }

}  // namespace kernels
}  // namespace grain

#endif
