#include "ydhopf/kernels.hpp"

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define YDHOPF_AVX2 __attribute__((target("avx2,fma")))
#endif

namespace ydhopf::kernels::avx2 {

#ifdef YDHOPF_AVX2

namespace {

// Lanes hold integers below 2^26, so a*x < 2^52 is exact in a double and the
// fused multiply-subtract recovers the remainder exactly; the estimated quotient
// is off by at most one in either direction.
YDHOPF_AVX2 inline __m256d mod_reduce(__m256d v, __m256d pd, __m256d pinv) {
  __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, pinv));
  __m256d r = _mm256_fnmadd_pd(q, pd, v);
  __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), pd));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, pd, _CMP_GE_OQ), pd));
  return r;
}

YDHOPF_AVX2 inline __m256d load4(const std::uint32_t* p) {
  return _mm256_cvtepi32_pd(_mm_loadu_si128(reinterpret_cast<const __m128i*>(p)));
}

YDHOPF_AVX2 inline void store4(std::uint32_t* p, __m256d v) {
  _mm_storeu_si128(reinterpret_cast<__m128i*>(p), _mm256_cvttpd_epi32(v));
}

}  // namespace

YDHOPF_AVX2 void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n,
                          std::uint32_t a, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d ad = _mm256_set1_pd(static_cast<double>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    __m256d r = mod_reduce(_mm256_mul_pd(ad, load4(x + i)), pd, pinv);
    __m256d s = _mm256_add_pd(r, load4(y + i));
    s = _mm256_sub_pd(s, _mm256_and_pd(_mm256_cmp_pd(s, pd, _CMP_GE_OQ), pd));
    store4(y + i, s);
  }
  scalar::axpy_mod(y + i, x + i, n - i, a, p);
}

YDHOPF_AVX2 void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
  const __m256d pd = _mm256_set1_pd(static_cast<double>(p));
  const __m256d pinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d ad = _mm256_set1_pd(static_cast<double>(a));
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) store4(y + i, mod_reduce(_mm256_mul_pd(ad, load4(y + i)), pd, pinv));
  scalar::scale_mod(y + i, n - i, a, p);
}

#else

void axpy_mod(std::uint32_t* y, const std::uint32_t* x, std::size_t n, std::uint32_t a,
              std::uint32_t p) {
  scalar::axpy_mod(y, x, n, a, p);
}

void scale_mod(std::uint32_t* y, std::size_t n, std::uint32_t a, std::uint32_t p) {
  scalar::scale_mod(y, n, a, p);
}

#endif

}  // namespace ydhopf::kernels::avx2
