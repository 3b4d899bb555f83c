#include <immintrin.h>

#include "monoalg/kernels/kernels.hpp"

namespace monoalg::kernels::avx2 {

bool available() { return __builtin_cpu_supports("avx2"); }

std::size_t first_dominated(std::span<const std::int64_t> rows, std::size_t width,
                            std::span<const std::int64_t> point) {
  if (width == 0) return 0;
  const std::size_t count = rows.size() / width;
  const std::size_t body = width & ~std::size_t{3};
  for (std::size_t r = 0; r < count; ++r) {
    const std::int64_t* row = rows.data() + r * width;
    bool dominated = true;
    std::size_t c = 0;
    for (; c < body; c += 4) {
      const __m256i g = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + c));
      const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(point.data() + c));
      if (!_mm256_testz_si256(_mm256_cmpgt_epi64(g, x), _mm256_cmpgt_epi64(g, x))) {
        dominated = false;
        break;
      }
    }
    for (; dominated && c < width; ++c) dominated = row[c] <= point[c];
    if (dominated) return r;
  }
  return count;
}

// Four lanes per step through doubles: dst + factor*src < p + p^2 stays exact
// below 2^53, and the floor(v/p) estimate is corrected by at most one step.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
              std::uint32_t factor, std::uint32_t p) {
  if (p >= (1u << 26)) {
    scalar::axpy_mod(dst, src, factor, p);
    return;
  }
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d inv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vf = _mm256_set1_pd(static_cast<double>(factor));
  const __m256d zero = _mm256_setzero_pd();
  const std::size_t n = dst.size();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m128i d32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst.data() + i));
    const __m128i s32 = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src.data() + i));
    const __m256d v = _mm256_add_pd(_mm256_cvtepi32_pd(d32),
                                    _mm256_mul_pd(vf, _mm256_cvtepi32_pd(s32)));
    const __m256d q = _mm256_floor_pd(_mm256_mul_pd(v, inv));
    __m256d r = _mm256_sub_pd(v, _mm256_mul_pd(q, vp));
    r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
    r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst.data() + i), _mm256_cvttpd_epi32(r));
  }
  scalar::axpy_mod(dst.subspan(i), src.subspan(i), factor, p);
}

}  // namespace monoalg::kernels::avx2
