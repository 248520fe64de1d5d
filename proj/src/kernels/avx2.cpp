#include <immintrin.h>

#include "mgw/kernels.hpp"

namespace mgw::kernels::avx2 {

std::size_t common_prefix(const std::int16_t* a, const std::int16_t* b, std::size_t n) {
  std::size_t i = 0;
  // Most calls mismatch within the first few letters; check them before
  // paying for a vector load.
  const std::size_t head = n < 4 ? n : 4;
  for (; i < head; ++i) {
    if (a[i] != b[i]) return i;
  }
  for (; i + 16 <= n; i += 16) {
    const __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    const auto eq = static_cast<unsigned>(_mm256_movemask_epi8(_mm256_cmpeq_epi16(va, vb)));
    if (eq != 0xFFFFFFFFu) {
      // Two mask bits per 16-bit lane.
      return i + static_cast<std::size_t>(__builtin_ctz(~eq)) / 2;
    }
  }
  for (; i < n; ++i) {
    if (a[i] != b[i]) return i;
  }
  return n;
}

bool all_within(const std::int32_t* row, const std::int32_t* idx, const std::int32_t* bound,
                std::size_t n) {
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    const __m256i vi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(idx + i));
    const __m256i vd = _mm256_i32gather_epi32(reinterpret_cast<const int*>(row), vi, 4);
    const __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bound + i));
    if (!_mm256_testz_si256(_mm256_cmpgt_epi32(vd, vb), _mm256_set1_epi32(-1))) return false;
  }
  for (; i < n; ++i) {
    if (row[idx[i]] > bound[i]) return false;
  }
  return true;
}

}  // namespace mgw::kernels::avx2
