#include "cylkit/kernels.hpp"

#include <immintrin.h>

#include <algorithm>

namespace cylkit::kernels {

// _mm256_mul_epi32 multiplies the sign-extended low halves of each 64-bit lane,
// which is exact because every operand fits in 32 bits.
void axpy_avx2(std::int64_t alpha, std::span<const std::int64_t> x, std::span<std::int64_t> y) {
    const std::size_t n = std::min(x.size(), y.size());
    const __m256i va = _mm256_set1_epi64x(alpha);
    std::size_t k = 0;
    for (; k + 8 <= n; k += 8) {
        __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + k));
        __m256i x1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + k + 4));
        __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + k));
        __m256i y1 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + k + 4));
        y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(va, x0));
        y1 = _mm256_add_epi64(y1, _mm256_mul_epi32(va, x1));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + k), y0);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + k + 4), y1);
    }
    for (; k + 4 <= n; k += 4) {
        __m256i x0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x.data() + k));
        __m256i y0 = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(y.data() + k));
        y0 = _mm256_add_epi64(y0, _mm256_mul_epi32(va, x0));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(y.data() + k), y0);
    }
    for (; k < n; ++k) y[k] += alpha * x[k];
}

void conv_avx2(std::span<const std::int64_t> a, std::span<const std::int64_t> b, std::span<std::int64_t> out) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < a.size() && i < n; ++i) {
        if (a[i] == 0) continue;
        axpy_avx2(a[i], b, out.subspan(i));
    }
}

} // namespace cylkit::kernels
