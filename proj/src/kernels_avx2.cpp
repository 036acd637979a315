#if defined(__x86_64__) || defined(_M_X64)

#include "qsg/kernels.hpp"

#include <immintrin.h>

// AVX2 backend. Accumulation layout mirrors the scalar reference exactly
// (see kernels.hpp), so every entry point returns bit-identical values.

namespace qsg::kernels {

namespace {

double dot_avx2(const double* a, const double* b, std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc = _mm256_fmadd_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i), acc);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, acc);
    double sum = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (std::size_t i = n4; i < n; ++i) sum = __builtin_fma(a[i], b[i], sum);
    return sum;
}

void axpy_avx2(double a, const double* x, double* y, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        __m256d vy = _mm256_fmadd_pd(va, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, vy);
    }
    for (std::size_t i = n4; i < n; ++i) y[i] = __builtin_fma(a, x[i], y[i]);
}

void scal_avx2(double a, double* x, std::size_t n) {
    const __m256d va = _mm256_set1_pd(a);
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(x + i, _mm256_mul_pd(va, _mm256_loadu_pd(x + i)));
    }
    for (std::size_t i = n4; i < n; ++i) x[i] *= a;
}

void mul_avx2(const double* a, const double* b, double* out, std::size_t n) {
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        _mm256_storeu_pd(out + i, _mm256_mul_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
    }
    for (std::size_t i = n4; i < n; ++i) out[i] = a[i] * b[i];
}

// Sums 32 lanes of {0,2} bytes into four u64 buckets via SAD.
inline __m256i sad_accumulate(__m256i acc, __m256i bytes01) {
    return _mm256_add_epi64(acc, _mm256_sad_epu8(bytes01, _mm256_setzero_si256()));
}

int64_t sum_pm1_avx2(const int8_t* s, std::size_t n) {
    const __m256i one = _mm256_set1_epi8(1);
    __m256i acc = _mm256_setzero_si256();
    std::size_t n32 = n & ~std::size_t(31);
    for (std::size_t i = 0; i < n32; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(s + i));
        acc = sad_accumulate(acc, _mm256_add_epi8(v, one));  // maps -1,+1 -> 0,2
    }
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3] - int64_t(n32);
    for (std::size_t i = n32; i < n; ++i) sum += s[i];
    return sum;
}

int64_t dot_pm1_avx2(const int8_t* a, const int8_t* b, std::size_t n) {
    const __m256i one = _mm256_set1_epi8(1);
    __m256i acc = _mm256_setzero_si256();
    std::size_t n32 = n & ~std::size_t(31);
    for (std::size_t i = 0; i < n32; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i prod = _mm256_sign_epi8(va, vb);  // a*b for +-1 entries
        acc = sad_accumulate(acc, _mm256_add_epi8(prod, one));
    }
    alignas(32) int64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    int64_t sum = lanes[0] + lanes[1] + lanes[2] + lanes[3] - int64_t(n32);
    for (std::size_t i = n32; i < n; ++i) sum += int64_t(a[i]) * int64_t(b[i]);
    return sum;
}

}  // namespace

const Backend& avx2_backend() {
    static const Backend b{"avx2",       dot_avx2,     axpy_avx2, scal_avx2,
                           mul_avx2,     sum_pm1_avx2, dot_pm1_avx2};
    return b;
}

}  // namespace qsg::kernels

#endif
