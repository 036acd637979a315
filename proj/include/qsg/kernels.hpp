#pragma once

#include <cstddef>
#include <cstdint>
#include <cmath>
#include <string_view>

// Inner-loop kernels with a scalar reference implementation and an AVX2
// variant selected at runtime. Both backends use the same 4-lane
// accumulation layout (lane L sums elements i % 4 == L, reduced as
// (l0+l1)+(l2+l3), scalar tail appended last) so results are bit-identical
// across backends and hosts. The integer spin kernels are exact in any
// order. Backend override: QSG_KERNELS=scalar|avx2 or select().

namespace qsg::kernels {

struct Backend {
    const char* name;
    double (*dot)(const double*, const double*, std::size_t);
    void (*axpy)(double, const double*, double*, std::size_t);  // y += a*x
    void (*scal)(double, double*, std::size_t);
    void (*mul)(const double*, const double*, double*, std::size_t);  // out = a.*b
    int64_t (*sum_pm1)(const int8_t*, std::size_t);                   // spins are +-1
    int64_t (*dot_pm1)(const int8_t*, const int8_t*, std::size_t);
};

const Backend& scalar_backend();
bool avx2_available();
#if defined(__x86_64__) || defined(_M_X64)
const Backend& avx2_backend();
#endif

// Active backend: env override, else AVX2 when the CPU has it.
const Backend& active();
bool select(std::string_view name);

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void scal(double a, double* x, std::size_t n) { active().scal(a, x, n); }
inline void mul(const double* a, const double* b, double* out, std::size_t n) { active().mul(a, b, out, n); }
inline int64_t sum_pm1(const int8_t* s, std::size_t n) { return active().sum_pm1(s, n); }
inline int64_t dot_pm1(const int8_t* a, const int8_t* b, std::size_t n) { return active().dot_pm1(a, b, n); }

inline double nrm2(const double* a, std::size_t n) { return std::sqrt(dot(a, a, n)); }

}  // namespace qsg::kernels
