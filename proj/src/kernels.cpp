#include "qsg/kernels.hpp"

#include <cstdlib>
#include <cstring>
#include <string>

namespace qsg::kernels {

namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
    double acc0 = 0, acc1 = 0, acc2 = 0, acc3 = 0;
    std::size_t n4 = n & ~std::size_t(3);
    for (std::size_t i = 0; i < n4; i += 4) {
        acc0 = std::fma(a[i + 0], b[i + 0], acc0);
        acc1 = std::fma(a[i + 1], b[i + 1], acc1);
        acc2 = std::fma(a[i + 2], b[i + 2], acc2);
        acc3 = std::fma(a[i + 3], b[i + 3], acc3);
    }
    double sum = (acc0 + acc1) + (acc2 + acc3);
    for (std::size_t i = n4; i < n; ++i) sum = std::fma(a[i], b[i], sum);
    return sum;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] = std::fma(a, x[i], y[i]);
}

void scal_scalar(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void mul_scalar(const double* a, const double* b, double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] * b[i];
}

int64_t sum_pm1_scalar(const int8_t* s, std::size_t n) {
    int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += s[i];
    return sum;
}

int64_t dot_pm1_scalar(const int8_t* a, const int8_t* b, std::size_t n) {
    int64_t sum = 0;
    for (std::size_t i = 0; i < n; ++i) sum += int64_t(a[i]) * int64_t(b[i]);
    return sum;
}

}  // namespace

const Backend& scalar_backend() {
    static const Backend b{"scalar",       dot_scalar,     axpy_scalar,
                           scal_scalar,    mul_scalar,     sum_pm1_scalar,
                           dot_pm1_scalar};
    return b;
}

bool avx2_available() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {

const Backend* g_active = nullptr;

const Backend* pick_default() {
    const char* env = std::getenv("QSG_KERNELS");
    if (env) {
        std::string_view v(env);
        if (v == "scalar") return &scalar_backend();
#if defined(__x86_64__) || defined(_M_X64)
        if (v == "avx2" && avx2_available()) return &avx2_backend();
#endif
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (avx2_available()) return &avx2_backend();
#endif
    return &scalar_backend();
}

}  // namespace

const Backend& active() {
    if (!g_active) g_active = pick_default();
    return *g_active;
}

bool select(std::string_view name) {
    if (name == "scalar") {
        g_active = &scalar_backend();
        return true;
    }
#if defined(__x86_64__) || defined(_M_X64)
    if (name == "avx2" && avx2_available()) {
        g_active = &avx2_backend();
        return true;
    }
#endif
    return false;
}

}  // namespace qsg::kernels
