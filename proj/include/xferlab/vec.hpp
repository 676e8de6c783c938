#pragma once
// Dense double kernels. Reductions have a fixed association order (pairwise
// tree with a fixed base block), so results are bit-identical for a given
// length regardless of caller or thread count.

#include <cstddef>
#include <cmath>
#include <span>
#include <vector>

#if defined(__AVX512F__)
#include <immintrin.h>
#endif

namespace xferlab::vec {

namespace detail {

inline double dot_block(const double* a, const double* b, std::size_t n) {
    double acc = 0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = 0; i < n; ++i) acc += a[i] * b[i];
    return acc;
}

inline double sum_block(const double* a, std::size_t n) {
    double acc = 0;
#pragma omp simd reduction(+ : acc)
    for (std::size_t i = 0; i < n; ++i) acc += a[i];
    return acc;
}

} // namespace detail

// block size for the pairwise reduction tree; fixed, part of the numeric contract
inline constexpr std::size_t kPairwiseBase = 128;

inline double dot(const double* a, const double* b, std::size_t n) {
    if (n <= kPairwiseBase) return detail::dot_block(a, b, n);
    std::size_t half = (n / 2 + 3) & ~std::size_t(3); // keep 32-byte alignment of the split
    if (half >= n) half = n / 2;
    return dot(a, b, half) + dot(a + half, b + half, n - half);
}

inline double sum(const double* a, std::size_t n) {
    if (n <= kPairwiseBase) return detail::sum_block(a, n);
    std::size_t half = (n / 2 + 3) & ~std::size_t(3);
    if (half >= n) half = n / 2;
    return sum(a, half) + sum(a + half, n - half);
}

inline double dot(std::span<const double> a, std::span<const double> b) {
    return dot(a.data(), b.data(), a.size());
}

inline double sum(std::span<const double> a) { return sum(a.data(), a.size()); }

inline double nrm2sq(const double* a, std::size_t n) { return dot(a, a, n); }
inline double nrm2sq(std::span<const double> a) { return dot(a.data(), a.data(), a.size()); }
inline double nrm2(std::span<const double> a) { return std::sqrt(nrm2sq(a)); }

// four dot products sharing one right-hand side; the shared x load makes this
// the hot kernel of batch evaluation
#if defined(__AVX512F__)
inline void dot4(const double* a0, const double* a1, const double* a2, const double* a3,
                 const double* x, std::size_t n, double* out4) {
    // two accumulator chains per output to cover the FMA latency
    __m512d s0a = _mm512_setzero_pd(), s0b = _mm512_setzero_pd();
    __m512d s1a = _mm512_setzero_pd(), s1b = _mm512_setzero_pd();
    __m512d s2a = _mm512_setzero_pd(), s2b = _mm512_setzero_pd();
    __m512d s3a = _mm512_setzero_pd(), s3b = _mm512_setzero_pd();
    std::size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        __m512d xa = _mm512_loadu_pd(x + i);
        __m512d xb = _mm512_loadu_pd(x + i + 8);
        s0a = _mm512_fmadd_pd(_mm512_loadu_pd(a0 + i), xa, s0a);
        s0b = _mm512_fmadd_pd(_mm512_loadu_pd(a0 + i + 8), xb, s0b);
        s1a = _mm512_fmadd_pd(_mm512_loadu_pd(a1 + i), xa, s1a);
        s1b = _mm512_fmadd_pd(_mm512_loadu_pd(a1 + i + 8), xb, s1b);
        s2a = _mm512_fmadd_pd(_mm512_loadu_pd(a2 + i), xa, s2a);
        s2b = _mm512_fmadd_pd(_mm512_loadu_pd(a2 + i + 8), xb, s2b);
        s3a = _mm512_fmadd_pd(_mm512_loadu_pd(a3 + i), xa, s3a);
        s3b = _mm512_fmadd_pd(_mm512_loadu_pd(a3 + i + 8), xb, s3b);
    }
    out4[0] = _mm512_reduce_add_pd(_mm512_add_pd(s0a, s0b));
    out4[1] = _mm512_reduce_add_pd(_mm512_add_pd(s1a, s1b));
    out4[2] = _mm512_reduce_add_pd(_mm512_add_pd(s2a, s2b));
    out4[3] = _mm512_reduce_add_pd(_mm512_add_pd(s3a, s3b));
    for (; i < n; ++i) {
        double xi = x[i];
        out4[0] += a0[i] * xi;
        out4[1] += a1[i] * xi;
        out4[2] += a2[i] * xi;
        out4[3] += a3[i] * xi;
    }
}
#else
inline void dot4(const double* a0, const double* a1, const double* a2, const double* a3,
                 const double* x, std::size_t n, double* out4) {
    double s0 = 0, s1 = 0, s2 = 0, s3 = 0;
#pragma omp simd reduction(+ : s0, s1, s2, s3)
    for (std::size_t i = 0; i < n; ++i) {
        double xi = x[i];
        s0 += a0[i] * xi;
        s1 += a1[i] * xi;
        s2 += a2[i] * xi;
        s3 += a3[i] * xi;
    }
    out4[0] = s0;
    out4[1] = s1;
    out4[2] = s2;
    out4[3] = s3;
}
#endif

// y += alpha * x
inline void axpy(double alpha, const double* x, double* y, std::size_t n) {
#pragma omp simd
    for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

// y += c0 x0 + c1 x1 + c2 x2 + c3 x3, associated exactly like four
// consecutive axpy calls in order 0..3
inline void axpy4(double c0, const double* x0, double c1, const double* x1, double c2,
                  const double* x2, double c3, const double* x3, double* y, std::size_t n) {
#pragma omp simd
    for (std::size_t i = 0; i < n; ++i) {
        double t = y[i];
        t += c0 * x0[i];
        t += c1 * x1[i];
        t += c2 * x2[i];
        t += c3 * x3[i];
        y[i] = t;
    }
}

inline void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    axpy(alpha, x.data(), y.data(), x.size());
}

inline void scale(double alpha, double* x, std::size_t n) {
#pragma omp simd
    for (std::size_t i = 0; i < n; ++i) x[i] *= alpha;
}

inline void scale(double alpha, std::span<double> x) { scale(alpha, x.data(), x.size()); }

} // namespace xferlab::vec
