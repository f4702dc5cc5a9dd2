#include "logwave/kernels.hpp"

#if defined(LOGWAVE_AVX2) && (defined(__x86_64__) || defined(_M_X64))

#include <immintrin.h>

#include <cmath>

// AVX2/FMA variants, 4 doubles wide. The vectorized natural log follows the
// fdlibm e_log reduction: x = 2^k m with m in [sqrt(2)/2, sqrt(2)), then a
// rational polynomial in s = (m-1)/(m+1). Accuracy is ~1 ulp, which the
// equivalence tests pin down against libm.

namespace logwave::kernels {

namespace {

constexpr double kNode[5] = {
    0.5 - 0.5 * 0.906179845938663993,
    0.5 - 0.5 * 0.538469310105683091,
    0.5,
    0.5 + 0.5 * 0.538469310105683091,
    0.5 + 0.5 * 0.906179845938663993,
};
constexpr double kWeight[5] = {
    0.5 * 0.236926885056189088,
    0.5 * 0.478628670499366468,
    0.5 * 0.568888888888888889,
    0.5 * 0.478628670499366468,
    0.5 * 0.236926885056189088,
};

const __m256d kLn2Hi = _mm256_set1_pd(6.93147180369123816490e-01);
const __m256d kLn2Lo = _mm256_set1_pd(1.90821492927058770002e-10);
const __m256d kLg1 = _mm256_set1_pd(6.666666666666735130e-01);
const __m256d kLg2 = _mm256_set1_pd(3.999999999940941908e-01);
const __m256d kLg3 = _mm256_set1_pd(2.857142874366239149e-01);
const __m256d kLg4 = _mm256_set1_pd(2.222219843214978396e-01);
const __m256d kLg5 = _mm256_set1_pd(1.818357216161805012e-01);
const __m256d kLg6 = _mm256_set1_pd(1.531383769920937332e-01);
const __m256d kLg7 = _mm256_set1_pd(1.479819860511658591e-01);
const __m256d kSqrt2 = _mm256_set1_pd(1.41421356237309514547);
const __m256d kOne = _mm256_set1_pd(1.0);
const __m256d kHalf = _mm256_set1_pd(0.5);
const __m256d kTwo = _mm256_set1_pd(2.0);

// ln(x) for finite x > 0 (denormals included). Lanes must be positive;
// callers mask zeros to 1.0 beforehand.
inline __m256d vlog_pd(__m256d x) {
    // Rescale denormals so the exponent-field extraction is valid.
    const __m256d tiny = _mm256_set1_pd(2.2250738585072014e-308);  // 2^-1022
    const __m256d sub_mask = _mm256_cmp_pd(x, tiny, _CMP_LT_OQ);
    const __m256d x_scaled = _mm256_mul_pd(x, _mm256_set1_pd(0x1p54));
    x = _mm256_blendv_pd(x, x_scaled, sub_mask);
    __m256d k_bias =
        _mm256_and_pd(sub_mask, _mm256_set1_pd(54.0));  // later subtracted

    const __m256i bits = _mm256_castpd_si256(x);
    const __m256i exp_raw =
        _mm256_and_si256(_mm256_srli_epi64(bits, 52), _mm256_set1_epi64x(0x7FF));
    // int64 -> double for 0 <= e < 2^52 via the 2^52 magic constant
    const __m256i magic = _mm256_set1_epi64x(0x4330000000000000LL);
    __m256d e = _mm256_sub_pd(
        _mm256_castsi256_pd(_mm256_or_si256(exp_raw, magic)),
        _mm256_set1_pd(4503599627370496.0));
    e = _mm256_sub_pd(e, _mm256_set1_pd(1023.0));
    e = _mm256_sub_pd(e, k_bias);

    // mantissa in [1,2)
    const __m256i mant_bits = _mm256_or_si256(
        _mm256_and_si256(bits, _mm256_set1_epi64x(0x000FFFFFFFFFFFFFLL)),
        _mm256_set1_epi64x(0x3FF0000000000000LL));
    __m256d m = _mm256_castsi256_pd(mant_bits);

    // fold into [sqrt(2)/2, sqrt(2))
    const __m256d fold = _mm256_cmp_pd(m, kSqrt2, _CMP_GE_OQ);
    m = _mm256_blendv_pd(m, _mm256_mul_pd(m, kHalf), fold);
    e = _mm256_add_pd(e, _mm256_and_pd(fold, kOne));

    const __m256d f = _mm256_sub_pd(m, kOne);
    const __m256d s = _mm256_div_pd(f, _mm256_add_pd(kTwo, f));
    const __m256d z = _mm256_mul_pd(s, s);
    const __m256d w = _mm256_mul_pd(z, z);
    const __m256d t1 = _mm256_mul_pd(
        w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, kLg6, kLg4), kLg2));
    const __m256d t2 = _mm256_mul_pd(
        z, _mm256_fmadd_pd(
               w, _mm256_fmadd_pd(w, _mm256_fmadd_pd(w, kLg7, kLg5), kLg3),
               kLg1));
    const __m256d r = _mm256_add_pd(t1, t2);
    const __m256d hfsq = _mm256_mul_pd(kHalf, _mm256_mul_pd(f, f));

    // k*ln2_hi - ((hfsq - (s*(hfsq+R) + k*ln2_lo)) - f)
    const __m256d s_term =
        _mm256_fmadd_pd(s, _mm256_add_pd(hfsq, r), _mm256_mul_pd(e, kLn2Lo));
    return _mm256_fmadd_pd(
        e, kLn2Hi, _mm256_sub_pd(f, _mm256_sub_pd(hfsq, s_term)));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

double log_quad_avx2(const double* values, std::size_t n_elems, double h,
                     double shift) {
    const __m256d vshift = _mm256_set1_pd(shift);
    const __m256d zero = _mm256_setzero_pd();
    __m256d acc = zero;
    std::size_t e = 0;
    for (; e + 4 <= n_elems; e += 4) {
        const __m256d a = _mm256_loadu_pd(values + e);
        const __m256d b = _mm256_loadu_pd(values + e + 1);
        const __m256d slope = _mm256_sub_pd(b, a);
        __m256d elem = zero;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const __m256d u = _mm256_fmadd_pd(slope, _mm256_set1_pd(kNode[q]), a);
            const __m256d nz = _mm256_cmp_pd(u, zero, _CMP_NEQ_OQ);
            const __m256d au = _mm256_andnot_pd(_mm256_set1_pd(-0.0), u);
            const __m256d lg = _mm256_sub_pd(
                vlog_pd(_mm256_blendv_pd(kOne, au, nz)), vshift);
            const __m256d term =
                _mm256_mul_pd(_mm256_mul_pd(u, u),
                              _mm256_mul_pd(lg, _mm256_set1_pd(kWeight[q])));
            elem = _mm256_add_pd(elem, _mm256_and_pd(term, nz));
        }
        acc = _mm256_fmadd_pd(_mm256_set1_pd(h), elem, acc);
    }
    double total = hsum(acc);
    // scalar tail
    for (; e < n_elems; ++e) {
        const double a = values[e];
        const double b = values[e + 1];
        double elem = 0.0;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const double u = a + (b - a) * kNode[q];
            if (u == 0.0) continue;
            elem += kWeight[q] * u * u * (std::log(std::fabs(u)) - shift);
        }
        total += h * elem;
    }
    return total;
}

void log_load_avx2(const double* values, std::size_t n_elems, double h,
                   double gamma, double* out) {
    const __m256d zero = _mm256_setzero_pd();
    const __m256d hg = _mm256_set1_pd(h * gamma);
    std::size_t e = 0;
    for (; e + 4 <= n_elems; e += 4) {
        const __m256d a = _mm256_loadu_pd(values + e);
        const __m256d b = _mm256_loadu_pd(values + e + 1);
        const __m256d slope = _mm256_sub_pd(b, a);
        __m256d left = zero;
        __m256d right = zero;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const double s = kNode[q];
            const __m256d u = _mm256_fmadd_pd(slope, _mm256_set1_pd(s), a);
            const __m256d nz = _mm256_cmp_pd(u, zero, _CMP_NEQ_OQ);
            const __m256d au = _mm256_andnot_pd(_mm256_set1_pd(-0.0), u);
            const __m256d lg = vlog_pd(_mm256_blendv_pd(kOne, au, nz));
            __m256d f = _mm256_mul_pd(_mm256_mul_pd(u, lg),
                                      _mm256_set1_pd(kWeight[q]));
            f = _mm256_and_pd(f, nz);
            left = _mm256_fmadd_pd(f, _mm256_set1_pd(1.0 - s), left);
            right = _mm256_fmadd_pd(f, _mm256_set1_pd(s), right);
        }
        left = _mm256_mul_pd(left, hg);
        right = _mm256_mul_pd(right, hg);
        alignas(32) double l4[4];
        alignas(32) double r4[4];
        _mm256_store_pd(l4, left);
        _mm256_store_pd(r4, right);
        for (int j = 0; j < 4; ++j) {
            out[e + j] += l4[j];
            out[e + j + 1] += r4[j];
        }
    }
    for (; e < n_elems; ++e) {
        const double a = values[e];
        const double b = values[e + 1];
        double left = 0.0;
        double right = 0.0;
        for (std::size_t q = 0; q < gauss_points; ++q) {
            const double s = kNode[q];
            const double u = a + (b - a) * s;
            if (u == 0.0) continue;
            const double f = kWeight[q] * u * std::log(std::fabs(u));
            left += f * (1.0 - s);
            right += f * s;
        }
        out[e] += h * gamma * left;
        out[e + 1] += h * gamma * right;
    }
}

double dot_avx2(const double* x, const double* y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4),
                               _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i),
                               acc0);
    double total = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) total += x[i] * y[i];
    return total;
}

double tridiag_quad_avx2(const double* d, const double* o, const double* v,
                         std::size_t n) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vi = _mm256_loadu_pd(v + i);
        acc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(d + i), vi), vi,
                              acc);
    }
    double total = hsum(acc);
    for (; i < n; ++i) total += d[i] * v[i] * v[i];

    __m256d cacc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 < n; j += 4) {   // j+4 <= n-1 keeps v[j+4] in range
        const __m256d vj = _mm256_loadu_pd(v + j);
        const __m256d vj1 = _mm256_loadu_pd(v + j + 1);
        cacc = _mm256_fmadd_pd(_mm256_mul_pd(_mm256_loadu_pd(o + j), vj), vj1,
                               cacc);
    }
    double cross = hsum(cacc);
    for (; j + 1 < n; ++j) cross += o[j] * v[j] * v[j + 1];
    return total + 2.0 * cross;
}

void tridiag_matvec_avx2(const double* d, const double* o, const double* v,
                         std::size_t n, double* y) {
    if (n == 0) return;
    if (n == 1) {
        y[0] = d[0] * v[0];
        return;
    }
    y[0] = d[0] * v[0] + o[0] * v[1];
    std::size_t i = 1;
    for (; i + 5 < n; i += 4) {   // needs v[i+4] and o[i+3] in range
        const __m256d vm = _mm256_loadu_pd(v + i - 1);
        const __m256d vc = _mm256_loadu_pd(v + i);
        const __m256d vp = _mm256_loadu_pd(v + i + 1);
        __m256d r = _mm256_mul_pd(_mm256_loadu_pd(o + i - 1), vm);
        r = _mm256_fmadd_pd(_mm256_loadu_pd(d + i), vc, r);
        r = _mm256_fmadd_pd(_mm256_loadu_pd(o + i), vp, r);
        _mm256_storeu_pd(y + i, r);
    }
    for (; i + 1 < n; ++i)
        y[i] = o[i - 1] * v[i - 1] + d[i] * v[i] + o[i] * v[i + 1];
    y[n - 1] = o[n - 2] * v[n - 2] + d[n - 1] * v[n - 1];
}

}  // namespace

const Backend* avx2_backend_impl() {
    static const Backend b{"avx2",        log_quad_avx2,
                           log_load_avx2, dot_avx2,
                           tridiag_quad_avx2, tridiag_matvec_avx2};
    if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma"))
        return &b;
    return nullptr;
}

}  // namespace logwave::kernels

#else

namespace logwave::kernels {
const Backend* avx2_backend_impl() { return nullptr; }
}  // namespace logwave::kernels

#endif
