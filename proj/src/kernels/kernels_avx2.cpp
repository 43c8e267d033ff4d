// SPDX-License-Identifier: Apache-2.0
//
// AVX2 + FMA kernels. Compiled with -mavx2 -mfma; only reached through the
// dispatcher after a CPUID check.
#include <immintrin.h>

#include "mwr/kernels.hpp"
#include "sincos_poly.hpp"

namespace mwr::kernels::avx2 {

namespace {

struct SinCos {
    __m256d s;
    __m256d c;
};

inline __m256d horner(__m256d z, const double (&k)[6]) {
    __m256d p = _mm256_set1_pd(k[0]);
    for (int i = 1; i < 6; ++i) {
        p = _mm256_fmadd_pd(p, z, _mm256_set1_pd(k[i]));
    }
    return p;
}

// sin/cos of 2 pi * cycles, lane-wise.
inline SinCos sincos_cycles(__m256d cycles) {
    constexpr int kNearest = _MM_FROUND_TO_NEAREST_INT | _MM_FROUND_NO_EXC;
    const __m256d r = _mm256_sub_pd(cycles, _mm256_round_pd(cycles, kNearest));
    const __m256d q = _mm256_round_pd(_mm256_mul_pd(r, _mm256_set1_pd(4.0)), kNearest);
    const __m256d x =
        _mm256_mul_pd(_mm256_set1_pd(detail::kTwoPi), _mm256_fnmadd_pd(q, _mm256_set1_pd(0.25), r));
    const __m256d z = _mm256_mul_pd(x, x);

    const __m256d sx = _mm256_fmadd_pd(_mm256_mul_pd(x, z), horner(z, detail::kSin), x);
    const __m256d cx = _mm256_fmadd_pd(_mm256_mul_pd(z, z), horner(z, detail::kCos),
                                       _mm256_fnmadd_pd(_mm256_set1_pd(0.5), z, _mm256_set1_pd(1.0)));

    // Quadrant k = q mod 4 in {0, 1, 2, 3}.
    const __m256d k = _mm256_sub_pd(
        q, _mm256_mul_pd(_mm256_set1_pd(4.0), _mm256_floor_pd(_mm256_mul_pd(q, _mm256_set1_pd(0.25)))));
    const __m256d one = _mm256_set1_pd(1.0);
    const __m256d two = _mm256_set1_pd(2.0);
    const __m256d three = _mm256_set1_pd(3.0);
    const __m256d odd = _mm256_or_pd(_mm256_cmp_pd(k, one, _CMP_EQ_OQ), _mm256_cmp_pd(k, three, _CMP_EQ_OQ));
    const __m256d sin_neg = _mm256_cmp_pd(k, two, _CMP_GE_OQ);
    const __m256d cos_neg = _mm256_or_pd(_mm256_cmp_pd(k, one, _CMP_EQ_OQ), _mm256_cmp_pd(k, two, _CMP_EQ_OQ));

    const __m256d sign = _mm256_set1_pd(-0.0);
    __m256d s = _mm256_blendv_pd(sx, cx, odd);
    __m256d c = _mm256_blendv_pd(cx, sx, odd);
    s = _mm256_xor_pd(s, _mm256_and_pd(sin_neg, sign));
    c = _mm256_xor_pd(c, _mm256_and_pd(cos_neg, sign));
    return {s, c};
}

// Interleaves (re, im) lanes into four std::complex<double> at `dst`.
inline void store_complex(std::complex<double>* dst, __m256d re, __m256d im) {
    const __m256d lo = _mm256_unpacklo_pd(re, im);  // r0 i0 r2 i2
    const __m256d hi = _mm256_unpackhi_pd(re, im);  // r1 i1 r3 i3
    double* p = reinterpret_cast<double*>(dst);
    _mm256_storeu_pd(p, _mm256_permute2f128_pd(lo, hi, 0x20));
    _mm256_storeu_pd(p + 4, _mm256_permute2f128_pd(lo, hi, 0x31));
}

}  // namespace

void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out) {
    const std::size_t n_terms = base.size();
    const std::size_t n_out = out.size();
    std::size_t j = 0;

    // Eight outputs per pass, accumulators held in registers across all terms.
    for (; j + 8 <= n_out; j += 8) {
        const double j0 = static_cast<double>(j);
        const __m256d jv0 = _mm256_setr_pd(j0, j0 + 1.0, j0 + 2.0, j0 + 3.0);
        const __m256d jv1 = _mm256_setr_pd(j0 + 4.0, j0 + 5.0, j0 + 6.0, j0 + 7.0);
        __m256d re0 = _mm256_setzero_pd();
        __m256d im0 = _mm256_setzero_pd();
        __m256d re1 = _mm256_setzero_pd();
        __m256d im1 = _mm256_setzero_pd();
        for (std::size_t n = 0; n < n_terms; ++n) {
            const __m256d b = _mm256_broadcast_sd(&base[n]);
            const __m256d s = _mm256_broadcast_sd(&step[n]);
            const __m256d a = _mm256_broadcast_sd(&amp[n]);
            const SinCos p0 = sincos_cycles(_mm256_fmadd_pd(jv0, s, b));
            const SinCos p1 = sincos_cycles(_mm256_fmadd_pd(jv1, s, b));
            re0 = _mm256_fmadd_pd(a, p0.c, re0);
            im0 = _mm256_fnmadd_pd(a, p0.s, im0);
            re1 = _mm256_fmadd_pd(a, p1.c, re1);
            im1 = _mm256_fnmadd_pd(a, p1.s, im1);
        }
        store_complex(out.data() + j, re0, im0);
        store_complex(out.data() + j + 4, re1, im1);
    }

    for (; j < n_out; ++j) {
        const double jd = static_cast<double>(j);
        double re = 0.0;
        double im = 0.0;
        for (std::size_t n = 0; n < n_terms; ++n) {
            double s = 0.0;
            double c = 0.0;
            detail::sincos_cycles(base[n] + jd * step[n], s, c);
            re += amp[n] * c;
            im -= amp[n] * s;
        }
        out[j] = {re, im};
    }
}

double energy(std::span<const std::complex<double>> z) {
    const double* p = reinterpret_cast<const double*>(z.data());
    const std::size_t n = 2 * z.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        const __m256d v0 = _mm256_loadu_pd(p + i);
        const __m256d v1 = _mm256_loadu_pd(p + i + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, _mm256_add_pd(acc0, acc1));
    double acc = (lanes[0] + lanes[1]) + (lanes[2] + lanes[3]);
    for (; i < n; ++i) {
        acc += p[i] * p[i];
    }
    return acc;
}

}  // namespace mwr::kernels::avx2
