// SPDX-License-Identifier: Apache-2.0
//
// AArch64 Advanced SIMD kernels (2 x f64 lanes). Built only on aarch64.
#include <arm_neon.h>

#include "mwr/kernels.hpp"
#include "sincos_poly.hpp"

namespace mwr::kernels::neon {

namespace {

struct SinCos {
    float64x2_t s;
    float64x2_t c;
};

inline float64x2_t horner(float64x2_t z, const double (&k)[6]) {
    float64x2_t p = vdupq_n_f64(k[0]);
    for (int i = 1; i < 6; ++i) {
        p = vfmaq_f64(vdupq_n_f64(k[i]), p, z);
    }
    return p;
}

inline SinCos sincos_cycles(float64x2_t cycles) {
    const float64x2_t r = vsubq_f64(cycles, vrndnq_f64(cycles));
    const float64x2_t q = vrndnq_f64(vmulq_f64(r, vdupq_n_f64(4.0)));
    const float64x2_t x = vmulq_f64(vdupq_n_f64(detail::kTwoPi), vfmsq_f64(r, q, vdupq_n_f64(0.25)));
    const float64x2_t z = vmulq_f64(x, x);

    const float64x2_t sx = vfmaq_f64(x, vmulq_f64(x, z), horner(z, detail::kSin));
    const float64x2_t cx = vfmaq_f64(vfmsq_f64(vdupq_n_f64(1.0), vdupq_n_f64(0.5), z),
                                     vmulq_f64(z, z), horner(z, detail::kCos));

    const float64x2_t k =
        vsubq_f64(q, vmulq_f64(vdupq_n_f64(4.0), vrndmq_f64(vmulq_f64(q, vdupq_n_f64(0.25)))));
    const uint64x2_t is1 = vceqq_f64(k, vdupq_n_f64(1.0));
    const uint64x2_t is2 = vceqq_f64(k, vdupq_n_f64(2.0));
    const uint64x2_t is3 = vceqq_f64(k, vdupq_n_f64(3.0));
    const uint64x2_t odd = vorrq_u64(is1, is3);
    const uint64x2_t sin_neg = vorrq_u64(is2, is3);
    const uint64x2_t cos_neg = vorrq_u64(is1, is2);

    const uint64x2_t sign = vdupq_n_u64(0x8000000000000000ULL);
    float64x2_t s = vbslq_f64(odd, cx, sx);
    float64x2_t c = vbslq_f64(odd, sx, cx);
    s = vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(s), vandq_u64(sin_neg, sign)));
    c = vreinterpretq_f64_u64(veorq_u64(vreinterpretq_u64_f64(c), vandq_u64(cos_neg, sign)));
    return {s, c};
}

}  // namespace

void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out) {
    const std::size_t n_terms = base.size();
    const std::size_t n_out = out.size();
    std::size_t j = 0;

    for (; j + 4 <= n_out; j += 4) {
        const double j0 = static_cast<double>(j);
        const double lo[2] = {j0, j0 + 1.0};
        const double hi[2] = {j0 + 2.0, j0 + 3.0};
        const float64x2_t jv0 = vld1q_f64(lo);
        const float64x2_t jv1 = vld1q_f64(hi);
        float64x2_t re0 = vdupq_n_f64(0.0);
        float64x2_t im0 = vdupq_n_f64(0.0);
        float64x2_t re1 = vdupq_n_f64(0.0);
        float64x2_t im1 = vdupq_n_f64(0.0);
        for (std::size_t n = 0; n < n_terms; ++n) {
            const float64x2_t b = vdupq_n_f64(base[n]);
            const float64x2_t s = vdupq_n_f64(step[n]);
            const float64x2_t a = vdupq_n_f64(amp[n]);
            const SinCos p0 = sincos_cycles(vfmaq_f64(b, jv0, s));
            const SinCos p1 = sincos_cycles(vfmaq_f64(b, jv1, s));
            re0 = vfmaq_f64(re0, a, p0.c);
            im0 = vfmsq_f64(im0, a, p0.s);
            re1 = vfmaq_f64(re1, a, p1.c);
            im1 = vfmsq_f64(im1, a, p1.s);
        }
        double* p = reinterpret_cast<double*>(out.data() + j);
        vst2q_f64(p, float64x2x2_t{{re0, im0}});
        vst2q_f64(p + 4, float64x2x2_t{{re1, im1}});
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
    float64x2_t acc0 = vdupq_n_f64(0.0);
    float64x2_t acc1 = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const float64x2_t v0 = vld1q_f64(p + i);
        const float64x2_t v1 = vld1q_f64(p + i + 2);
        acc0 = vfmaq_f64(acc0, v0, v0);
        acc1 = vfmaq_f64(acc1, v1, v1);
    }
    double acc = vaddvq_f64(vaddq_f64(acc0, acc1));
    for (; i < n; ++i) {
        acc += p[i] * p[i];
    }
    return acc;
}

}  // namespace mwr::kernels::neon
