// SPDX-License-Identifier: Apache-2.0
//
// Reference kernels: straightforward loops over libm. The SIMD variants are
// tested against these.
#include <cmath>

#include "mwr/kernels.hpp"
#include "sincos_poly.hpp"

namespace mwr::kernels::scalar {

void phasor_sum(std::span<const double> base, std::span<const double> step,
                std::span<const double> amp, std::span<std::complex<double>> out) {
    const std::size_t n_terms = base.size();
    for (std::size_t j = 0; j < out.size(); ++j) {
        const double jd = static_cast<double>(j);
        double re = 0.0;
        double im = 0.0;
        for (std::size_t n = 0; n < n_terms; ++n) {
            const double cycles = base[n] + jd * step[n];
            const double angle = detail::kTwoPi * (cycles - std::nearbyint(cycles));
            re += amp[n] * std::cos(angle);
            im -= amp[n] * std::sin(angle);
        }
        out[j] = {re, im};
    }
}

double energy(std::span<const std::complex<double>> z) {
    double acc = 0.0;
    for (const auto& v : z) {
        acc += v.real() * v.real() + v.imag() * v.imag();
    }
    return acc;
}

}  // namespace mwr::kernels::scalar
