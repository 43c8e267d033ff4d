// SPDX-License-Identifier: Apache-2.0
//
// Minimax coefficients for sin/cos on [-pi/4, pi/4] (Cephes double
// precision set), shared by every SIMD variant and the scalar tail loops.
#pragma once

#include <cmath>
#include <numbers>

namespace mwr::kernels::detail {

inline constexpr double kSin[6] = {
    1.58962301576546568060e-10, -2.50507477628578072866e-8, 2.75573136213857245213e-6,
    -1.98412698295895385996e-4, 8.33333333332211858878e-3,  -1.66666666666666307295e-1,
};

inline constexpr double kCos[6] = {
    -1.13585365213876817300e-11, 2.08757008419747316778e-9,  -2.75573141792967388112e-7,
    2.48015872888517045348e-5,   -1.38888888888730564116e-3, 4.16666666666665929218e-2,
};

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// cos and sin of 2 pi * cycles, evaluated the same way the vector paths do.
inline void sincos_cycles(double cycles, double& s, double& c) {
    const double r = cycles - std::nearbyint(cycles);  // [-1/2, 1/2]
    const double q = std::nearbyint(4.0 * r);          // octant centre, -2..2
    const double x = kTwoPi * (r - 0.25 * q);          // [-pi/4, pi/4]
    const double z = x * x;

    double ps = kSin[0];
    double pc = kCos[0];
    for (int i = 1; i < 6; ++i) {
        ps = ps * z + kSin[i];
        pc = pc * z + kCos[i];
    }
    const double sx = x + x * z * ps;
    const double cx = 1.0 - 0.5 * z + z * z * pc;

    const int k = static_cast<int>(q) & 3;
    switch (k) {
        case 0: s = sx;  c = cx;  break;
        case 1: s = cx;  c = -sx; break;
        case 2: s = -sx; c = -cx; break;
        default: s = -cx; c = sx; break;
    }
}

}  // namespace mwr::kernels::detail
