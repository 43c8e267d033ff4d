// SPDX-License-Identifier: Apache-2.0
//
// Closed-form geometric dispersion: where a linear or periodic target puts its
// peak response in squint/Doppler, and which CSI colour that lands in.
#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mwr/core.hpp"

namespace mwr {

enum class Hue { Red, Green, Blue, OutOfWindow };

std::string_view to_string(Hue hue);

struct DiffractionSolution {
    int m = 0;
    Angle theta_sq;
    double f_d = 0.0;  // Hz
    bool observable = false;
    Hue hue = Hue::OutOfWindow;
};

// A line target at in-plane orientation theta_az. d_x is the grating period
// measured along azimuth; absent for continuous targets.
struct GratingTarget {
    Angle theta_az;
    std::optional<double> d_x;
};

struct Orientation3D {
    Angle theta_h;
    Angle theta_v;
    Angle theta_inc;  // strictly inside (0, 90) deg

    friend bool operator==(const Orientation3D&, const Orientation3D&) = default;
};

struct ChartData {
    struct CurvePoint {
        Angle theta_sq;
        Angle theta_az;
    };
    struct RegionPoint {
        int m = 0;
        Angle theta_sq;
        Angle theta_az_low;
        Angle theta_az_high;
    };
    struct Window {
        double f_d_min = 0.0;
        double f_d_max = 0.0;
        double red_green_edge = 0.0;
        double green_blue_edge = 0.0;
    };

    std::vector<CurvePoint> zero_order_curve;
    std::vector<RegionPoint> order_regions;  // sorted by m, then by grid order
    Window window;
};

Angle zero_order_squint(Angle theta_az);

// theta_sq,m = arcsin(m lambda cos(theta_az) / (2 d_x)) - theta_az.
// m = 0 returns zero_order_squint(theta_az) bit-exactly; a continuous target
// (no d_x) only has m = 0. Throws Errc::evanescent_order when the arcsin
// argument leaves [-1, 1].
Angle high_order_squint(const GratingTarget& t, int m, double lambda);

// Every propagating order in [m_lo, m_hi] (evanescent orders are skipped),
// sorted by m, with Doppler, observability and hue filled in.
std::vector<DiffractionSolution> orders_in_window(const GratingTarget& t, const RadarParams& p,
                                                  int m_lo, int m_hi);

// tan(theta_sq) = -cos(inc) (tan(inc) tan(h) + tan(v)). The implied in-plane
// orientation of the target is theta_az = -theta_sq.
Angle effective_squint_3d(const Orientation3D& o);

bool is_green_condition(const Orientation3D& o, Angle tol);

// Thirds of the observable window: Red [lo, lo + B_a/3), Green [.., ..],
// Blue (hi - B_a/3, hi]; anything outside the window is OutOfWindow.
Hue classify_hue(const RadarParams& p, double f_d);

// Zero-order inversion: theta_az = -arcsin(lambda f_d / 2V).
Angle invert_orientation_from_doppler(const RadarParams& p, double f_d);

// Orientation that puts order m at squint theta_sq for wavelength lambda:
// tan(theta_az) = -tan(theta_sq) + m lambda / (2 d_x cos(theta_sq)).
Angle orientation_for_order(Angle theta_sq, int m, double lambda, double d_x);

ChartData chart_data(const RadarParams& p, double d_x, std::span<const int> m_set,
                     std::span<const Angle> theta_sq_grid);

}  // namespace mwr
