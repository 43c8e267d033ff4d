// SPDX-License-Identifier: Apache-2.0
#include "mwr/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mwr/error.hpp"

namespace mwr {

std::string_view to_string(Hue hue) {
    switch (hue) {
        case Hue::Red: return "red";
        case Hue::Green: return "green";
        case Hue::Blue: return "blue";
        case Hue::OutOfWindow: return "out_of_window";
    }
    return "unknown";
}

namespace {

void require_half_turn(Angle a, const char* name) {
    if (!is_open_half_turn(a)) {
        throw Error(Errc::invalid_parameter,
                    std::string(name) + " must lie in (-90, 90) deg, got " + std::to_string(a.deg()));
    }
}

}  // namespace

Angle zero_order_squint(Angle theta_az) {
    require_half_turn(theta_az, "theta_az");
    return -theta_az;
}

Angle high_order_squint(const GratingTarget& t, int m, double lambda) {
    require_half_turn(t.theta_az, "theta_az");
    if (m == 0) {
        return zero_order_squint(t.theta_az);
    }
    if (!t.d_x) {
        throw Error(Errc::evanescent_order,
                    "continuous target has no order m = " + std::to_string(m));
    }
    if (!(*t.d_x > 0.0)) {
        throw Error(Errc::invalid_parameter, "grating period d_x must be positive");
    }
    if (!(lambda > 0.0)) {
        throw Error(Errc::invalid_parameter, "wavelength must be positive");
    }
    const double arg = m * lambda * std::cos(t.theta_az.rad()) / (2.0 * *t.d_x);
    if (!(std::abs(arg) <= 1.0)) {
        throw Error(Errc::evanescent_order, "order m = " + std::to_string(m) +
                                                " is evanescent (arcsin argument " +
                                                std::to_string(arg) + ")");
    }
    return Angle::radians(std::asin(arg)) - t.theta_az;
}

std::vector<DiffractionSolution> orders_in_window(const GratingTarget& t, const RadarParams& p,
                                                  int m_lo, int m_hi) {
    std::vector<DiffractionSolution> out;
    for (int m = m_lo; m <= m_hi; ++m) {
        if (m != 0 && !t.d_x) {
            continue;
        }
        Angle sq;
        try {
            sq = high_order_squint(t, m, p.lambda());
        } catch (const Error& e) {
            if (e.code() == Errc::evanescent_order) {
                continue;
            }
            throw;
        }
        // arcsin(.) - theta_az can leave (-90, 90) for steep targets; such an
        // order has no forward-looking squint and is not a physical response.
        if (!is_open_half_turn(sq)) {
            continue;
        }
        DiffractionSolution s;
        s.m = m;
        s.theta_sq = sq;
        s.f_d = doppler_from_squint(p, sq);
        s.observable = observable(p, s.f_d);
        s.hue = classify_hue(p, s.f_d);
        out.push_back(s);
    }
    return out;
}

Angle effective_squint_3d(const Orientation3D& o) {
    require_half_turn(o.theta_h, "theta_h");
    require_half_turn(o.theta_v, "theta_v");
    if (!(o.theta_inc.rad() > 0.0 && o.theta_inc.rad() < std::numbers::pi / 2.0)) {
        throw Error(Errc::invalid_parameter, "theta_inc must lie in (0, 90) deg");
    }
    const double inc = o.theta_inc.rad();
    const double rhs =
        -std::cos(inc) * (std::tan(inc) * std::tan(o.theta_h.rad()) + std::tan(o.theta_v.rad()));
    return Angle::radians(std::atan(rhs));
}

bool is_green_condition(const Orientation3D& o, Angle tol) {
    return std::abs(effective_squint_3d(o).rad()) <= std::abs(tol.rad());
}

Hue classify_hue(const RadarParams& p, double f_d) {
    if (!observable(p, f_d)) {
        return Hue::OutOfWindow;
    }
    const double third = p.ba() / 6.0;
    if (f_d < p.fdc() - third) {
        return Hue::Red;
    }
    if (f_d <= p.fdc() + third) {
        return Hue::Green;
    }
    return Hue::Blue;
}

Angle invert_orientation_from_doppler(const RadarParams& p, double f_d) {
    return -squint_from_doppler(p, f_d);
}

Angle orientation_for_order(Angle theta_sq, int m, double lambda, double d_x) {
    const double c = std::cos(theta_sq.rad());
    return Angle::radians(std::atan(-std::tan(theta_sq.rad()) + m * lambda / (2.0 * d_x * c)));
}

ChartData chart_data(const RadarParams& p, double d_x, std::span<const int> m_set,
                     std::span<const Angle> theta_sq_grid) {
    if (!(d_x > 0.0)) {
        throw Error(Errc::invalid_parameter, "grating period d_x must be positive");
    }
    for (Angle a : theta_sq_grid) {
        require_half_turn(a, "theta_sq grid point");
    }

    ChartData chart;
    chart.zero_order_curve.reserve(theta_sq_grid.size());
    for (Angle sq : theta_sq_grid) {
        chart.zero_order_curve.push_back({sq, -sq});
    }

    std::vector<int> orders(m_set.begin(), m_set.end());
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());

    // Range bandwidth spreads each order between the band-edge carriers.
    const double lambda_lo_f = kSpeedOfLight / (p.fc() - 0.5 * p.br());
    const double lambda_hi_f = kSpeedOfLight / (p.fc() + 0.5 * p.br());
    for (int m : orders) {
        if (m == 0) {
            continue;
        }
        for (Angle sq : theta_sq_grid) {
            const Angle a = orientation_for_order(sq, m, lambda_lo_f, d_x);
            const Angle b = orientation_for_order(sq, m, lambda_hi_f, d_x);
            if (!std::isfinite(a.rad()) || !std::isfinite(b.rad())) {
                continue;
            }
            chart.order_regions.push_back(
                {m, sq, a.rad() <= b.rad() ? a : b, a.rad() <= b.rad() ? b : a});
        }
    }

    chart.window.f_d_min = p.window_lo();
    chart.window.f_d_max = p.window_hi();
    chart.window.red_green_edge = p.fdc() - p.ba() / 6.0;
    chart.window.green_blue_edge = p.fdc() + p.ba() / 6.0;
    return chart;
}

}  // namespace mwr
