// SPDX-License-Identifier: Apache-2.0
#include "mwr/core.hpp"

#include <string>

#include "mwr/error.hpp"

namespace mwr {

const char* to_string(Errc code) noexcept {
    switch (code) {
        case Errc::invalid_parameter: return "invalid parameter";
        case Errc::out_of_range: return "out of range";
        case Errc::evanescent_order: return "evanescent order";
        case Errc::parse: return "parse error";
        case Errc::config: return "config error";
        case Errc::aliasing: return "aliasing";
        case Errc::invalid_window: return "invalid window";
        case Errc::invalid_grid: return "invalid grid";
        case Errc::invalid_input: return "invalid input";
        case Errc::io: return "i/o error";
    }
    return "unknown";
}

bool is_open_half_turn(Angle a) {
    return std::isfinite(a.rad()) && std::abs(a.rad()) < std::numbers::pi / 2.0;
}

namespace {

void require_positive(double value, const char* name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw Error(Errc::invalid_parameter,
                    std::string(name) + " must be positive and finite, got " + std::to_string(value));
    }
}

}  // namespace

RadarParams RadarParams::from_bandwidths(double fc_hz, double v_mps, double ba_hz, double br_hz,
                                         double fdc_hz) {
    require_positive(fc_hz, "carrier frequency");
    require_positive(v_mps, "platform speed");
    require_positive(ba_hz, "azimuth bandwidth");
    require_positive(br_hz, "range bandwidth");
    if (!std::isfinite(fdc_hz)) {
        throw Error(Errc::invalid_parameter, "Doppler centroid must be finite");
    }
    RadarParams p(fc_hz, v_mps, ba_hz, br_hz, fdc_hz);
    // Both window edges must map to a real squint angle.
    const double reach = p.doppler_scale();
    if (std::abs(p.window_lo()) >= reach || std::abs(p.window_hi()) >= reach) {
        throw Error(Errc::invalid_parameter,
                    "observable Doppler window exceeds 2V/lambda = " + std::to_string(reach) + " Hz");
    }
    return p;
}

RadarParams make_params(double fc_hz, double v_mps, double rho_a_m, double rho_r_m, double fdc_hz) {
    require_positive(fc_hz, "carrier frequency");
    require_positive(v_mps, "platform speed");
    require_positive(rho_a_m, "azimuth resolution");
    require_positive(rho_r_m, "range resolution");
    return RadarParams::from_bandwidths(fc_hz, v_mps, v_mps / rho_a_m,
                                        kSpeedOfLight / (2.0 * rho_r_m), fdc_hz);
}

RadarParams reference_params() { return make_params(9.6e9, 7600.0, 0.1, 0.1, 0.0); }

double doppler_from_squint(const RadarParams& p, Angle theta_sq) {
    return p.doppler_scale() * std::sin(theta_sq.rad());
}

Angle squint_from_doppler(const RadarParams& p, double f_d) {
    const double arg = f_d / p.doppler_scale();
    if (!(std::abs(arg) <= 1.0)) {
        throw Error(Errc::out_of_range, "Doppler " + std::to_string(f_d) +
                                            " Hz is not realizable (|lambda f_d / 2V| > 1)");
    }
    return Angle::radians(std::asin(arg));
}

bool observable(const RadarParams& p, double f_d) {
    return p.window_lo() <= f_d && f_d <= p.window_hi();
}

}  // namespace mwr
