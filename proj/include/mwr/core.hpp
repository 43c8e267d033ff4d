// SPDX-License-Identifier: Apache-2.0
//
// Acquisition parameters and the squint <-> Doppler mapping shared by every
// other module. Angles are radians internally and degrees at every external
// boundary (CLI flags, config files, CSV/JSON output).
#pragma once

#include <cmath>
#include <numbers>

namespace mwr {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

// Radians for arithmetic; the degree value is carried alongside so that a
// degree read from a config or flag is re-emitted bit-exactly.
class Angle {
public:
    constexpr Angle() = default;

    static constexpr Angle radians(double r) { return Angle(r, r * 180.0 / std::numbers::pi); }
    static constexpr Angle degrees(double d) { return Angle(d * std::numbers::pi / 180.0, d); }

    constexpr double rad() const { return rad_; }
    constexpr double deg() const { return deg_; }

    constexpr Angle operator-() const { return Angle(-rad_, -deg_); }
    friend constexpr Angle operator+(Angle a, Angle b) { return radians(a.rad_ + b.rad_); }
    friend constexpr Angle operator-(Angle a, Angle b) { return radians(a.rad_ - b.rad_); }
    friend constexpr bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

private:
    constexpr Angle(double r, double d) : rad_(r), deg_(d) {}
    double rad_ = 0.0;
    double deg_ = 0.0;
};

// True when |a| < 90 deg, the admissible range for squint and orientation.
bool is_open_half_turn(Angle a);

class RadarParams {
public:
    // Use make_params() or from_bandwidths(); both validate.
    RadarParams() = delete;

    static RadarParams from_bandwidths(double fc_hz, double v_mps, double ba_hz, double br_hz,
                                       double fdc_hz = 0.0);

    double fc() const { return fc_; }
    double v() const { return v_; }
    double lambda() const { return kSpeedOfLight / fc_; }
    double ba() const { return ba_; }
    double br() const { return br_; }
    double fdc() const { return fdc_; }

    double rho_a() const { return v_ / ba_; }
    double rho_r() const { return kSpeedOfLight / (2.0 * br_); }

    // 2V/lambda: the Doppler reached at 90 deg squint.
    double doppler_scale() const { return 2.0 * v_ / lambda(); }

    double window_lo() const { return fdc_ - 0.5 * ba_; }
    double window_hi() const { return fdc_ + 0.5 * ba_; }

    friend bool operator==(const RadarParams&, const RadarParams&) = default;

private:
    RadarParams(double fc, double v, double ba, double br, double fdc)
        : fc_(fc), v_(v), ba_(ba), br_(br), fdc_(fdc) {}

    double fc_;
    double v_;
    double ba_;
    double br_;
    double fdc_;
};

// B_a = V/rho_a, B_r = c/(2 rho_r). Throws Errc::invalid_parameter.
RadarParams make_params(double fc_hz, double v_mps, double rho_a_m, double rho_r_m,
                        double fdc_hz = 0.0);

// Radar used in the dispersion chart of the reference figure: X-band,
// LEO speed, 0.1 m resolution in both dimensions, broadside.
RadarParams reference_params();

double doppler_from_squint(const RadarParams& p, Angle theta_sq);

// arcsin(lambda f_d / 2V). Throws Errc::out_of_range when |arg| > 1.
Angle squint_from_doppler(const RadarParams& p, double f_d);

bool observable(const RadarParams& p, double f_d);

}  // namespace mwr
