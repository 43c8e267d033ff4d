// SPDX-License-Identifier: Apache-2.0
#include "mwr/simulator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <mutex>
#include <numbers>
#include <string>

#include <fftw3.h>

#include "mwr/error.hpp"
#include "mwr/kernels.hpp"
#include "parallel.hpp"

namespace mwr {

namespace {

constexpr double kPi = std::numbers::pi;

double sinc(double x) {
    if (x == 0.0) {
        return 1.0;
    }
    const double px = kPi * x;
    return std::sin(px) / px;
}

// FFTW planning is not thread-safe.
std::mutex& fftw_planner_mutex() {
    static std::mutex m;
    return m;
}

}  // namespace

SpectrumGrid::SpectrumGrid(const RadarParams& p, std::size_t na_, std::size_t nr_)
    : params(p), na(na_), nr(nr_), data(na_ * nr_) {}

double SpectrumGrid::fa(std::size_t i) const {
    return params.window_lo() + static_cast<double>(i) * fa_step();
}

double SpectrumGrid::fr(std::size_t j) const {
    return -0.5 * params.br() + static_cast<double>(j) * fr_step();
}

ComplexImage::ComplexImage(const RadarParams& p, std::size_t na_, std::size_t nr_)
    : params(p), na(na_), nr(nr_), data(na_ * nr_) {}

double ComplexImage::ta(std::size_t i) const {
    return (static_cast<double>(i) - 0.5 * static_cast<double>(na)) / params.ba();
}

double ComplexImage::tr(std::size_t j) const {
    return (static_cast<double>(j) - 0.5 * static_cast<double>(nr)) / params.br();
}

double energy(std::span<const cdouble> samples) { return kernels::energy(samples); }

void validate_grid_dims(std::size_t na, std::size_t nr) {
    if (na < 8 || nr < 8 || !std::has_single_bit(na) || !std::has_single_bit(nr)) {
        throw Error(Errc::invalid_grid, "grid dimensions must be powers of two >= 8, got " +
                                            std::to_string(na) + " x " + std::to_string(nr));
    }
}

SpectrumGrid synth_spectrum(const Scene& scene, const RadarParams& p, std::size_t na, std::size_t nr) {
    validate_grid_dims(na, nr);
    if (scene.scatterers.empty()) {
        throw Error(Errc::invalid_input, "cannot simulate an empty scene");
    }

    const double half_az = 0.5 * p.v() * static_cast<double>(na) / p.ba();
    const double half_rg = 0.5 * 0.5 * kSpeedOfLight * static_cast<double>(nr) / p.br();
    for (const Scatterer& s : scene.scatterers) {
        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !(std::abs(s.x) < half_az) ||
            !(std::abs(s.y) < half_rg)) {
            throw Error(Errc::aliasing,
                        "scatterer at (" + std::to_string(s.x) + ", " + std::to_string(s.y) +
                            ") m lies outside the unambiguous extent +-(" +
                            std::to_string(half_az) + ", " + std::to_string(half_rg) + ") m");
        }
    }

    SpectrumGrid g(p, na, nr);
    for (std::size_t i : {std::size_t{0}, na - 1}) {
        if (std::abs(g.fa(i) / p.doppler_scale()) > 1.0) {
            throw Error(Errc::invalid_window, "azimuth frequency " + std::to_string(g.fa(i)) +
                                                  " Hz has no real squint angle");
        }
    }

    const std::size_t n = scene.scatterers.size();
    std::vector<double> u(n);
    std::vector<double> v(n);
    std::vector<double> amp(n);
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = scene.scatterers[k].x / p.v();
        v[k] = 2.0 * scene.scatterers[k].y / kSpeedOfLight;
        amp[k] = scene.scatterers[k].amp;
    }
    const double fr0 = g.fr(0);
    const double dfr = g.fr_step();

    detail::parallel_for(na, [&](std::size_t begin, std::size_t end) {
        std::vector<double> base(n);
        std::vector<double> step(n);
        for (std::size_t i = begin; i < end; ++i) {
            const double fa = g.fa(i);
            const double carrier = p.fc() * std::cos(std::asin(fa / p.doppler_scale()));
            for (std::size_t k = 0; k < n; ++k) {
                base[k] = fa * u[k] + (carrier + fr0) * v[k];
                step[k] = dfr * v[k];
            }
            kernels::phasor_sum(base, step, amp, g.row(i));
        }
    });
    return g;
}

ComplexImage focus_image(const SpectrumGrid& g) {
    validate_grid_dims(g.na, g.nr);
    ComplexImage img(g.params, g.na, g.nr);
    std::vector<cdouble> work(g.data);

    auto* buf = reinterpret_cast<fftw_complex*>(work.data());
    fftw_plan plan = nullptr;
    {
        std::lock_guard lock(fftw_planner_mutex());
        plan = fftw_plan_dft_2d(static_cast<int>(g.na), static_cast<int>(g.nr), buf, buf,
                                FFTW_BACKWARD, FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(fftw_planner_mutex());
        fftw_destroy_plan(plan);
    }

    const double scale = 1.0 / std::sqrt(static_cast<double>(g.na * g.nr));
    const std::size_t ha = g.na / 2;
    const std::size_t hr = g.nr / 2;
    for (std::size_t i = 0; i < g.na; ++i) {
        const std::size_t si = (i + ha) % g.na;
        for (std::size_t j = 0; j < g.nr; ++j) {
            const std::size_t sj = (j + hr) % g.nr;
            img.at(i, j) = work[si * g.nr + sj] * scale;
        }
    }
    return img;
}

ComplexImage render_psf(const RadarParams& p, Angle theta_sq, std::size_t na, std::size_t nr) {
    validate_grid_dims(na, nr);
    if (!is_open_half_turn(theta_sq)) {
        throw Error(Errc::invalid_parameter, "squint must lie in (-90, 90) deg");
    }
    ComplexImage img(p, na, nr);
    const double c = std::cos(theta_sq.rad());
    const double ba_eff = p.ba() * c;
    const double br_eff = p.br() * c;
    const double carrier = p.fc() * c;
    std::vector<double> az(na);
    std::vector<cdouble> az_phase(na);
    for (std::size_t i = 0; i < na; ++i) {
        const double ta = img.ta(i);
        az[i] = sinc(ta * ba_eff);
        az_phase[i] = std::polar(1.0, 2.0 * kPi * p.fdc() * ta);
    }
    for (std::size_t j = 0; j < nr; ++j) {
        const double tr = img.tr(j);
        // Reduce the carrier phase in cycles before scaling by 2 pi.
        const double cycles = carrier * tr;
        const cdouble rg = sinc(tr * br_eff) *
                           std::polar(1.0, 2.0 * kPi * (cycles - std::nearbyint(cycles)));
        for (std::size_t i = 0; i < na; ++i) {
            img.at(i, j) = az[i] * az_phase[i] * rg;
        }
    }
    return img;
}

AzimuthSpectrum azimuth_power_spectrum(const SpectrumGrid& g) {
    AzimuthSpectrum out;
    out.fa.resize(g.na);
    out.power.resize(g.na);
    detail::parallel_for(g.na, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out.fa[i] = g.fa(i);
            out.power[i] = kernels::energy(g.row(i));
        }
    });
    return out;
}

double coherent_peak_power(const Scene& scene, std::size_t nr) {
    double sum = 0.0;
    for (const Scatterer& s : scene.scatterers) {
        sum += s.amp;
    }
    return static_cast<double>(nr) * sum * sum;
}

double geometric_constant(const RadarParams& p, Angle theta_az) {
    return std::tan(theta_az.rad()) * 2.0 * p.v() / kSpeedOfLight;
}

std::vector<double> dirichlet_magnitude(int n_scatterers, double d_u, double k_const,
                                        const RadarParams& p, std::span<const double> f_grid) {
    if (n_scatterers < 2 || !(d_u > 0.0)) {
        throw Error(Errc::invalid_parameter, "Dirichlet oracle needs N >= 2 and d_u > 0");
    }
    const double centre = 0.5 * (n_scatterers - 1);
    std::vector<double> mag(f_grid.size());
    for (std::size_t i = 0; i < f_grid.size(); ++i) {
        const double f = f_grid[i];
        const double sq = std::asin(f / p.doppler_scale());
        const double per_element = (f + p.fc() * k_const * std::cos(sq)) * d_u;  // cycles
        cdouble acc = 0.0;
        for (int n = 0; n < n_scatterers; ++n) {
            const double cycles = per_element * (n - centre);
            acc += std::polar(1.0, 2.0 * kPi * (cycles - std::nearbyint(cycles)));
        }
        mag[i] = std::abs(acc);
    }
    return mag;
}

std::vector<double> dirichlet_peaks_oracle(int n_scatterers, double d_u, double k_const,
                                           const RadarParams& p, std::span<const double> f_grid) {
    const std::vector<double> mag = dirichlet_magnitude(n_scatterers, d_u, k_const, p, f_grid);
    const double threshold = 0.5 * n_scatterers;
    std::vector<double> peaks;
    for (std::size_t i = 0; i < mag.size(); ++i) {
        const bool left = i == 0 || mag[i] > mag[i - 1];
        const bool right = i + 1 == mag.size() || mag[i] >= mag[i + 1];
        if (left && right && mag[i] > threshold) {
            peaks.push_back(f_grid[i]);
        }
    }
    return peaks;
}

std::vector<double> zero_order_response(Angle theta_az, const RadarParams& p,
                                        std::span<const double> f_grid) {
    if (!is_open_half_turn(theta_az)) {
        throw Error(Errc::invalid_parameter, "theta_az must lie in (-90, 90) deg");
    }
    const double k_const = geometric_constant(p, theta_az);
    // 20 azimuth resolution cells of support, composite Simpson.
    const double half_support = 10.0 / p.ba();
    constexpr int kIntervals = 8000;
    const double h = 2.0 * half_support / kIntervals;

    std::vector<double> out(f_grid.size());
    for (std::size_t i = 0; i < f_grid.size(); ++i) {
        const double f_d = f_grid[i];
        const double cos_sq = std::cos(std::asin(f_d / p.doppler_scale()));
        const double ba_eff = p.ba() * cos_sq;
        const double br_eff = p.br() * cos_sq;
        const double f_prime = f_d + p.fc() * k_const * cos_sq;
        cdouble acc = 0.0;
        for (int s = 0; s <= kIntervals; ++s) {
            const double u = -half_support + s * h;
            const double w = (s == 0 || s == kIntervals) ? 1.0 : (s % 2 ? 4.0 : 2.0);
            const double env = std::abs(sinc(u * ba_eff) * sinc(k_const * u * br_eff));
            acc += w * env * std::polar(1.0, 2.0 * kPi * f_prime * u);
        }
        out[i] = std::abs(acc) * h / 3.0;
    }
    return out;
}

double zero_order_peak_oracle(Angle theta_az, const RadarParams& p, std::span<const double> f_grid) {
    if (f_grid.empty()) {
        throw Error(Errc::invalid_input, "empty frequency grid");
    }
    const std::vector<double> r = zero_order_response(theta_az, p, f_grid);
    return f_grid[static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin())];
}

}  // namespace mwr
