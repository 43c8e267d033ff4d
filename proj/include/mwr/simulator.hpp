// SPDX-License-Identifier: Apache-2.0
//
// Spectrum-domain SAR simulator. A scene is synthesized directly as its
// observed 2D spectrum G(f_a, f_r), one coherent phasor per scatterer and
// sample; focusing is the unitary inverse DFT.
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "mwr/core.hpp"
#include "mwr/scene.hpp"

namespace mwr {

using cdouble = std::complex<double>;

// Na x Nr samples, azimuth-major (row i holds all range frequencies at f_a[i]).
// f_a[i] = f_dc - B_a/2 + i B_a/Na is the absolute Doppler of the row;
// f_r[j] = -B_r/2 + j B_r/Nr.
struct SpectrumGrid {
    RadarParams params;
    std::size_t na = 0;
    std::size_t nr = 0;
    std::vector<cdouble> data;

    SpectrumGrid(const RadarParams& p, std::size_t na_, std::size_t nr_);

    double fa(std::size_t i) const;
    double fr(std::size_t j) const;
    double fa_step() const { return params.ba() / static_cast<double>(na); }
    double fr_step() const { return params.br() / static_cast<double>(nr); }

    cdouble& at(std::size_t i, std::size_t j) { return data[i * nr + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return data[i * nr + j]; }
    std::span<cdouble> row(std::size_t i) { return {data.data() + i * nr, nr}; }
    std::span<const cdouble> row(std::size_t i) const { return {data.data() + i * nr, nr}; }
};

// Same layout as SpectrumGrid. The scene origin sits at pixel (na/2, nr/2):
// t_a[i] = (i - na/2)/B_a, t_r[j] = (j - nr/2)/B_r.
struct ComplexImage {
    RadarParams params;
    std::size_t na = 0;
    std::size_t nr = 0;
    std::vector<cdouble> data;

    ComplexImage(const RadarParams& p, std::size_t na_, std::size_t nr_);

    double ta(std::size_t i) const;
    double tr(std::size_t j) const;
    double azimuth_m(std::size_t i) const { return params.v() * ta(i); }
    double range_m(std::size_t j) const { return 0.5 * kSpeedOfLight * tr(j); }
    double extent_azimuth_m() const { return params.v() * static_cast<double>(na) / params.ba(); }
    double extent_range_m() const { return 0.5 * kSpeedOfLight * static_cast<double>(nr) / params.br(); }

    cdouble& at(std::size_t i, std::size_t j) { return data[i * nr + j]; }
    const cdouble& at(std::size_t i, std::size_t j) const { return data[i * nr + j]; }
};

double energy(std::span<const cdouble> samples);

// Throws Errc::invalid_grid unless na, nr are powers of two >= 8.
void validate_grid_dims(std::size_t na, std::size_t nr);

// G(f_a, f_r) = sum_n amp_n exp(-i 2 pi [f_a u_n + (f_c cos(theta_sq(f_a)) + f_r) v_n]),
// u_n = x_n / V, v_n = 2 y_n / c, theta_sq(f_a) = arcsin(lambda f_a / 2V).
// Throws Errc::aliasing if the scene leaves the unambiguous extents,
// Errc::invalid_window if a row Doppler has no real squint, and
// Errc::invalid_input for an empty scene.
SpectrumGrid synth_spectrum(const Scene& scene, const RadarParams& p, std::size_t na, std::size_t nr);

// Unitary inverse 2D DFT, shifted so the scene origin lands on (na/2, nr/2).
ComplexImage focus_image(const SpectrumGrid& g);

// Squinted point response sampled on the image grid, unit peak at the origin:
// sinc(t_a B_a cos) sinc(t_r B_r cos) exp(i 2 pi (f_c cos t_r + f_dc t_a)).
ComplexImage render_psf(const RadarParams& p, Angle theta_sq, std::size_t na, std::size_t nr);

struct AzimuthSpectrum {
    std::vector<double> fa;     // Hz
    std::vector<double> power;  // sum over range frequencies of |G|^2
    double bin() const { return fa.size() > 1 ? fa[1] - fa[0] : 0.0; }
};

AzimuthSpectrum azimuth_power_spectrum(const SpectrumGrid& g);

// Upper bound on any azimuth_power_spectrum bin: every scatterer in phase in
// every range column, nr * (sum amp)^2.
double coherent_peak_power(const Scene& scene, std::size_t nr);

// Geometric constant K = tan(theta_az) 2V/c.
double geometric_constant(const RadarParams& p, Angle theta_az);

// Array factor |sum_n exp(i 2 pi (f + f_c K cos theta_sq(f)) (n - (N-1)/2) d_u)|
// evaluated by brute force on f_grid; returns local maxima exceeding N/2.
std::vector<double> dirichlet_peaks_oracle(int n_scatterers, double d_u, double k_const,
                                           const RadarParams& p, std::span<const double> f_grid);

// The array factor itself on f_grid (magnitudes), exposed for diagnostics.
std::vector<double> dirichlet_magnitude(int n_scatterers, double d_u, double k_const,
                                        const RadarParams& p, std::span<const double> f_grid);

// Time-domain zero-order response of a continuous line at the target centre:
// |int |sinc(u B_a,eff) sinc(K u B_r,eff)| exp(i 2 pi (f_d + f_c K cos theta_sq) u) du|
// over |u| <= 10 / B_a, for each candidate f_d; returns the argmax.
double zero_order_peak_oracle(Angle theta_az, const RadarParams& p, std::span<const double> f_grid);

std::vector<double> zero_order_response(Angle theta_az, const RadarParams& p,
                                        std::span<const double> f_grid);

}  // namespace mwr
