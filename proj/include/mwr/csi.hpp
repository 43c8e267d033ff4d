// SPDX-License-Identifier: Apache-2.0
//
// Colorized sub-aperture images: the azimuth spectrum is cut into three
// contiguous Doppler bands which are focused separately and painted R, G, B.
#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mwr/dispersion.hpp"
#include "mwr/simulator.hpp"

namespace mwr {

struct SubBandSpec {
    Hue band = Hue::Red;
    double f_lo = 0.0;  // Hz
    double f_hi = 0.0;  // Hz
};

// Red, Green, Blue from low to high Doppler; the three tile the window.
std::array<SubBandSpec, 3> subband_specs(const RadarParams& p);

// Bin i of g belongs to classify_hue(g.fa(i)).
std::array<std::size_t, 3> subband_bin_counts(const SpectrumGrid& g);

struct SubBandImages {
    ComplexImage red;
    ComplexImage green;
    ComplexImage blue;
};

// Rectangular azimuth masks, range band untouched, each focused with
// focus_image. Throws Errc::invalid_grid if any band receives no bins.
SubBandImages split_subbands(const SpectrumGrid& g);

struct MagnitudeImage {
    std::size_t na = 0;
    std::size_t nr = 0;
    std::vector<double> data;  // azimuth-major like ComplexImage

    double at(std::size_t i, std::size_t j) const { return data[i * nr + j]; }
};

MagnitudeImage magnitude(const ComplexImage& img);

enum class Normalization { linear, clip_p999 };

// width = Na (azimuth, x), height = Nr (range, y); pixels row-major in y.
struct RGBImage {
    std::size_t width = 0;
    std::size_t height = 0;
    std::vector<std::uint8_t> pixels;  // 3 * width * height

    std::array<std::uint8_t, 3> pixel(std::size_t x, std::size_t y) const {
        const std::size_t k = 3 * (y * width + x);
        return {pixels[k], pixels[k + 1], pixels[k + 2]};
    }
    friend bool operator==(const RGBImage&, const RGBImage&) = default;
};

// Joint normalization by the max over all channels (linear) or by the joint
// 99.9th percentile with clipping; 8-bit with round-half-up.
RGBImage compose_rgb(const MagnitudeImage& r, const MagnitudeImage& g, const MagnitudeImage& b,
                     Normalization norm = Normalization::linear);

std::string encode_ppm(const RGBImage& img);

}  // namespace mwr
