// SPDX-License-Identifier: Apache-2.0
#include "mwr/csi.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mwr/error.hpp"
#include "parallel.hpp"

namespace mwr {

namespace {

int band_index(Hue h) {
    switch (h) {
        case Hue::Red: return 0;
        case Hue::Green: return 1;
        case Hue::Blue: return 2;
        case Hue::OutOfWindow: break;
    }
    return -1;
}

std::uint8_t to_byte(double v) {
    // v in [0, 1]; round half up.
    const double scaled = std::floor(std::clamp(v, 0.0, 1.0) * 255.0 + 0.5);
    return static_cast<std::uint8_t>(scaled);
}

}  // namespace

std::array<SubBandSpec, 3> subband_specs(const RadarParams& p) {
    const double third = p.ba() / 3.0;
    const double lo = p.window_lo();
    return {SubBandSpec{Hue::Red, lo, p.fdc() - 0.5 * third},
            SubBandSpec{Hue::Green, p.fdc() - 0.5 * third, p.fdc() + 0.5 * third},
            SubBandSpec{Hue::Blue, p.fdc() + 0.5 * third, p.window_hi()}};
}

std::array<std::size_t, 3> subband_bin_counts(const SpectrumGrid& g) {
    std::array<std::size_t, 3> counts{};
    for (std::size_t i = 0; i < g.na; ++i) {
        const int b = band_index(classify_hue(g.params, g.fa(i)));
        if (b >= 0) {
            ++counts[static_cast<std::size_t>(b)];
        }
    }
    return counts;
}

SubBandImages split_subbands(const SpectrumGrid& g) {
    validate_grid_dims(g.na, g.nr);
    const auto counts = subband_bin_counts(g);
    for (std::size_t b = 0; b < 3; ++b) {
        if (counts[b] == 0) {
            throw Error(Errc::invalid_grid, "sub-band " + std::to_string(b) + " has no azimuth bins");
        }
    }

    std::array<SpectrumGrid, 3> masked{SpectrumGrid(g.params, g.na, g.nr),
                                       SpectrumGrid(g.params, g.na, g.nr),
                                       SpectrumGrid(g.params, g.na, g.nr)};
    for (std::size_t i = 0; i < g.na; ++i) {
        const int b = band_index(classify_hue(g.params, g.fa(i)));
        if (b < 0) {
            continue;
        }
        const auto src = g.row(i);
        std::copy(src.begin(), src.end(), masked[static_cast<std::size_t>(b)].row(i).begin());
    }
    return {focus_image(masked[0]), focus_image(masked[1]), focus_image(masked[2])};
}

MagnitudeImage magnitude(const ComplexImage& img) {
    MagnitudeImage out{img.na, img.nr, std::vector<double>(img.data.size())};
    std::transform(img.data.begin(), img.data.end(), out.data.begin(),
                   [](const cdouble& z) { return std::abs(z); });
    return out;
}

RGBImage compose_rgb(const MagnitudeImage& r, const MagnitudeImage& g, const MagnitudeImage& b,
                     Normalization norm) {
    if (r.na != g.na || r.na != b.na || r.nr != g.nr || r.nr != b.nr ||
        r.data.size() != r.na * r.nr || g.data.size() != r.data.size() ||
        b.data.size() != r.data.size()) {
        throw Error(Errc::invalid_input, "band images must share dimensions");
    }

    double scale = 0.0;
    if (norm == Normalization::linear) {
        for (const auto* ch : {&r, &g, &b}) {
            for (double v : ch->data) {
                scale = std::max(scale, v);
            }
        }
    } else {
        std::vector<double> all;
        all.reserve(3 * r.data.size());
        for (const auto* ch : {&r, &g, &b}) {
            all.insert(all.end(), ch->data.begin(), ch->data.end());
        }
        if (!all.empty()) {
            const auto k = static_cast<std::size_t>(std::ceil(0.999 * static_cast<double>(all.size()))) - 1;
            std::nth_element(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k), all.end());
            scale = all[k];
        }
    }

    RGBImage out;
    out.width = r.na;
    out.height = r.nr;
    out.pixels.assign(3 * r.data.size(), 0);
    if (!(scale > 0.0)) {
        return out;
    }
    const double inv = 1.0 / scale;
    detail::parallel_for(out.height, [&](std::size_t begin, std::size_t end) {
        for (std::size_t y = begin; y < end; ++y) {
            for (std::size_t x = 0; x < out.width; ++x) {
                const std::size_t src = x * r.nr + y;
                const std::size_t dst = 3 * (y * out.width + x);
                out.pixels[dst] = to_byte(r.data[src] * inv);
                out.pixels[dst + 1] = to_byte(g.data[src] * inv);
                out.pixels[dst + 2] = to_byte(b.data[src] * inv);
            }
        }
    });
    return out;
}

std::string encode_ppm(const RGBImage& img) {
    std::string out = "P6\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    return out;
}

}  // namespace mwr
