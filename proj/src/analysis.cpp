// SPDX-License-Identifier: Apache-2.0
#include "mwr/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "mwr/error.hpp"

namespace mwr {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

std::vector<DetectedPeak> detect_peaks(const AzimuthSpectrum& spec, double threshold) {
    std::vector<DetectedPeak> peaks;
    const auto& pw = spec.power;
    for (std::size_t i = 0; i < pw.size(); ++i) {
        // Strict on the left, non-strict on the right: a flat top reports once.
        const bool left = i == 0 || pw[i] > pw[i - 1];
        const bool right = i + 1 == pw.size() || pw[i] >= pw[i + 1];
        if (left && right && pw[i] > threshold) {
            peaks.push_back({i, spec.fa[i], pw[i]});
        }
    }
    return peaks;
}

VerificationReport match_predictions(const AzimuthSpectrum& spec, double threshold,
                                     std::span<const DiffractionSolution> predictions,
                                     double tol_bins) {
    if (predictions.empty()) {
        throw Error(Errc::invalid_input, "verification needs at least one prediction");
    }
    VerificationReport rep;
    rep.predictions.assign(predictions.begin(), predictions.end());
    rep.peaks = detect_peaks(spec, threshold);
    rep.tol_bins = tol_bins;
    rep.bin_hz = spec.bin();
    rep.threshold = threshold;

    std::vector<bool> used(rep.peaks.size(), false);
    for (const DiffractionSolution& s : predictions) {
        if (!s.observable) {
            continue;
        }
        double best = kInf;
        std::size_t best_k = rep.peaks.size();
        double nearest = kInf;
        for (std::size_t k = 0; k < rep.peaks.size(); ++k) {
            const double d = std::abs(rep.peaks[k].f_d - s.f_d) / rep.bin_hz;
            nearest = std::min(nearest, d);
            if (!used[k] && d < best) {
                best = d;
                best_k = k;
            }
        }
        rep.nearest_peak_bins.push_back(nearest);
        if (best_k < rep.peaks.size() && best <= tol_bins) {
            used[best_k] = true;
            rep.matches.push_back({s.m, s.f_d, rep.peaks[best_k].f_d, best});
        } else {
            ++rep.unmatched_predictions;
        }
    }

    for (std::size_t k = 0; k < rep.peaks.size(); ++k) {
        if (used[k]) {
            continue;
        }
        // A second peak of the same order (e.g. a split top) is still explained.
        const bool explained = std::any_of(predictions.begin(), predictions.end(), [&](const auto& s) {
            return s.observable && std::abs(rep.peaks[k].f_d - s.f_d) / rep.bin_hz <= tol_bins;
        });
        if (!explained) {
            ++rep.unmatched_peaks;
        }
    }
    rep.pass = rep.unmatched_predictions == 0 && rep.unmatched_peaks == 0;
    return rep;
}

VerificationReport verify_scene_against_model(const Scene& scene, const RadarParams& p,
                                              std::span<const DiffractionSolution> predictions,
                                              const VerifyOptions& opt) {
    if (predictions.empty()) {
        throw Error(Errc::invalid_input, "verification needs at least one prediction");
    }
    const SpectrumGrid g = synth_spectrum(scene, p, opt.na, opt.nr);
    const AzimuthSpectrum spec = azimuth_power_spectrum(g);
    const double threshold = opt.threshold_fraction * coherent_peak_power(scene, opt.nr);
    VerificationReport rep = match_predictions(spec, threshold, predictions, opt.tol_bins);
    rep.label = scene.label;
    return rep;
}

std::optional<std::vector<DiffractionSolution>> predictions_for_target(const TargetSpec& spec,
                                                                       const RadarParams& p) {
    if (const auto* line = std::get_if<LineSpec>(&spec)) {
        return orders_in_window(GratingTarget{line->theta_az, std::nullopt}, p, 0, 0);
    }
    if (const auto* arr = std::get_if<ArraySpec>(&spec)) {
        const int m_max = static_cast<int>(std::floor(2.0 * arr->d_x / p.lambda())) + 1;
        return orders_in_window(GratingTarget{arr->theta_az, arr->d_x}, p, -m_max, m_max);
    }
    if (const auto* seg = std::get_if<Segment3DSpec>(&spec)) {
        const Angle theta_az = -effective_squint_3d(seg->orientation);
        return orders_in_window(GratingTarget{theta_az, std::nullopt}, p, 0, 0);
    }
    return std::nullopt;
}

OrientationMap estimate_orientation_map(const MagnitudeImage& r, const MagnitudeImage& g,
                                        const MagnitudeImage& b, const RadarParams& p,
                                        double noise_floor) {
    if (r.na != g.na || r.na != b.na || r.nr != g.nr || r.nr != b.nr ||
        r.data.size() != r.na * r.nr || g.data.size() != r.data.size() ||
        b.data.size() != r.data.size()) {
        throw Error(Errc::invalid_input, "band images must share dimensions");
    }
    const std::size_t n = r.data.size();
    OrientationMap map;
    map.na = r.na;
    map.nr = r.nr;
    map.f_hat.assign(n, kNaN);
    map.theta_az_deg.assign(n, kNaN);
    map.total_energy.resize(n);
    map.valid.assign(n, 0);

    const auto bands = subband_specs(p);
    std::array<double, 3> centre{};
    for (std::size_t k = 0; k < 3; ++k) {
        centre[k] = 0.5 * (bands[k].f_lo + bands[k].f_hi);
    }

    double peak = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = r.data[k] * r.data[k] + g.data[k] * g.data[k] + b.data[k] * b.data[k];
        map.total_energy[k] = e;
        peak = std::max(peak, e);
    }
    if (!(peak > 0.0)) {
        return map;
    }
    const double floor_e = noise_floor * peak;
    for (std::size_t k = 0; k < n; ++k) {
        const double e = map.total_energy[k];
        if (!(e > floor_e)) {
            continue;
        }
        const double f = (centre[0] * r.data[k] * r.data[k] + centre[1] * g.data[k] * g.data[k] +
                          centre[2] * b.data[k] * b.data[k]) /
                         e;
        map.f_hat[k] = f;
        map.theta_az_deg[k] = invert_orientation_from_doppler(p, f).deg();
        map.valid[k] = 1;
    }
    return map;
}

double median(std::vector<double> values) {
    if (values.empty()) {
        throw Error(Errc::invalid_input, "median of an empty set");
    }
    const std::size_t mid = values.size() / 2;
    std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
    const double hi = values[mid];
    if (values.size() % 2 == 1) {
        return hi;
    }
    const double lo = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
    return 0.5 * (lo + hi);
}

std::optional<double> median_orientation_deg(const OrientationMap& map) {
    std::vector<double> vals;
    for (std::size_t k = 0; k < map.valid.size(); ++k) {
        if (map.valid[k]) {
            vals.push_back(map.theta_az_deg[k]);
        }
    }
    if (vals.empty()) {
        return std::nullopt;
    }
    return median(std::move(vals));
}

std::vector<double> azimuth_doppler_profile(const OrientationMap& map, std::size_t i_lo,
                                            std::size_t i_hi, std::size_t n_slices) {
    if (i_hi > map.na || i_lo >= i_hi || n_slices == 0) {
        throw Error(Errc::invalid_input, "bad azimuth slice range");
    }
    std::vector<double> out;
    const std::size_t span = i_hi - i_lo;
    for (std::size_t s = 0; s < n_slices; ++s) {
        const std::size_t a = i_lo + s * span / n_slices;
        const std::size_t z = i_lo + (s + 1) * span / n_slices;
        double num = 0.0;
        double den = 0.0;
        for (std::size_t i = a; i < z; ++i) {
            for (std::size_t j = 0; j < map.nr; ++j) {
                const std::size_t k = map.index(i, j);
                if (map.valid[k]) {
                    num += map.f_hat[k] * map.total_energy[k];
                    den += map.total_energy[k];
                }
            }
        }
        if (den > 0.0) {
            out.push_back(num / den);
        }
    }
    return out;
}

}  // namespace mwr
