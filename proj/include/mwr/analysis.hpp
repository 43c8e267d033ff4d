// SPDX-License-Identifier: Apache-2.0
//
// Closing the loop: simulated spectral peaks against analytic orders, and
// sub-band energies back to orientation.
#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mwr/csi.hpp"
#include "mwr/dispersion.hpp"
#include "mwr/scene.hpp"
#include "mwr/simulator.hpp"

namespace mwr {

struct DetectedPeak {
    std::size_t bin = 0;
    double f_d = 0.0;  // Hz
    double power = 0.0;
};

// Local maxima (edges count) with power > threshold, ascending in frequency.
std::vector<DetectedPeak> detect_peaks(const AzimuthSpectrum& spec, double threshold);

struct OrderMatch {
    int m = 0;
    double predicted_f_d = 0.0;
    double peak_f_d = 0.0;
    double bin_distance = 0.0;
};

struct VerificationReport {
    std::string label;
    std::vector<DiffractionSolution> predictions;
    std::vector<DetectedPeak> peaks;
    std::vector<OrderMatch> matches;
    // Per observable prediction, in order: distance in bins to the nearest
    // detected peak (infinite if nothing was detected).
    std::vector<double> nearest_peak_bins;
    std::size_t unmatched_predictions = 0;
    std::size_t unmatched_peaks = 0;
    double tol_bins = 2.0;
    double bin_hz = 0.0;
    double threshold = 0.0;
    bool pass = false;
};

struct VerifyOptions {
    double tol_bins = 2.0;
    std::size_t na = 2048;
    std::size_t nr = 256;
    // Detection threshold as a fraction of the coherent peak power
    // nr * (sum amp)^2, the largest value any marginal bin can take.
    double threshold_fraction = 0.5;
};

VerificationReport verify_scene_against_model(const Scene& scene, const RadarParams& p,
                                              std::span<const DiffractionSolution> predictions,
                                              const VerifyOptions& opt = {});

// Same matching on an already computed marginal spectrum.
VerificationReport match_predictions(const AzimuthSpectrum& spec, double threshold,
                                     std::span<const DiffractionSolution> predictions,
                                     double tol_bins);

// Analytic orders for a single target, or nothing for curved targets whose
// response is spread over a range of Doppler.
std::optional<std::vector<DiffractionSolution>> predictions_for_target(const TargetSpec& spec,
                                                                       const RadarParams& p);

struct OrientationMap {
    std::size_t na = 0;
    std::size_t nr = 0;
    std::vector<double> f_hat;          // Hz, NaN where masked
    std::vector<double> theta_az_deg;   // NaN where masked
    std::vector<double> total_energy;   // sum of the three band energies
    std::vector<std::uint8_t> valid;

    std::size_t index(std::size_t i, std::size_t j) const { return i * nr + j; }
};

// Per pixel: f_hat = sum(centre_b E_b) / sum(E_b) with band centres at the
// middle of each third, then theta_az = invert_orientation_from_doppler.
// Pixels with total energy <= noise_floor * max are masked.
OrientationMap estimate_orientation_map(const MagnitudeImage& r, const MagnitudeImage& g,
                                        const MagnitudeImage& b, const RadarParams& p,
                                        double noise_floor = 0.01);

// Median of theta_az_deg over valid pixels; nullopt if all are masked.
std::optional<double> median_orientation_deg(const OrientationMap& map);

// Energy-weighted f_hat over valid pixels in each of n equal azimuth slices
// of [i_lo, i_hi); slices without valid pixels are omitted.
std::vector<double> azimuth_doppler_profile(const OrientationMap& map, std::size_t i_lo,
                                            std::size_t i_hi, std::size_t n_slices);

double median(std::vector<double> values);

}  // namespace mwr
