// SPDX-License-Identifier: Apache-2.0
//
// Text and binary serialization. Every writer is deterministic: numbers use
// the shortest round-trip form, '.' as decimal separator, '\n' line endings.
#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "mwr/analysis.hpp"
#include "mwr/dispersion.hpp"
#include "mwr/simulator.hpp"

namespace mwr {

// Shortest decimal that reads back to the same double; -0 prints as 0.
std::string format_number(double v);

std::string predict_csv(std::span<const DiffractionSolution> rows);
std::string predict3d_csv(const Orientation3D& o, const RadarParams& p);
// Rows: zero_order, order (one per m and squint), then four window rows
// (window low edge, red/green edge, green/blue edge, window high edge).
std::string chart_csv(const ChartData& chart, const RadarParams& p);
std::string azspec_csv(const AzimuthSpectrum& spec);

// One JSON document with a "reports" array, stable key order.
std::string reports_json(std::span<const VerificationReport> reports);

struct SimulationSummary {
    std::string label;
    std::size_t na = 0;
    std::size_t nr = 0;
    std::size_t scatterers = 0;
    double total_energy = 0.0;
    std::array<double, 3> band_energy{};  // red, green, blue
    std::vector<DetectedPeak> peaks;
    std::string normalization;
};

std::string simulation_report_json(const RadarParams& p, const SimulationSummary& s);

// <path>.json header (dims, axes, params) and <path>.bin payload of
// little-endian f64 (re, im) pairs, azimuth-major.
void write_grid(const std::filesystem::path& path, const SpectrumGrid& g);
SpectrumGrid read_grid(const std::filesystem::path& path);
void write_image(const std::filesystem::path& path, const ComplexImage& img);
ComplexImage read_image(const std::filesystem::path& path);

void write_file(const std::filesystem::path& path, std::string_view bytes);
std::string read_file(const std::filesystem::path& path);

}  // namespace mwr
