// SPDX-License-Identifier: Apache-2.0
//
// Point-scatterer scenes in the (azimuth x, slant-range y) imaging plane,
// built from geometric primitives. Every generator centres its output on the
// grid origin and is deterministic.
#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "mwr/core.hpp"
#include "mwr/dispersion.hpp"

namespace mwr {

struct Scatterer {
    double x = 0.0;    // azimuth, m
    double y = 0.0;    // slant-range offset, m
    double amp = 1.0;

    friend bool operator==(const Scatterer&, const Scatterer&) = default;
};

struct Scene {
    std::vector<Scatterer> scatterers;
    std::string label;
    std::string provenance;  // generator name + parameters
};

// Straight segment through the origin, y = x tan(theta_az).
struct LineSpec {
    Angle theta_az;
    double length = 0.0;   // m, along the line
    double spacing = 0.0;  // m, along the line (upper bound; snapped to divide length)
    double amp = 1.0;

    friend bool operator==(const LineSpec&, const LineSpec&) = default;
};

// N points on the same line as LineSpec, d_x apart in azimuth.
struct ArraySpec {
    Angle theta_az;
    double d_x = 0.0;
    int count = 0;
    double amp = 1.0;

    friend bool operator==(const ArraySpec&, const ArraySpec&) = default;
};

// Circular arc whose tangent sweeps [tangent_min, tangent_max].
struct ArcSpec {
    double radius = 0.0;
    Angle tangent_min;
    Angle tangent_max;
    double spacing = 0.0;  // m, along the arc (upper bound)
    double amp = 1.0;

    friend bool operator==(const ArcSpec&, const ArcSpec&) = default;
};

// Hanging cable y3(x) = a cosh(x/a) - a over |x| <= half_span, seen at
// incidence theta_inc; the span runs at horizontal angle theta_h.
struct CatenarySpec {
    double a = 0.0;
    double half_span = 0.0;
    double spacing = 0.0;  // m, along the horizontal span (upper bound)
    Angle theta_inc;
    Angle theta_h;
    double amp = 1.0;

    friend bool operator==(const CatenarySpec&, const CatenarySpec&) = default;
};

// Straight 3D segment projected into the imaging plane.
struct Segment3DSpec {
    Orientation3D orientation;
    double length = 0.0;
    double spacing = 0.0;
    double amp = 1.0;

    friend bool operator==(const Segment3DSpec&, const Segment3DSpec&) = default;
};

using TargetSpec = std::variant<LineSpec, ArraySpec, ArcSpec, CatenarySpec, Segment3DSpec>;

const char* kind_name(const TargetSpec& spec);

// Throws Errc::config on invalid kind-specific parameters.
Scene generate_scene(const TargetSpec& spec);

Scene project_segment_3d(const Orientation3D& o, double length, double spacing, double amp = 1.0);

// All scatterers of `parts` in order; labels joined with '+'.
Scene merge_scenes(const std::vector<Scene>& parts);

struct GridSpec {
    std::size_t na = 2048;
    std::size_t nr = 256;

    friend bool operator==(const GridSpec&, const GridSpec&) = default;
};

// Radar block as written in the config (raw inputs, kept for re-emission).
struct RadarConfig {
    double fc_hz = 9.6e9;
    double v_mps = 7600.0;
    double rho_a_m = 0.1;
    double rho_r_m = 0.1;
    double fdc_hz = 0.0;

    RadarParams params() const { return make_params(fc_hz, v_mps, rho_a_m, rho_r_m, fdc_hz); }
    friend bool operator==(const RadarConfig&, const RadarConfig&) = default;
};

struct TargetConfig {
    TargetSpec spec;
    std::string label;
};

struct SceneConfig {
    RadarConfig radar;
    GridSpec grid;
    std::vector<TargetConfig> targets;

    RadarParams params() const { return radar.params(); }
    std::vector<Scene> scenes() const;
};

// Strict JSON scene configuration. Throws Errc::parse (with line/column) for
// malformed JSON and Errc::config naming the offending field otherwise.
SceneConfig parse_scene_config(std::string_view text);

// Emits a config that parse_scene_config() reads back to an equal structure.
std::string serialize_scene_config(const SceneConfig& cfg);

bool operator==(const TargetConfig& a, const TargetConfig& b);

}  // namespace mwr
