// SPDX-License-Identifier: Apache-2.0
#include "mwr/scene.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "mwr/error.hpp"

namespace mwr {

namespace {

[[noreturn]] void config_error(const std::string& what) { throw Error(Errc::config, what); }

void require_positive(double v, const char* field) {
    if (!(v > 0.0) || !std::isfinite(v)) {
        config_error(std::string(field) + " must be positive and finite");
    }
}

void require_amp(double amp) {
    if (!(amp >= 0.0) || !std::isfinite(amp)) {
        config_error("amp must be non-negative and finite");
    }
}

void require_half_turn(Angle a, const char* field) {
    if (!is_open_half_turn(a)) {
        config_error(std::string(field) + " must lie in (-90, 90) deg");
    }
}

// Number of equal steps of at most `spacing` that cover `length`.
std::size_t step_count(double length, double spacing) {
    const double n = std::ceil(length / spacing * (1.0 - 1e-12));
    if (!(n < 1e8)) {
        config_error("sample spacing too small for the requested extent");
    }
    return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

std::string fmt(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

Scene make_line(Angle theta_az, double length, double spacing, double amp) {
    require_half_turn(theta_az, "theta_az");
    require_positive(length, "length");
    require_positive(spacing, "spacing");
    require_amp(amp);

    const std::size_t n = step_count(length, spacing);
    const double step = length / static_cast<double>(n);
    const double c = std::cos(theta_az.rad());
    const double s = std::sin(theta_az.rad());

    Scene scene;
    scene.scatterers.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        // Symmetric about the origin by construction.
        const double t = (static_cast<double>(i) - 0.5 * static_cast<double>(n)) * step;
        scene.scatterers.push_back({t * c, t * s, amp});
    }
    scene.provenance = fmt("line(theta_az=%.17g deg, length=%.17g m, spacing=%.17g m)",
                           theta_az.deg(), length, spacing);
    return scene;
}

Scene make_array(const ArraySpec& a) {
    require_half_turn(a.theta_az, "theta_az");
    require_positive(a.d_x, "dx");
    require_amp(a.amp);
    if (a.count < 2) {
        config_error("array needs n >= 2 scatterers");
    }
    const double t = std::tan(a.theta_az.rad());
    Scene scene;
    scene.scatterers.reserve(static_cast<std::size_t>(a.count));
    for (int i = 0; i < a.count; ++i) {
        const double x = (i - 0.5 * (a.count - 1)) * a.d_x;
        scene.scatterers.push_back({x, x * t, a.amp});
    }
    scene.provenance = fmt("array(theta_az=%.17g deg, dx=%.17g m, n=%d)", a.theta_az.deg(), a.d_x,
                           a.count);
    return scene;
}

Scene make_arc(const ArcSpec& a) {
    require_positive(a.radius, "radius");
    require_positive(a.spacing, "spacing");
    require_half_turn(a.tangent_min, "tangent_min");
    require_half_turn(a.tangent_max, "tangent_max");
    require_amp(a.amp);
    if (!(a.tangent_min.rad() < a.tangent_max.rad())) {
        config_error("arc needs tangent_min < tangent_max");
    }
    const double lo = a.tangent_min.rad();
    const double hi = a.tangent_max.rad();
    const double mid = 0.5 * (lo + hi);
    const std::size_t n = step_count(a.radius * (hi - lo), a.spacing);

    // (R sin phi, -R cos phi) has tangent direction phi; shift so the arc
    // midpoint sits on the origin.
    const double x0 = a.radius * std::sin(mid);
    const double y0 = -a.radius * std::cos(mid);
    Scene scene;
    scene.scatterers.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        const double phi = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n);
        scene.scatterers.push_back(
            {a.radius * std::sin(phi) - x0, -a.radius * std::cos(phi) - y0, a.amp});
    }
    scene.provenance = fmt("arc(radius=%.17g m, tangents=[%.17g, %.17g] deg, spacing=%.17g m)",
                           a.radius, a.tangent_min.deg(), a.tangent_max.deg(), a.spacing);
    return scene;
}

Scene make_catenary(const CatenarySpec& c) {
    require_positive(c.a, "a");
    require_positive(c.half_span, "half_span");
    require_positive(c.spacing, "spacing");
    require_half_turn(c.theta_h, "theta_h");
    require_amp(c.amp);
    if (!(c.theta_inc.rad() > 0.0 && c.theta_inc.rad() < std::numbers::pi / 2.0)) {
        config_error("theta_inc must lie in (0, 90) deg");
    }
    if (!std::isfinite(std::sinh(c.half_span / c.a))) {
        config_error("catenary half_span / a too large");
    }

    // Even step count puts a sample exactly at the sag bottom (x = 0).
    std::size_t half = step_count(c.half_span, c.spacing);
    const std::size_t n = 2 * half;
    const double step = c.half_span / static_cast<double>(half);

    std::vector<double> xs(n + 1);
    std::vector<double> slope(n + 1);  // tan(theta_az) at each sample
    for (std::size_t i = 0; i <= n; ++i) {
        xs[i] = (static_cast<double>(i) - static_cast<double>(half)) * step;
        const Angle theta_v = Angle::radians(std::atan(std::sinh(xs[i] / c.a)));
        const Angle sq = effective_squint_3d({c.theta_h, theta_v, c.theta_inc});
        slope[i] = std::tan(-sq.rad());
    }

    // Integrate the in-plane slope outward from the bottom sample.
    std::vector<double> ys(n + 1, 0.0);
    for (std::size_t i = half; i < n; ++i) {
        ys[i + 1] = ys[i] + 0.5 * (slope[i] + slope[i + 1]) * step;
    }
    for (std::size_t i = half; i > 0; --i) {
        ys[i - 1] = ys[i] - 0.5 * (slope[i] + slope[i - 1]) * step;
    }

    Scene scene;
    scene.scatterers.reserve(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        scene.scatterers.push_back({xs[i], ys[i], c.amp});
    }
    scene.provenance =
        fmt("catenary(a=%.17g m, half_span=%.17g m, spacing=%.17g m, theta_inc=%.17g deg, "
            "theta_h=%.17g deg)",
            c.a, c.half_span, c.spacing, c.theta_inc.deg(), c.theta_h.deg());
    return scene;
}

}  // namespace

const char* kind_name(const TargetSpec& spec) {
    struct Visitor {
        const char* operator()(const LineSpec&) const { return "line"; }
        const char* operator()(const ArraySpec&) const { return "array"; }
        const char* operator()(const ArcSpec&) const { return "arc"; }
        const char* operator()(const CatenarySpec&) const { return "catenary"; }
        const char* operator()(const Segment3DSpec&) const { return "segment3d"; }
    };
    return std::visit(Visitor{}, spec);
}

Scene project_segment_3d(const Orientation3D& o, double length, double spacing, double amp) {
    Angle sq;
    try {
        sq = effective_squint_3d(o);
    } catch (const Error& e) {
        config_error(e.what());
    }
    Scene scene = make_line(-sq, length, spacing, amp);
    scene.provenance = fmt("segment3d(theta_h=%.17g deg, theta_v=%.17g deg, theta_inc=%.17g deg) -> ",
                           o.theta_h.deg(), o.theta_v.deg(), o.theta_inc.deg()) +
                       scene.provenance;
    return scene;
}

Scene generate_scene(const TargetSpec& spec) {
    struct Visitor {
        Scene operator()(const LineSpec& s) const {
            return make_line(s.theta_az, s.length, s.spacing, s.amp);
        }
        Scene operator()(const ArraySpec& s) const { return make_array(s); }
        Scene operator()(const ArcSpec& s) const { return make_arc(s); }
        Scene operator()(const CatenarySpec& s) const { return make_catenary(s); }
        Scene operator()(const Segment3DSpec& s) const {
            return project_segment_3d(s.orientation, s.length, s.spacing, s.amp);
        }
    };
    Scene scene = std::visit(Visitor{}, spec);
    scene.label = kind_name(spec);
    return scene;
}

Scene merge_scenes(const std::vector<Scene>& parts) {
    Scene out;
    for (const Scene& s : parts) {
        out.scatterers.insert(out.scatterers.end(), s.scatterers.begin(), s.scatterers.end());
        if (!out.label.empty()) {
            out.label += '+';
            out.provenance += "; ";
        }
        out.label += s.label;
        out.provenance += s.provenance;
    }
    return out;
}

}  // namespace mwr
