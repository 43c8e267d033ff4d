// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <string>

#include "mwr/error.hpp"
#include "mwr/scene.hpp"

using namespace mwr;

namespace {

const char* kMinimal = R"({
  "radar": {"fc_hz": 9.6e9, "v_mps": 7600, "rho_a_m": 0.1, "rho_r_m": 0.1},
  "targets": [{"kind": "line", "theta_az_deg": 2, "length_m": 1}]
})";

Error error_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e;
    }
    FAIL("expected mwr::Error");
    return Error(Errc::io, "");
}

std::string with_target(const std::string& target) {
    return R"({"radar": {"fc_hz": 9.6e9, "v_mps": 7600, "rho_a_m": 0.1, "rho_r_m": 0.1},
               "targets": [)" +
           target + "]}";
}

}  // namespace

TEST_CASE("line generator") {
    const Scene s = generate_scene(LineSpec{Angle::degrees(0), 2.0, 0.01});
    CHECK(s.scatterers.size() == 201);
    for (const auto& p : s.scatterers) {
        CHECK(p.y == 0.0);
        CHECK(p.amp == 1.0);
    }
    CHECK(s.scatterers.front().x == doctest::Approx(-1.0));
    CHECK(s.scatterers.back().x == doctest::Approx(1.0));
    CHECK(s.label == "line");
    CHECK(s.provenance.find("line(") == 0);

    const Scene t = generate_scene(LineSpec{Angle::degrees(3), 1.0, 0.0078});
    for (const auto& p : t.scatterers) {
        CHECK(std::abs(p.y - p.x * std::tan(3 * M_PI / 180)) <= 1e-15);
    }
    // Spacing never exceeds the request.
    const double step = std::hypot(t.scatterers[1].x - t.scatterers[0].x, t.scatterers[1].y - t.scatterers[0].y);
    CHECK(step <= 0.0078);
}

TEST_CASE("array generator spaces points d_x apart in azimuth") {
    const Scene s = generate_scene(ArraySpec{Angle::degrees(20), 0.05, 64});
    REQUIRE(s.scatterers.size() == 64);
    const double t = std::tan(20 * M_PI / 180);
    for (std::size_t i = 0; i < s.scatterers.size(); ++i) {
        CHECK(std::abs(s.scatterers[i].y - s.scatterers[i].x * t) <= 1e-12);
        if (i > 0) {
            CHECK(s.scatterers[i].x - s.scatterers[i - 1].x == doctest::Approx(0.05).epsilon(1e-12));
        }
    }
    CHECK(s.scatterers.front().x == doctest::Approx(-0.05 * 31.5));
    CHECK_THROWS_AS(generate_scene(ArraySpec{Angle::degrees(0), 0.05, 1}), Error);
    CHECK(error_of([] { generate_scene(ArraySpec{Angle::degrees(0), 0.0, 8}); }).code() == Errc::config);
}

TEST_CASE("array and line share the same geometric line") {
    for (double a : {-35.0, -4.0, 0.0, 10.0, 20.0}) {
        const Scene arr = generate_scene(ArraySpec{Angle::degrees(a), 0.03, 17});
        const Scene line = generate_scene(LineSpec{Angle::degrees(a), 1.0, 0.01});
        const double t = std::tan(a * M_PI / 180);
        for (const auto& p : arr.scatterers) {
            CHECK(std::abs(p.y - p.x * t) <= 1e-12);
        }
        for (const auto& p : line.scatterers) {
            CHECK(std::abs(p.y - p.x * t) <= 1e-12);
        }
    }
}

TEST_CASE("arc generator") {
    const Scene s = generate_scene(ArcSpec{100.0, Angle::degrees(-4), Angle::degrees(4), 0.05});
    const auto& pts = s.scatterers;
    REQUIRE(pts.size() >= 3);
    std::vector<double> tangents;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        tangents.push_back(std::atan2(pts[i].y - pts[i - 1].y, pts[i].x - pts[i - 1].x));
    }
    for (std::size_t i = 1; i < tangents.size(); ++i) {
        CHECK(tangents[i] > tangents[i - 1]);
    }
    // Midpoint tangent from the two neighbours of the centre sample.
    const std::size_t mid = pts.size() / 2;
    const double t_mid = std::atan2(pts[mid + 1].y - pts[mid - 1].y, pts[mid + 1].x - pts[mid - 1].x);
    CHECK(std::abs(t_mid) < 1e-9);
    CHECK(std::abs(pts[mid].x) < 1e-9);
    CHECK(std::abs(pts[mid].y) < 1e-9);
    // A chord's direction is the tangent half a step inside the end point.
    const double half_step = 4.0 / static_cast<double>(tangents.size());
    CHECK(tangents.front() * 180 / M_PI == doctest::Approx(-4.0 + half_step).epsilon(1e-9));
    CHECK(tangents.back() * 180 / M_PI == doctest::Approx(4.0 - half_step).epsilon(1e-9));
    CHECK_THROWS_AS(generate_scene(ArcSpec{100.0, Angle::degrees(4), Angle::degrees(-4), 0.05}), Error);
}

TEST_CASE("catenary generator") {
    const CatenarySpec c{20.0, 5.0, 0.01, Angle::degrees(35), Angle::degrees(0)};
    const Scene s = generate_scene(c);
    const auto& pts = s.scatterers;
    REQUIRE(pts.size() % 2 == 1);
    const std::size_t mid = pts.size() / 2;
    CHECK(pts[mid].x == 0.0);
    CHECK(pts[mid].y == 0.0);
    // Local in-plane tangent matches the projected 3D tangent.
    for (std::size_t i = 10; i + 10 < pts.size(); i += 50) {
        const double slope = (pts[i + 1].y - pts[i - 1].y) / (pts[i + 1].x - pts[i - 1].x);
        const Angle theta_v = Angle::radians(std::atan(std::sinh(pts[i].x / c.a)));
        const double expect = std::tan(-effective_squint_3d({c.theta_h, theta_v, c.theta_inc}).rad());
        CHECK(slope == doctest::Approx(expect).epsilon(1e-4));
    }
    // Symmetric sag maps to a symmetric in-plane curve.
    CHECK(pts.front().y == doctest::Approx(pts.back().y).epsilon(1e-12));
}

TEST_CASE("project_segment_3d") {
    const Scene a = project_segment_3d({Angle::degrees(0), Angle::degrees(0), Angle::degrees(45)}, 2.0, 0.01);
    CHECK(a.scatterers.size() == 201);
    for (const auto& p : a.scatterers) {
        CHECK(p.y == 0.0);
    }
    const Scene g = project_segment_3d({Angle::degrees(10), Angle::degrees(-10), Angle::degrees(45)}, 2.0, 0.01);
    for (const auto& p : g.scatterers) {
        CHECK(std::abs(p.y) < 1e-12);
    }
    const Scene t = project_segment_3d({Angle::degrees(0), Angle::degrees(2), Angle::degrees(45)}, 2.0, 0.01);
    const auto& f = t.scatterers.front();
    const auto& b = t.scatterers.back();
    const double az = std::atan2(b.y - f.y, b.x - f.x) * 180 / M_PI;
    const double oracle = -std::atan(-std::cos(M_PI / 4) * std::tan(2 * M_PI / 180)) * 180 / M_PI;
    CHECK(az == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(az == doctest::Approx(1.4146).epsilon(1e-4));
}

TEST_CASE("generators are deterministic") {
    const std::vector<TargetSpec> specs{
        LineSpec{Angle::degrees(1.5), 1.0, 0.0078},
        ArraySpec{Angle::degrees(10), 0.03, 8},
        ArcSpec{100.0, Angle::degrees(-4), Angle::degrees(4), 0.05},
        CatenarySpec{20.0, 5.0, 0.02, Angle::degrees(35), Angle::degrees(3)},
        Segment3DSpec{{Angle::degrees(5), Angle::degrees(1), Angle::degrees(30)}, 1.0, 0.01},
    };
    for (const auto& spec : specs) {
        const Scene a = generate_scene(spec);
        const Scene b = generate_scene(spec);
        CHECK(a.scatterers == b.scatterers);
        CHECK(a.provenance == b.provenance);
    }
}

TEST_CASE("merge_scenes") {
    Scene a = generate_scene(ArraySpec{Angle::degrees(0), 0.1, 3});
    Scene b = generate_scene(LineSpec{Angle::degrees(0), 0.2, 0.1});
    const Scene m = merge_scenes({a, b});
    CHECK(m.scatterers.size() == 6);
    CHECK(m.label == "array+line");
}

TEST_CASE("parse minimal config") {
    const SceneConfig cfg = parse_scene_config(kMinimal);
    CHECK(cfg.params().ba() == doctest::Approx(76000.0));
    CHECK(cfg.grid == GridSpec{2048, 256});
    REQUIRE(cfg.targets.size() == 1);
    const auto scenes = cfg.scenes();
    REQUIRE(scenes.size() == 1);
    const auto& line = std::get<LineSpec>(cfg.targets[0].spec);
    CHECK(line.spacing == doctest::Approx(cfg.params().lambda() / 4));
    CHECK(line.theta_az.deg() == 2.0);
}

TEST_CASE("config errors") {
    const Error helix = error_of([] { parse_scene_config(with_target(R"({"kind": "helix"})")); });
    CHECK(helix.code() == Errc::config);
    CHECK(std::string(helix.what()).find("unknown target kind") != std::string::npos);

    const Error dx = error_of(
        [] { parse_scene_config(with_target(R"({"kind": "array", "theta_az_deg": 0, "dx_m": 0, "n": 8})")); });
    CHECK(dx.code() == Errc::config);
    CHECK(std::string(dx.what()).find("targets[0]") != std::string::npos);

    const Error unknown = error_of([] {
        parse_scene_config(with_target(R"({"kind": "line", "theta_az_deg": 0, "length_m": 1, "colour": 3})"));
    });
    CHECK(unknown.code() == Errc::config);
    CHECK(std::string(unknown.what()).find("targets[0].colour") != std::string::npos);

    const Error empty = error_of([] { parse_scene_config(with_target("")); });
    CHECK(empty.code() == Errc::config);

    const Error missing = error_of([] { parse_scene_config(with_target(R"({"kind": "line", "length_m": 1})")); });
    CHECK(std::string(missing.what()).find("theta_az_deg") != std::string::npos);

    const Error grid = error_of([] {
        parse_scene_config(R"({"radar": {"fc_hz": 9.6e9, "v_mps": 7600, "rho_a_m": 0.1, "rho_r_m": 0.1},
            "grid": {"na": 1000, "nr": 256},
            "targets": [{"kind": "line", "theta_az_deg": 0, "length_m": 1}]})");
    });
    CHECK(grid.code() == Errc::config);

    const Error radar = error_of([] {
        parse_scene_config(R"({"radar": {"fc_hz": -1, "v_mps": 7600, "rho_a_m": 0.1, "rho_r_m": 0.1},
            "targets": [{"kind": "line", "theta_az_deg": 0, "length_m": 1}]})");
    });
    CHECK(radar.code() == Errc::config);

    const Error bad = error_of([] { parse_scene_config("{\n  \"radar\": {,\n}"); });
    CHECK(bad.code() == Errc::parse);
    CHECK(std::string(bad.what()).find("line 2") != std::string::npos);
}

TEST_CASE("config round trip") {
    const std::string text = R"({
      "radar": {"fc_hz": 9.6e9, "v_mps": 7600, "rho_a_m": 0.1, "rho_r_m": 0.3, "fdc_hz": 250},
      "grid": {"na": 1024, "nr": 64},
      "targets": [
        {"kind": "line", "label": "kerb", "theta_az_deg": 0.1, "length_m": 1.3},
        {"kind": "array", "theta_az_deg": 20, "dx_m": 0.05, "n": 64, "amp": 0.5},
        {"kind": "arc", "radius_m": 100, "tangent_min_deg": -4, "tangent_max_deg": 4, "spacing_m": 0.05},
        {"kind": "catenary", "a_m": 20, "half_span_m": 5, "theta_inc_deg": 35},
        {"kind": "segment3d", "theta_h_deg": 10, "theta_v_deg": -10, "theta_inc_deg": 45, "length_m": 2}
      ]})";
    const SceneConfig a = parse_scene_config(text);
    const std::string emitted = serialize_scene_config(a);
    const SceneConfig b = parse_scene_config(emitted);
    CHECK(a.radar == b.radar);
    CHECK(a.grid == b.grid);
    REQUIRE(a.targets.size() == b.targets.size());
    for (std::size_t i = 0; i < a.targets.size(); ++i) {
        CHECK(a.targets[i] == b.targets[i]);
    }
    CHECK(serialize_scene_config(b) == emitted);
    CHECK(a.scenes()[0].label == "kerb");
}
