// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <bit>
#include <initializer_list>
#include <string>

#include <json.hpp>

#include "mwr/error.hpp"
#include "mwr/scene.hpp"

namespace mwr {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void config_error(const std::string& path, const std::string& what) {
    throw Error(Errc::config, path + ": " + what);
}

void check_keys(const json& obj, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) {
        config_error(path, "expected an object");
    }
    for (const auto& [key, value] : obj.items()) {
        const bool known = std::any_of(allowed.begin(), allowed.end(),
                                       [&](const char* k) { return key == k; });
        if (!known) {
            config_error(path + "." + key, "unknown key");
        }
    }
}

double number(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        config_error(path + "." + key, "missing required field");
    }
    if (!it->is_number()) {
        config_error(path + "." + key, "expected a number");
    }
    return it->get<double>();
}

double number_or(const json& obj, const std::string& path, const char* key, double fallback) {
    return obj.contains(key) ? number(obj, path, key) : fallback;
}

long long integer(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        config_error(path + "." + key, "missing required field");
    }
    if (!it->is_number_integer()) {
        config_error(path + "." + key, "expected an integer");
    }
    return it->get<long long>();
}

Angle degrees(const json& obj, const std::string& path, const char* key) {
    return Angle::degrees(number(obj, path, key));
}

std::size_t grid_size(const json& obj, const std::string& path, const char* key) {
    const long long n = integer(obj, path, key);
    if (n < 8 || !std::has_single_bit(static_cast<unsigned long long>(n))) {
        config_error(path + "." + key, "must be a power of two >= 8");
    }
    return static_cast<std::size_t>(n);
}

TargetConfig parse_target(const json& t, const std::string& path, double default_spacing) {
    if (!t.is_object()) {
        config_error(path, "expected an object");
    }
    auto kind_it = t.find("kind");
    if (kind_it == t.end() || !kind_it->is_string()) {
        config_error(path + ".kind", "missing or non-string target kind");
    }
    const std::string kind = kind_it->get<std::string>();
    TargetConfig out;
    if (t.contains("label")) {
        if (!t["label"].is_string()) {
            config_error(path + ".label", "expected a string");
        }
        out.label = t["label"].get<std::string>();
    }
    const double amp = number_or(t, path, "amp", 1.0);
    const auto spacing = [&] { return number_or(t, path, "spacing_m", default_spacing); };

    if (kind == "line") {
        check_keys(t, path, {"kind", "label", "amp", "theta_az_deg", "length_m", "spacing_m"});
        out.spec = LineSpec{degrees(t, path, "theta_az_deg"), number(t, path, "length_m"),
                            spacing(), amp};
    } else if (kind == "array") {
        check_keys(t, path, {"kind", "label", "amp", "theta_az_deg", "dx_m", "n"});
        const long long n = integer(t, path, "n");
        if (n < 2 || n > 1'000'000) {
            config_error(path + ".n", "must be in [2, 1000000]");
        }
        out.spec = ArraySpec{degrees(t, path, "theta_az_deg"), number(t, path, "dx_m"),
                             static_cast<int>(n), amp};
    } else if (kind == "arc") {
        check_keys(t, path, {"kind", "label", "amp", "radius_m", "tangent_min_deg",
                             "tangent_max_deg", "spacing_m"});
        out.spec = ArcSpec{number(t, path, "radius_m"), degrees(t, path, "tangent_min_deg"),
                           degrees(t, path, "tangent_max_deg"), spacing(), amp};
    } else if (kind == "catenary") {
        check_keys(t, path, {"kind", "label", "amp", "a_m", "half_span_m", "theta_inc_deg",
                             "theta_h_deg", "spacing_m"});
        out.spec = CatenarySpec{number(t, path, "a_m"),
                                number(t, path, "half_span_m"),
                                spacing(),
                                degrees(t, path, "theta_inc_deg"),
                                Angle::degrees(number_or(t, path, "theta_h_deg", 0.0)),
                                amp};
    } else if (kind == "segment3d") {
        check_keys(t, path, {"kind", "label", "amp", "theta_h_deg", "theta_v_deg",
                             "theta_inc_deg", "length_m", "spacing_m"});
        out.spec = Segment3DSpec{{degrees(t, path, "theta_h_deg"), degrees(t, path, "theta_v_deg"),
                                  degrees(t, path, "theta_inc_deg")},
                                 number(t, path, "length_m"),
                                 spacing(),
                                 amp};
    } else {
        config_error(path + ".kind", "unknown target kind \"" + kind + "\"");
    }

    // Validate now so errors name the target rather than surfacing at simulation time.
    try {
        (void)generate_scene(out.spec);
    } catch (const Error& e) {
        config_error(path, e.what());
    }
    return out;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

ordered_json emit_target(const TargetConfig& t) {
    ordered_json j;
    j["kind"] = kind_name(t.spec);
    if (!t.label.empty()) {
        j["label"] = t.label;
    }
    struct Visitor {
        ordered_json& j;
        void operator()(const LineSpec& s) const {
            j["theta_az_deg"] = s.theta_az.deg();
            j["length_m"] = s.length;
            j["spacing_m"] = s.spacing;
            j["amp"] = s.amp;
        }
        void operator()(const ArraySpec& s) const {
            j["theta_az_deg"] = s.theta_az.deg();
            j["dx_m"] = s.d_x;
            j["n"] = s.count;
            j["amp"] = s.amp;
        }
        void operator()(const ArcSpec& s) const {
            j["radius_m"] = s.radius;
            j["tangent_min_deg"] = s.tangent_min.deg();
            j["tangent_max_deg"] = s.tangent_max.deg();
            j["spacing_m"] = s.spacing;
            j["amp"] = s.amp;
        }
        void operator()(const CatenarySpec& s) const {
            j["a_m"] = s.a;
            j["half_span_m"] = s.half_span;
            j["theta_inc_deg"] = s.theta_inc.deg();
            j["theta_h_deg"] = s.theta_h.deg();
            j["spacing_m"] = s.spacing;
            j["amp"] = s.amp;
        }
        void operator()(const Segment3DSpec& s) const {
            j["theta_h_deg"] = s.orientation.theta_h.deg();
            j["theta_v_deg"] = s.orientation.theta_v.deg();
            j["theta_inc_deg"] = s.orientation.theta_inc.deg();
            j["length_m"] = s.length;
            j["spacing_m"] = s.spacing;
            j["amp"] = s.amp;
        }
    };
    std::visit(Visitor{j}, t.spec);
    return j;
}

}  // namespace

bool operator==(const TargetConfig& a, const TargetConfig& b) {
    return a.label == b.label && a.spec == b.spec;
}

std::vector<Scene> SceneConfig::scenes() const {
    std::vector<Scene> out;
    out.reserve(targets.size());
    for (const TargetConfig& t : targets) {
        Scene s = generate_scene(t.spec);
        if (!t.label.empty()) {
            s.label = t.label;
        }
        out.push_back(std::move(s));
    }
    return out;
}

SceneConfig parse_scene_config(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw Error(Errc::parse, "malformed JSON at line " + std::to_string(line) + ", column " +
                                     std::to_string(col) + ": " + e.what());
    }

    check_keys(doc, "config", {"radar", "grid", "targets"});
    SceneConfig cfg;

    if (!doc.contains("radar")) {
        config_error("radar", "missing required block");
    }
    const json& radar = doc["radar"];
    check_keys(radar, "radar", {"fc_hz", "v_mps", "rho_a_m", "rho_r_m", "fdc_hz"});
    cfg.radar.fc_hz = number(radar, "radar", "fc_hz");
    cfg.radar.v_mps = number(radar, "radar", "v_mps");
    cfg.radar.rho_a_m = number(radar, "radar", "rho_a_m");
    cfg.radar.rho_r_m = number(radar, "radar", "rho_r_m");
    cfg.radar.fdc_hz = number_or(radar, "radar", "fdc_hz", 0.0);
    double lambda = 0.0;
    try {
        lambda = cfg.radar.params().lambda();
    } catch (const Error& e) {
        config_error("radar", e.what());
    }

    if (doc.contains("grid")) {
        const json& grid = doc["grid"];
        check_keys(grid, "grid", {"na", "nr"});
        cfg.grid.na = grid_size(grid, "grid", "na");
        cfg.grid.nr = grid_size(grid, "grid", "nr");
    }

    if (!doc.contains("targets") || !doc["targets"].is_array()) {
        config_error("targets", "missing or not an array");
    }
    const json& targets = doc["targets"];
    if (targets.empty()) {
        config_error("targets", "target list is empty");
    }
    // Continuous targets default to lambda/4 sampling.
    const double default_spacing = lambda / 4.0;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        cfg.targets.push_back(
            parse_target(targets[i], "targets[" + std::to_string(i) + "]", default_spacing));
    }
    return cfg;
}

std::string serialize_scene_config(const SceneConfig& cfg) {
    ordered_json doc;
    doc["radar"]["fc_hz"] = cfg.radar.fc_hz;
    doc["radar"]["v_mps"] = cfg.radar.v_mps;
    doc["radar"]["rho_a_m"] = cfg.radar.rho_a_m;
    doc["radar"]["rho_r_m"] = cfg.radar.rho_r_m;
    doc["radar"]["fdc_hz"] = cfg.radar.fdc_hz;
    doc["grid"]["na"] = cfg.grid.na;
    doc["grid"]["nr"] = cfg.grid.nr;
    doc["targets"] = ordered_json::array();
    for (const TargetConfig& t : cfg.targets) {
        doc["targets"].push_back(emit_target(t));
    }
    return doc.dump(2) + "\n";
}

}  // namespace mwr
