// SPDX-License-Identifier: Apache-2.0
#include "mwr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "mwr/analysis.hpp"
#include "mwr/csi.hpp"
#include "mwr/dispersion.hpp"
#include "mwr/error.hpp"
#include "mwr/io.hpp"
#include "mwr/scene.hpp"
#include "mwr/simulator.hpp"

namespace mwr::cli {

namespace {

struct RadarFlags {
    RadarConfig cfg;  // defaults are the reference acquisition
    CLI::Option* fc = nullptr;
    CLI::Option* v = nullptr;
    CLI::Option* rho_a = nullptr;
    CLI::Option* rho_r = nullptr;
    CLI::Option* fdc = nullptr;

    // Flags given on the command line win over the config file.
    RadarConfig merged(const RadarConfig& from_file) const {
        RadarConfig r = from_file;
        if (fc->count()) r.fc_hz = cfg.fc_hz;
        if (v->count()) r.v_mps = cfg.v_mps;
        if (rho_a->count()) r.rho_a_m = cfg.rho_a_m;
        if (rho_r->count()) r.rho_r_m = cfg.rho_r_m;
        if (fdc->count()) r.fdc_hz = cfg.fdc_hz;
        return r;
    }
};

std::pair<int, int> parse_orders(const std::string& text) {
    const auto colon = text.find(':');
    auto parse_int = [&](std::string_view s) {
        int v = 0;
        const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
            throw Error(Errc::config, "--orders expects a:b with integers a <= b, got \"" + text + "\"");
        }
        return v;
    };
    if (colon == std::string::npos) {
        const int m = parse_int(text);
        return {m, m};
    }
    const int lo = parse_int(std::string_view(text).substr(0, colon));
    const int hi = parse_int(std::string_view(text).substr(colon + 1));
    if (lo > hi) {
        throw Error(Errc::config, "--orders expects a:b with a <= b, got \"" + text + "\"");
    }
    return {lo, hi};
}

void emit(const std::string& path, const std::string& text, std::ostream& out) {
    if (path.empty() || path == "-") {
        out << text;
    } else {
        write_file(path, text);
    }
}

SceneConfig load_config(const std::string& path, const RadarFlags& radar, std::size_t na,
                        std::size_t nr) {
    SceneConfig cfg = parse_scene_config(read_file(path));
    cfg.radar = radar.merged(cfg.radar);
    if (na) cfg.grid.na = na;
    if (nr) cfg.grid.nr = nr;
    validate_grid_dims(cfg.grid.na, cfg.grid.nr);
    return cfg;
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::evanescent_order:
        case Errc::out_of_range:
            return kExitEvanescent;
        case Errc::aliasing:
            return kExitAliasing;
        default:
            return kExitConfig;
    }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Geometric dispersion model and CSI simulator for SAR targets", "mwr"};
    app.require_subcommand(1, 1);
    app.fallthrough();

    RadarFlags radar;
    radar.fc = app.add_option("--fc", radar.cfg.fc_hz, "Carrier frequency (Hz)")->capture_default_str();
    radar.v = app.add_option("--v", radar.cfg.v_mps, "Platform speed (m/s)")->capture_default_str();
    radar.rho_a = app.add_option("--rho-a", radar.cfg.rho_a_m, "Azimuth resolution (m)")->capture_default_str();
    radar.rho_r = app.add_option("--rho-r", radar.cfg.rho_r_m, "Range resolution (m)")->capture_default_str();
    radar.fdc = app.add_option("--fdc", radar.cfg.fdc_hz, "Doppler centroid (Hz)")->capture_default_str();

    // predict
    auto* predict = app.add_subcommand("predict", "Diffraction orders of a linear or periodic target");
    double p_theta_az = 0.0;
    std::optional<double> p_dx;
    std::string p_orders = "-2:2";
    std::string p_out;
    predict->add_option("--theta-az", p_theta_az, "In-plane orientation (deg)")->required();
    predict->add_option("--dx", p_dx, "Grating period along azimuth (m); omit for a continuous line");
    predict->add_option("--orders", p_orders, "Inclusive order range a:b")->capture_default_str();
    predict->add_option("--out", p_out, "Output CSV (default stdout)");

    // predict3d
    auto* predict3d = app.add_subcommand("predict3d", "Effective squint of a 3D segment");
    double t_h = 0.0;
    double t_v = 0.0;
    double t_inc = 0.0;
    std::string p3_out;
    predict3d->add_option("--theta-h", t_h, "Horizontal orientation (deg)")->required();
    predict3d->add_option("--theta-v", t_v, "Vertical orientation (deg)")->required();
    predict3d->add_option("--theta-inc", t_inc, "Incidence angle (deg)")->required();
    predict3d->add_option("--out", p3_out, "Output CSV (default stdout)");

    // chart
    auto* chart = app.add_subcommand("chart", "Dispersion chart data (zero-order curve and order regions)");
    double c_dx = 0.05;
    std::string c_orders = "-1:1";
    double sq_min = -5.0;
    double sq_max = 5.0;
    double sq_step = 0.1;
    std::string c_out;
    chart->add_option("--dx", c_dx, "Grating period along azimuth (m)")->capture_default_str();
    chart->add_option("--orders", c_orders, "Inclusive order range a:b")->capture_default_str();
    chart->add_option("--sq-min", sq_min, "First squint sample (deg)")->capture_default_str();
    chart->add_option("--sq-max", sq_max, "Last squint sample (deg)")->capture_default_str();
    chart->add_option("--sq-step", sq_step, "Squint step (deg)")->capture_default_str();
    chart->add_option("--out", c_out, "Output CSV (default stdout)");

    // simulate
    auto* simulate = app.add_subcommand("simulate", "Simulate a scene and write the CSI products");
    std::string s_scene;
    std::string s_prefix;
    std::size_t s_na = 0;
    std::size_t s_nr = 0;
    std::string s_norm = "linear";
    simulate->add_option("--scene", s_scene, "Scene config (JSON)")->required();
    simulate->add_option("--out-prefix", s_prefix, "Output prefix for _rgb.ppm, _azspec.csv, _report.json")
        ->required();
    simulate->add_option("--na", s_na, "Azimuth samples (power of two)");
    simulate->add_option("--nr", s_nr, "Range samples (power of two)");
    simulate->add_option("--norm", s_norm, "RGB normalization")
        ->check(CLI::IsMember({"linear", "clip_p999"}))
        ->capture_default_str();

    // analyze
    auto* analyze = app.add_subcommand("analyze", "Verify simulated peaks against analytic orders");
    std::string a_scene;
    std::string a_out;
    std::size_t a_na = 0;
    std::size_t a_nr = 0;
    double a_tol = 2.0;
    analyze->add_option("--scene", a_scene, "Scene config (JSON)")->required();
    analyze->add_option("--out", a_out, "Output JSON (default stdout)");
    analyze->add_option("--na", a_na, "Azimuth samples (power of two)");
    analyze->add_option("--nr", a_nr, "Range samples (power of two)");
    analyze->add_option("--tol-bins", a_tol, "Match tolerance in azimuth bins")->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    }

    try {
        if (predict->parsed()) {
            const RadarParams p = radar.cfg.params();
            const auto [lo, hi] = parse_orders(p_orders);
            const GratingTarget t{Angle::degrees(p_theta_az), p_dx};
            if (p_dx && !(*p_dx > 0.0)) {
                throw Error(Errc::config, "--dx must be positive");
            }
            const auto rows = orders_in_window(t, p, lo, hi);
            if (rows.empty()) {
                if (lo == hi) {
                    (void)high_order_squint(t, lo, p.lambda());  // throws with the solver's diagnostic
                }
                throw Error(Errc::evanescent_order, "no propagating order in " + p_orders);
            }
            emit(p_out, predict_csv(rows), out);
        } else if (predict3d->parsed()) {
            const RadarParams p = radar.cfg.params();
            const Orientation3D o{Angle::degrees(t_h), Angle::degrees(t_v), Angle::degrees(t_inc)};
            emit(p3_out, predict3d_csv(o, p), out);
        } else if (chart->parsed()) {
            const RadarParams p = radar.cfg.params();
            const auto [lo, hi] = parse_orders(c_orders);
            if (!(sq_step > 0.0) || sq_max < sq_min) {
                throw Error(Errc::config, "chart squint grid needs --sq-step > 0 and --sq-min <= --sq-max");
            }
            if (!(c_dx > 0.0)) {
                throw Error(Errc::config, "--dx must be positive");
            }
            std::vector<int> m_set;
            for (int m = lo; m <= hi; ++m) {
                m_set.push_back(m);
            }
            std::vector<Angle> grid;
            const auto n = static_cast<long>(std::floor((sq_max - sq_min) / sq_step + 1e-9)) + 1;
            for (long k = 0; k < n; ++k) {
                // Snap to the decimal grid so labels print as typed.
                const double deg = std::round((sq_min + static_cast<double>(k) * sq_step) * 1e9) / 1e9;
                grid.push_back(Angle::degrees(deg));
            }
            emit(c_out, chart_csv(chart_data(p, c_dx, m_set, grid), p), out);
        } else if (simulate->parsed()) {
            const SceneConfig cfg = load_config(s_scene, radar, s_na, s_nr);
            const RadarParams p = cfg.params();
            const auto scenes = cfg.scenes();
            const Scene scene = merge_scenes(scenes);
            const SpectrumGrid g = synth_spectrum(scene, p, cfg.grid.na, cfg.grid.nr);
            const AzimuthSpectrum az = azimuth_power_spectrum(g);
            const SubBandImages bands = split_subbands(g);
            const Normalization norm = s_norm == "clip_p999" ? Normalization::clip_p999 : Normalization::linear;
            const RGBImage rgb = compose_rgb(magnitude(bands.red), magnitude(bands.green),
                                             magnitude(bands.blue), norm);

            SimulationSummary sum;
            sum.label = scene.label;
            sum.na = g.na;
            sum.nr = g.nr;
            sum.scatterers = scene.scatterers.size();
            sum.total_energy = energy(g.data);
            sum.band_energy = {energy(bands.red.data), energy(bands.green.data), energy(bands.blue.data)};
            sum.peaks = detect_peaks(az, 0.5 * coherent_peak_power(scene, g.nr));
            sum.normalization = s_norm;

            write_file(s_prefix + "_rgb.ppm", encode_ppm(rgb));
            write_file(s_prefix + "_azspec.csv", azspec_csv(az));
            write_file(s_prefix + "_report.json", simulation_report_json(p, sum));
        } else if (analyze->parsed()) {
            const SceneConfig cfg = load_config(a_scene, radar, a_na, a_nr);
            const RadarParams p = cfg.params();
            const auto scenes = cfg.scenes();
            VerifyOptions opt;
            opt.tol_bins = a_tol;
            opt.na = cfg.grid.na;
            opt.nr = cfg.grid.nr;
            std::vector<VerificationReport> reports;
            for (std::size_t k = 0; k < cfg.targets.size(); ++k) {
                const auto pred = predictions_for_target(cfg.targets[k].spec, p);
                if (!pred) {
                    err << "note: target " << k << " (" << kind_name(cfg.targets[k].spec)
                        << ") spreads over a Doppler range; no discrete orders to verify\n";
                    continue;
                }
                if (pred->empty()) {
                    err << "note: target " << k << " has no propagating order\n";
                    continue;
                }
                reports.push_back(verify_scene_against_model(scenes[k], p, *pred, opt));
            }
            emit(a_out, reports_json(reports), out);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return kExitOk;
}

}  // namespace mwr::cli
