// SPDX-License-Identifier: Apache-2.0
#include "mwr/io.hpp"

#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <json.hpp>

#include "mwr/error.hpp"

namespace mwr {

namespace {

using nlohmann::ordered_json;

ordered_json finite_or_null(double v) {
    return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr);
}

ordered_json params_json(const RadarParams& p) {
    ordered_json j;
    j["fc_hz"] = p.fc();
    j["v_mps"] = p.v();
    j["lambda_m"] = p.lambda();
    j["ba_hz"] = p.ba();
    j["br_hz"] = p.br();
    j["fdc_hz"] = p.fdc();
    return j;
}

RadarParams params_from_json(const nlohmann::json& j) {
    return RadarParams::from_bandwidths(j.at("fc_hz").get<double>(), j.at("v_mps").get<double>(),
                                        j.at("ba_hz").get<double>(), j.at("br_hz").get<double>(),
                                        j.at("fdc_hz").get<double>());
}

std::uint64_t to_le(std::uint64_t v) {
    if constexpr (std::endian::native == std::endian::big) {
        return __builtin_bswap64(v);
    }
    return v;
}

void write_payload(const std::filesystem::path& bin, std::span<const cdouble> data) {
    std::string bytes(16 * data.size(), '\0');
    for (std::size_t k = 0; k < data.size(); ++k) {
        const std::uint64_t re = to_le(std::bit_cast<std::uint64_t>(data[k].real()));
        const std::uint64_t im = to_le(std::bit_cast<std::uint64_t>(data[k].imag()));
        std::memcpy(bytes.data() + 16 * k, &re, 8);
        std::memcpy(bytes.data() + 16 * k + 8, &im, 8);
    }
    write_file(bin, bytes);
}

void read_payload(const std::filesystem::path& bin, std::span<cdouble> data) {
    const std::string bytes = read_file(bin);
    if (bytes.size() != 16 * data.size()) {
        throw Error(Errc::io, bin.string() + ": expected " + std::to_string(16 * data.size()) +
                                  " bytes, found " + std::to_string(bytes.size()));
    }
    for (std::size_t k = 0; k < data.size(); ++k) {
        std::uint64_t re = 0;
        std::uint64_t im = 0;
        std::memcpy(&re, bytes.data() + 16 * k, 8);
        std::memcpy(&im, bytes.data() + 16 * k + 8, 8);
        data[k] = {std::bit_cast<double>(to_le(re)), std::bit_cast<double>(to_le(im))};
    }
}

std::filesystem::path with_suffix(const std::filesystem::path& p, const char* suffix) {
    return std::filesystem::path(p.string() + suffix);
}

nlohmann::json read_header(const std::filesystem::path& path, const char* kind) {
    const auto hdr = with_suffix(path, ".json");
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(hdr));
        if (j.at("kind").get<std::string>() != kind) {
            throw Error(Errc::io, hdr.string() + ": expected kind " + kind);
        }
        validate_grid_dims(j.at("na").get<std::size_t>(), j.at("nr").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::io, hdr.string() + ": " + e.what());
    }
    return j;
}

}  // namespace

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";
    }
    if (std::isnan(v)) {
        return "nan";
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string predict_csv(std::span<const DiffractionSolution> rows) {
    std::string out = "m,theta_sq_deg,f_d_hz,observable,hue\n";
    for (const auto& s : rows) {
        out += std::to_string(s.m) + "," + format_number(s.theta_sq.deg()) + "," + format_number(s.f_d) +
               "," + (s.observable ? "true" : "false") + "," + std::string(to_string(s.hue)) + "\n";
    }
    return out;
}

std::string predict3d_csv(const Orientation3D& o, const RadarParams& p) {
    const Angle sq = effective_squint_3d(o);
    const double f_d = doppler_from_squint(p, sq);
    std::string out =
        "theta_h_deg,theta_v_deg,theta_inc_deg,theta_sq_deg,theta_az_deg,f_d_hz,observable,hue,green_condition\n";
    out += format_number(o.theta_h.deg()) + "," + format_number(o.theta_v.deg()) + "," +
           format_number(o.theta_inc.deg()) + "," + format_number(sq.deg()) + "," +
           format_number((-sq).deg()) + "," + format_number(f_d) + "," +
           (observable(p, f_d) ? "true" : "false") + "," + std::string(to_string(classify_hue(p, f_d))) +
           "," + (is_green_condition(o, Angle::radians(1e-10)) ? "true" : "false") + "\n";
    return out;
}

std::string chart_csv(const ChartData& chart, const RadarParams& p) {
    std::string out = "curve_id,m,theta_sq_deg,theta_az_deg_low,theta_az_deg_high\n";
    for (const auto& pt : chart.zero_order_curve) {
        const std::string az = format_number(pt.theta_az.deg());
        out += "zero_order,0," + format_number(pt.theta_sq.deg()) + "," + az + "," + az + "\n";
    }
    for (const auto& r : chart.order_regions) {
        out += "order," + std::to_string(r.m) + "," + format_number(r.theta_sq.deg()) + "," +
               format_number(r.theta_az_low.deg()) + "," + format_number(r.theta_az_high.deg()) + "\n";
    }
    // Window and band edges as squint, paired with their zero-order orientation.
    const auto& w = chart.window;
    for (double f : {w.f_d_min, w.red_green_edge, w.green_blue_edge, w.f_d_max}) {
        const Angle sq = squint_from_doppler(p, f);
        const std::string az = format_number(zero_order_squint(sq).deg());
        out += "window,0," + format_number(sq.deg()) + "," + az + "," + az + "\n";
    }
    return out;
}

std::string azspec_csv(const AzimuthSpectrum& spec) {
    std::string out = "f_a_hz,power\n";
    for (std::size_t i = 0; i < spec.fa.size(); ++i) {
        out += format_number(spec.fa[i]) + "," + format_number(spec.power[i]) + "\n";
    }
    return out;
}

std::string reports_json(std::span<const VerificationReport> reports) {
    ordered_json doc;
    doc["reports"] = ordered_json::array();
    bool all_pass = true;
    for (const auto& r : reports) {
        ordered_json j;
        j["label"] = r.label;
        j["tol_bins"] = r.tol_bins;
        j["bin_hz"] = r.bin_hz;
        j["threshold"] = r.threshold;
        j["predicted"] = ordered_json::array();
        for (const auto& s : r.predictions) {
            j["predicted"].push_back({{"m", s.m},
                                      {"theta_sq_deg", s.theta_sq.deg()},
                                      {"f_d_hz", s.f_d},
                                      {"observable", s.observable},
                                      {"hue", std::string(to_string(s.hue))}});
        }
        j["detected"] = ordered_json::array();
        for (const auto& p : r.peaks) {
            j["detected"].push_back({{"f_d_hz", p.f_d}, {"power", p.power}});
        }
        j["matches"] = ordered_json::array();
        for (const auto& m : r.matches) {
            j["matches"].push_back({{"m", m.m},
                                    {"predicted_f_d_hz", m.predicted_f_d},
                                    {"peak_f_d_hz", m.peak_f_d},
                                    {"bin_distance", m.bin_distance}});
        }
        j["nearest_peak_bins"] = ordered_json::array();
        for (double d : r.nearest_peak_bins) {
            j["nearest_peak_bins"].push_back(finite_or_null(d));
        }
        j["unmatched_predictions"] = r.unmatched_predictions;
        j["unmatched_peaks"] = r.unmatched_peaks;
        j["pass"] = r.pass;
        all_pass = all_pass && r.pass;
        doc["reports"].push_back(std::move(j));
    }
    doc["pass"] = all_pass;
    return doc.dump(2) + "\n";
}

std::string simulation_report_json(const RadarParams& p, const SimulationSummary& s) {
    ordered_json doc;
    doc["label"] = s.label;
    doc["radar"] = params_json(p);
    doc["grid"] = {{"na", s.na}, {"nr", s.nr}};
    doc["scatterers"] = s.scatterers;
    doc["total_energy"] = s.total_energy;
    doc["band_energy"] = {{"red", s.band_energy[0]}, {"green", s.band_energy[1]}, {"blue", s.band_energy[2]}};
    doc["normalization"] = s.normalization;
    doc["peaks"] = ordered_json::array();
    for (const auto& pk : s.peaks) {
        doc["peaks"].push_back({{"f_d_hz", pk.f_d},
                                {"power", pk.power},
                                {"hue", std::string(to_string(classify_hue(p, pk.f_d)))}});
    }
    return doc.dump(2) + "\n";
}

void write_grid(const std::filesystem::path& path, const SpectrumGrid& g) {
    ordered_json hdr;
    hdr["kind"] = "spectrum";
    hdr["na"] = g.na;
    hdr["nr"] = g.nr;
    hdr["layout"] = "azimuth-major, little-endian f64 (re, im)";
    hdr["f_a_hz"] = {{"start", g.fa(0)}, {"step", g.fa_step()}};
    hdr["f_r_hz"] = {{"start", g.fr(0)}, {"step", g.fr_step()}};
    hdr["params"] = params_json(g.params);
    write_file(with_suffix(path, ".json"), hdr.dump(2) + "\n");
    write_payload(with_suffix(path, ".bin"), g.data);
}

SpectrumGrid read_grid(const std::filesystem::path& path) {
    const auto j = read_header(path, "spectrum");
    SpectrumGrid g(params_from_json(j.at("params")), j.at("na").get<std::size_t>(),
                   j.at("nr").get<std::size_t>());
    read_payload(with_suffix(path, ".bin"), g.data);
    return g;
}

void write_image(const std::filesystem::path& path, const ComplexImage& img) {
    ordered_json hdr;
    hdr["kind"] = "image";
    hdr["na"] = img.na;
    hdr["nr"] = img.nr;
    hdr["layout"] = "azimuth-major, little-endian f64 (re, im)";
    hdr["t_a_s"] = {{"start", img.ta(0)}, {"step", 1.0 / img.params.ba()}};
    hdr["t_r_s"] = {{"start", img.tr(0)}, {"step", 1.0 / img.params.br()}};
    hdr["params"] = params_json(img.params);
    write_file(with_suffix(path, ".json"), hdr.dump(2) + "\n");
    write_payload(with_suffix(path, ".bin"), img.data);
}

ComplexImage read_image(const std::filesystem::path& path) {
    const auto j = read_header(path, "image");
    ComplexImage img(params_from_json(j.at("params")), j.at("na").get<std::size_t>(),
                     j.at("nr").get<std::size_t>());
    read_payload(with_suffix(path, ".bin"), img.data);
    return img;
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw Error(Errc::io, "cannot open " + path.string() + " for writing");
    }
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!f) {
        throw Error(Errc::io, "write failed: " + path.string());
    }
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw Error(Errc::io, "cannot open " + path.string());
    }
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace mwr
