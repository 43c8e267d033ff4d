// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <random>

#include <json.hpp>

#include "mwr/error.hpp"
#include "mwr/io.hpp"

using namespace mwr;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const char* name) {
    const fs::path dir = fs::temp_directory_path() / "mwr_test_io";
    fs::create_directories(dir);
    return dir / name;
}

std::vector<Angle> chart_grid() {
    std::vector<Angle> grid;
    for (int k = -50; k <= 50; ++k) {
        grid.push_back(Angle::degrees(std::round(k * 0.1 * 1e9) / 1e9));
    }
    return grid;
}

}  // namespace

TEST_CASE("format_number") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(-20) == "-20");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(76000) == "76000");
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1e6, 1e6);
    for (int k = 0; k < 1000; ++k) {
        const double v = u(rng);
        CHECK(std::stod(format_number(v)) == v);
    }
}

TEST_CASE("predict_csv") {
    const RadarParams p = reference_params();
    const auto rows = orders_in_window(GratingTarget{Angle::degrees(0), std::nullopt}, p, 0, 0);
    CHECK(predict_csv(rows) == "m,theta_sq_deg,f_d_hz,observable,hue\n0,0,0,true,green\n");
}

TEST_CASE("predict3d_csv") {
    const RadarParams p = reference_params();
    const std::string csv =
        predict3d_csv({Angle::degrees(10), Angle::degrees(-10), Angle::degrees(45)}, p);
    CHECK(csv.rfind("theta_h_deg,theta_v_deg,theta_inc_deg,theta_sq_deg,theta_az_deg,f_d_hz,observable,hue,"
                    "green_condition\n10,-10,45,",
                    0) == 0);
    CHECK(csv.find(",true,green,true\n") != std::string::npos);
}

TEST_CASE("chart CSV matches the golden file byte for byte") {
    const RadarParams p = reference_params();
    const std::vector<int> orders{-1, 0, 1};
    const std::string csv = chart_csv(chart_data(p, 0.05, orders, chart_grid()), p);
    const std::string golden = read_file(fs::path(MWR_TEST_DATA_DIR) / "chart_reference.csv");
    CHECK(csv == golden);
    CHECK(csv == chart_csv(chart_data(p, 0.05, orders, chart_grid()), p));
}

TEST_CASE("azspec_csv") {
    AzimuthSpectrum s{{-1.5, 0.0}, {2.0, 0.25}};
    CHECK(azspec_csv(s) == "f_a_hz,power\n-1.5,2\n0,0.25\n");
}

TEST_CASE("reports_json has stable keys") {
    VerificationReport r;
    r.label = "line";
    r.predictions.push_back({0, Angle::degrees(0), 0.0, true, Hue::Green});
    r.peaks.push_back({1024, 0.0, 3.0});
    r.matches.push_back({0, 0.0, 0.0, 0.0});
    r.nearest_peak_bins = {0.0, std::numeric_limits<double>::infinity()};
    r.pass = true;
    const std::string text = reports_json(std::vector{r});
    const auto j = nlohmann::ordered_json::parse(text);
    CHECK(j["pass"] == true);
    const auto& rep = j["reports"][0];
    std::vector<std::string> keys;
    for (const auto& [k, v] : rep.items()) {
        keys.push_back(k);
    }
    CHECK(keys == std::vector<std::string>{"label", "tol_bins", "bin_hz", "threshold", "predicted", "detected",
                                           "matches", "nearest_peak_bins", "unmatched_predictions",
                                           "unmatched_peaks", "pass"});
    CHECK(rep["nearest_peak_bins"][1].is_null());
    CHECK(text == reports_json(std::vector{r}));
}

TEST_CASE("grid sidecar round trip") {
    const RadarParams p = make_params(9.6e9, 7600, 0.1, 0.2, 50.0);
    SpectrumGrid g(p, 16, 8);
    std::mt19937_64 rng(2);
    std::normal_distribution<double> n;
    for (auto& z : g.data) {
        z = {n(rng), n(rng)};
    }
    const fs::path path = scratch("grid");
    write_grid(path, g);
    CHECK(fs::file_size(fs::path(path.string() + ".bin")) == 16 * 16 * 8);
    const SpectrumGrid back = read_grid(path);
    CHECK(back.na == 16);
    CHECK(back.nr == 8);
    CHECK(back.params == p);
    CHECK(back.data == g.data);

    // First 8 bytes are the little-endian real part of sample (0, 0).
    const std::string raw = read_file(fs::path(path.string() + ".bin"));
    std::uint64_t bits = 0;
    for (int b = 7; b >= 0; --b) {
        bits = (bits << 8) | static_cast<unsigned char>(raw[static_cast<std::size_t>(b)]);
    }
    CHECK(std::bit_cast<double>(bits) == g.data[0].real());

    const ComplexImage img = focus_image(g);
    write_image(scratch("img"), img);
    const ComplexImage img_back = read_image(scratch("img"));
    CHECK(img_back.data == img.data);
    CHECK_THROWS_AS(read_grid(scratch("img")), Error);
    CHECK_THROWS_AS(read_grid(scratch("missing")), Error);
}
