#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "sharpgan/maskgen.hpp"
#include "sharpgan/png_io.hpp"
#include "sharpgan/raw_io.hpp"
#include "sharpgan/report.hpp"
#include "test_util.hpp"

using namespace sharpgan;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("sharpgan_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("16-bit instance PNG round trip with labels above 255") {
    TempDir tmp;
    InstanceMap m(8, 6, 0);
    m.at(0, 0) = 1;
    m.at(2, 3) = 300;
    m.at(5, 7) = 65535;
    const fs::path file = tmp.path / "labels.png";
    write_instance_png(file, m);
    InstanceMap back = read_instance_png(file);
    CHECK(back.width == m.width);
    CHECK(back.height == m.height);
    CHECK(back.labels == m.labels);
}

TEST_CASE("gray PNG round trip is 8-bit quantized") {
    TempDir tmp;
    GrayImage img = test::random_gray(1, 9, 5);
    const fs::path file = tmp.path / "gray.png";
    write_gray_png(file, img);
    GrayImage back = read_gray_png(file);
    for (size_t i = 0; i < img.data.size(); ++i) {
        const double quantized = std::lround(img.data[i] * 255.0) / 255.0;
        CHECK(back.data[i] == doctest::Approx(quantized).epsilon(1e-12));
    }
}

TEST_CASE("SGDM round trip is exact in float precision") {
    TempDir tmp;
    GrayImage img = test::random_gray(2, 7, 11);
    const fs::path file = tmp.path / "data.sgdm";
    write_sgdm(file, img);
    SgdmData back = read_sgdm(file);
    CHECK(back.width == 7);
    CHECK(back.height == 11);
    for (size_t i = 0; i < img.data.size(); ++i)
        CHECK(back.values[i] == static_cast<float>(img.data[i]));
}

TEST_CASE("SGDM rejects malformed files") {
    TempDir tmp;
    const fs::path file = tmp.path / "bad.sgdm";
    {
        std::ofstream out(file, std::ios::binary);
        out << "NOPE1234";
    }
    CHECK_THROWS_AS(read_sgdm(file), FormatError);
    CHECK_THROWS_AS(read_sgdm(tmp.path / "missing.sgdm"), IoError);
}

TEST_CASE("malformed PNG raises FormatError") {
    TempDir tmp;
    const fs::path file = tmp.path / "bad.png";
    {
        std::ofstream out(file, std::ios::binary);
        out << "not a png at all";
    }
    CHECK_THROWS_AS(read_instance_png(file), FormatError);
}

TEST_CASE("report aggregates are recomputable from rows") {
    Report report;
    report.metrics = {"m"};
    for (double v : {0.1, 0.5, 0.9, 0.3}) {
        ReportRow row;
        row.name = "img";
        row.values["m"] = v;
        report.rows.push_back(row);
    }
    ReportRow skipped;
    skipped.name = "missing";
    skipped.skipped = true;
    report.rows.push_back(skipped);

    const Aggregate agg = report.aggregates().at("m");
    CHECK(agg.mean == doctest::Approx(0.45).epsilon(1e-15));
    CHECK(agg.median == doctest::Approx(0.4).epsilon(1e-15));
    const double expected_std =
        std::sqrt(((0.1 - 0.45) * (0.1 - 0.45) + (0.5 - 0.45) * (0.5 - 0.45) +
                   (0.9 - 0.45) * (0.9 - 0.45) + (0.3 - 0.45) * (0.3 - 0.45)) /
                  4.0);
    CHECK(agg.stddev == doctest::Approx(expected_std).epsilon(1e-12));
}

TEST_CASE("config hash is stable and content sensitive") {
    CHECK(config_hash("a=1") == config_hash("a=1"));
    CHECK(config_hash("a=1") != config_hash("a=2"));
    CHECK(config_hash("").size() == 16);
}
