#include <doctest.h>

#include "sharpgan/image.hpp"
#include "test_util.hpp"

using namespace sharpgan;

TEST_CASE("rgb_to_gray on uniform colors") {
    RgbImage white(4, 3, 1.0);
    GrayImage g = rgb_to_gray(white);
    for (double v : g.data) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

    RgbImage red(4, 3);
    for (size_t i = 0; i < red.pixel_count(); ++i) red.data[3 * i] = 1.0;
    g = rgb_to_gray(red);
    for (double v : g.data) CHECK(v == doctest::Approx(0.299).epsilon(1e-15));

    RgbImage black(2, 2, 0.0);
    g = rgb_to_gray(black);
    for (double v : g.data) CHECK(v == 0.0);
}

TEST_CASE("rgb_to_gray of replicated grayscale is exact") {
    GrayImage src = test::random_gray(11, 9, 7);
    RgbImage rgb(9, 7);
    for (size_t i = 0; i < src.data.size(); ++i)
        rgb.data[3 * i] = rgb.data[3 * i + 1] = rgb.data[3 * i + 2] = src.data[i];
    GrayImage g = rgb_to_gray(rgb);
    CHECK(g.width == src.width);
    CHECK(g.height == src.height);
    for (size_t i = 0; i < src.data.size(); ++i)
        CHECK(g.data[i] == doctest::Approx(src.data[i]).epsilon(1e-15));
}

TEST_CASE("relabel_sequential compacts and is idempotent") {
    InstanceMap m(3, 1);
    m.labels = {0, 5, 9};
    InstanceMap r = relabel_sequential(m);
    CHECK(r.labels == std::vector<uint32_t>{0, 1, 2});
    InstanceMap r2 = relabel_sequential(r);
    CHECK(r2.labels == r.labels);

    InstanceMap zero(4, 4, 0);
    CHECK(relabel_sequential(zero).labels == zero.labels);
}

TEST_CASE("relabel_sequential preserves the pixel partition") {
    Rng rng(42);
    InstanceMap m(16, 16);
    for (auto& v : m.labels) v = static_cast<uint32_t>(rng.next_int(0, 9)) * 7;
    InstanceMap r = relabel_sequential(m);
    for (size_t i = 0; i < m.labels.size(); ++i) {
        for (size_t j = i + 1; j < m.labels.size(); ++j) {
            CHECK((m.labels[i] == m.labels[j]) == (r.labels[i] == r.labels[j]));
        }
    }
}

TEST_CASE("validate_instance_map") {
    InstanceMap good(2, 2);
    good.labels = {0, 1, 2, 2};
    CHECK(validate_instance_map(good).ok);

    InstanceMap gap(2, 2);
    gap.labels = {0, 0, 2, 2};
    ValidationReport report = validate_instance_map(gap);
    CHECK_FALSE(report.ok);
    CHECK(report.issues[0].first == "non-sequential-labels");

    InstanceMap empty;
    report = validate_instance_map(empty);
    CHECK_FALSE(report.ok);
    CHECK(report.issues[0].first == "empty-dimensions");
}
