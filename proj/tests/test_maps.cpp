#include <doctest.h>

#include <cmath>
#include <vector>

#include "sharpgan/maps.hpp"
#include "sharpgan/maskgen.hpp"
#include "test_util.hpp"

using namespace sharpgan;

namespace {

// Per-nucleus brute force: collect pixels, average coordinates, explicit norm.
DistanceMap brute_distance(const InstanceMap& m, bool normalize) {
    DistanceMap out(m.width, m.height);
    out.normalized = normalize;
    for (uint32_t label = 1; label <= m.max_label(); ++label) {
        std::vector<std::pair<int, int>> pixels;
        for (int r = 0; r < m.height; ++r)
            for (int c = 0; c < m.width; ++c)
                if (m.at(r, c) == label) pixels.emplace_back(r, c);
        if (pixels.empty()) continue;
        double cr = 0.0, cc = 0.0;
        for (const auto& [r, c] : pixels) {
            cr += r;
            cc += c;
        }
        cr /= pixels.size();
        cc /= pixels.size();
        double max_d = 0.0;
        for (const auto& [r, c] : pixels) {
            const double d = std::sqrt((r - cr) * (r - cr) + (c - cc) * (c - cc));
            out.at(r, c) = d;
            max_d = std::max(max_d, d);
        }
        if (normalize) {
            for (const auto& [r, c] : pixels)
                out.at(r, c) = max_d > 0.0 ? out.at(r, c) / max_d : 1.0;
        }
    }
    return out;
}

InstanceMap random_layout(uint64_t seed, int size = 32) {
    MaskGenConfig cfg;
    cfg.canvas_width = size;
    cfg.canvas_height = size;
    cfg.nucleus_count_range = {3, 6};
    cfg.radius_range = {3.0, 6.0};
    cfg.overlap_policy = OverlapPolicy::kTouching;
    return synthesize_layout(cfg, seed);
}

}  // namespace

TEST_CASE("distance_map 1x5 strip") {
    InstanceMap m(5, 1);
    m.labels = {0, 1, 1, 1, 0};
    DistanceMap d = distance_map(m);
    CHECK(d.at(0, 0) == 0.0);
    CHECK(d.at(0, 1) == doctest::Approx(1.0));
    CHECK(d.at(0, 2) == doctest::Approx(0.0));
    CHECK(d.at(0, 3) == doctest::Approx(1.0));
    CHECK(d.at(0, 4) == 0.0);

    DistanceMap dn = distance_map(m, DistanceMode::kCentroid, true);
    CHECK(dn.at(0, 1) == doctest::Approx(1.0));
    CHECK(dn.at(0, 2) == doctest::Approx(0.0));
}

TEST_CASE("distance_map all-background") {
    InstanceMap m(6, 4, 0);
    DistanceMap d = distance_map(m);
    for (double v : d.values) CHECK(v == 0.0);
}

TEST_CASE("distance_map matches the brute-force oracle on random layouts") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        InstanceMap m = random_layout(seed);
        for (bool normalize : {false, true}) {
            DistanceMap got = distance_map(m, DistanceMode::kCentroid, normalize);
            DistanceMap want = brute_distance(m, normalize);
            for (size_t i = 0; i < got.values.size(); ++i)
                CHECK(got.values[i] == doctest::Approx(want.values[i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("normalized distance map attains 1 on every nucleus") {
    for (uint64_t seed = 0; seed < 5; ++seed) {
        InstanceMap m = random_layout(seed);
        DistanceMap d = distance_map(m, DistanceMode::kCentroid, true);
        for (uint32_t label = 1; label <= m.max_label(); ++label) {
            double max_v = 0.0;
            for (int r = 0; r < m.height; ++r)
                for (int c = 0; c < m.width; ++c)
                    if (m.at(r, c) == label) max_v = std::max(max_v, d.at(r, c));
            CHECK(max_v == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("single-pixel nucleus normalizes to 1") {
    InstanceMap m(3, 3, 0);
    m.at(1, 1) = 1;
    DistanceMap d = distance_map(m, DistanceMode::kCentroid, true);
    CHECK(d.at(1, 1) == 1.0);
}

TEST_CASE("centroid_inverted requires normalize") {
    InstanceMap m(3, 3, 0);
    m.at(1, 1) = 1;
    CHECK_THROWS_AS(distance_map(m, DistanceMode::kCentroidInverted, false), ModeError);
    DistanceMap d = distance_map(m, DistanceMode::kCentroidInverted, true);
    CHECK(d.at(1, 1) == 0.0);  // 1 - 1
    CHECK(d.at(0, 0) == 0.0);  // background
}

TEST_CASE("contour_map single 3x3 nucleus") {
    InstanceMap m(7, 7, 0);
    for (int r = 2; r <= 4; ++r)
        for (int c = 2; c <= 4; ++c) m.at(r, c) = 1;
    ContourMap c8 = contour_map(m, 8);
    int marked = 0;
    for (auto v : c8.values) marked += v;
    CHECK(marked == 8);
    CHECK(c8.at(3, 3) == 0);
}

TEST_CASE("contour_map marks shared borders of touching nuclei") {
    InstanceMap m(6, 4, 0);
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 3; ++c) m.at(r, c) = 1;
        for (int c = 3; c < 6; ++c) m.at(r, c) = 2;
    }
    ContourMap c = contour_map(m, 8);
    for (int r = 0; r < 4; ++r) {
        CHECK(c.at(r, 2) == 1);
        CHECK(c.at(r, 3) == 1);
    }
}

TEST_CASE("contour_map matches a brute neighbor-difference scan") {
    for (uint64_t seed = 0; seed < 10; ++seed) {
        InstanceMap m = random_layout(seed);
        for (int connectivity : {4, 8}) {
            ContourMap got = contour_map(m, connectivity);
            for (int r = 0; r < m.height; ++r) {
                for (int c = 0; c < m.width; ++c) {
                    bool expect = false;
                    if (m.at(r, c) != 0) {
                        for (int dr = -1; dr <= 1; ++dr) {
                            for (int dc = -1; dc <= 1; ++dc) {
                                if (dr == 0 && dc == 0) continue;
                                if (connectivity == 4 && std::abs(dr) + std::abs(dc) != 1)
                                    continue;
                                const int rr = r + dr, cc = c + dc;
                                const uint32_t n =
                                    (rr < 0 || rr >= m.height || cc < 0 || cc >= m.width)
                                        ? 0
                                        : m.at(rr, cc);
                                if (n != m.at(r, c)) expect = true;
                            }
                        }
                    }
                    CHECK(static_cast<bool>(got.at(r, c)) == expect);
                }
            }
        }
    }
}

TEST_CASE("contour is a subset of the binary mask") {
    InstanceMap m = random_layout(3);
    ContourMap c = contour_map(m);
    BinaryMask b = binary_mask(m);
    for (size_t i = 0; i < c.values.size(); ++i)
        if (c.values[i]) CHECK(b.values[i] == 1);
}

TEST_CASE("binary_mask basics") {
    InstanceMap m(3, 1);
    m.labels = {0, 1, 2};
    BinaryMask b = binary_mask(m);
    CHECK(b.values == std::vector<uint8_t>{0, 1, 1});

    InstanceMap zero(4, 4, 0);
    BinaryMask bz = binary_mask(zero);
    for (auto v : bz.values) CHECK(v == 0);
}

TEST_CASE("translation equivariance of maps") {
    InstanceMap m(20, 20, 0);
    for (int r = 4; r <= 8; ++r)
        for (int c = 5; c <= 9; ++c) m.at(r, c) = 1;
    InstanceMap shifted(20, 20, 0);
    for (int r = 4; r <= 8; ++r)
        for (int c = 5; c <= 9; ++c) shifted.at(r + 3, c + 2) = 1;

    DistanceMap d0 = distance_map(m, DistanceMode::kCentroid, true);
    DistanceMap d1 = distance_map(shifted, DistanceMode::kCentroid, true);
    ContourMap c0 = contour_map(m);
    ContourMap c1 = contour_map(shifted);
    for (int r = 4; r <= 8; ++r) {
        for (int c = 5; c <= 9; ++c) {
            CHECK(d0.at(r, c) == doctest::Approx(d1.at(r + 3, c + 2)).epsilon(1e-12));
            CHECK(c0.at(r, c) == c1.at(r + 3, c + 2));
        }
    }
}
