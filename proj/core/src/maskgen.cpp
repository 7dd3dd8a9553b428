#include "sharpgan/maskgen.hpp"

#include <algorithm>
#include <cmath>

namespace sharpgan {

namespace {

bool point_in_polygon(const Polygon& poly, double x, double y) {
    // Even-odd rule, ray cast toward +x.
    bool inside = false;
    const auto& v = poly.vertices;
    const size_t n = v.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const auto [xi, yi] = v[i];
        const auto [xj, yj] = v[j];
        if ((yi > y) != (yj > y)) {
            const double x_cross = xi + (xj - xi) * (y - yi) / (yj - yi);
            if (x < x_cross) inside = !inside;
        }
    }
    return inside;
}

bool is_border_pixel(const BinaryMask& mask, int row, int col) {
    for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
            if (dr == 0 && dc == 0) continue;
            const int r = row + dr;
            const int c = col + dc;
            if (r < 0 || r >= mask.height || c < 0 || c >= mask.width) return true;
            if (mask.at(r, c) == 0) return true;
        }
    }
    return false;
}

}  // namespace

void validate_config(const MaskGenConfig& cfg) {
    if (cfg.canvas_width < 1 || cfg.canvas_height < 1)
        throw ConfigError("canvas dimensions must be positive");
    if (cfg.nucleus_count_range.first < 0 ||
        cfg.nucleus_count_range.second < cfg.nucleus_count_range.first)
        throw ConfigError("nucleus_count_range is empty or negative");
    if (cfg.radius_range.first <= 0.0 ||
        cfg.radius_range.second < cfg.radius_range.first)
        throw ConfigError("radius_range is empty or nonpositive");
    if (cfg.irregularity < 0.0 || cfg.irregularity > 1.0)
        throw ConfigError("irregularity must be in [0,1]");
    if (cfg.spikiness < 0.0 || cfg.spikiness > 1.0)
        throw ConfigError("spikiness must be in [0,1]");
    if (cfg.vertex_count_range.first < 3 ||
        cfg.vertex_count_range.second < cfg.vertex_count_range.first)
        throw ConfigError("vertex_count_range must be a nonempty range >= 3");
    if (cfg.max_placement_attempts < 1)
        throw ConfigError("max_placement_attempts must be positive");
}

Polygon generate_polygon(Rng& rng, const MaskGenConfig& cfg,
                         std::pair<double, double> center) {
    const int n = static_cast<int>(
        rng.next_int(cfg.vertex_count_range.first, cfg.vertex_count_range.second));
    const double mean_radius =
        rng.next_real(cfg.radius_range.first, cfg.radius_range.second);
    const double start_angle = rng.next_real(0.0, 2.0 * std::numbers::pi);

    // Angular steps (2*pi/n)*(1 + irregularity*u), renormalized to sum 2*pi.
    std::vector<double> steps(n);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        steps[i] = (2.0 * std::numbers::pi / n) *
                   (1.0 + cfg.irregularity * rng.next_signed_unit());
        sum += steps[i];
    }
    const double scale = 2.0 * std::numbers::pi / sum;

    Polygon poly;
    poly.vertices.reserve(n);
    double angle = start_angle;
    for (int i = 0; i < n; ++i) {
        const double radius = std::max(
            1.0, mean_radius * (1.0 + cfg.spikiness * rng.next_signed_unit()));
        poly.vertices.emplace_back(center.first + radius * std::cos(angle),
                                   center.second + radius * std::sin(angle));
        angle += steps[i] * scale;
    }
    return poly;
}

BinaryMask rasterize(const Polygon& poly, int width, int height) {
    BinaryMask mask(width, height);
    double min_x = poly.vertices[0].first, max_x = min_x;
    double min_y = poly.vertices[0].second, max_y = min_y;
    for (const auto& [x, y] : poly.vertices) {
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
    }
    const int col_lo = std::max(0, static_cast<int>(std::floor(min_x - 0.5)));
    const int col_hi = std::min(width - 1, static_cast<int>(std::ceil(max_x)));
    const int row_lo = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
    const int row_hi = std::min(height - 1, static_cast<int>(std::ceil(max_y)));

    for (int row = row_lo; row <= row_hi; ++row) {
        for (int col = col_lo; col <= col_hi; ++col) {
            if (point_in_polygon(poly, col + 0.5, row + 0.5)) mask.at(row, col) = 1;
        }
    }
    return mask;
}

InstanceMap synthesize_layout(const MaskGenConfig& cfg, uint64_t seed) {
    validate_config(cfg);
    Rng rng(seed);
    const int target = static_cast<int>(rng.next_int(
        cfg.nucleus_count_range.first, cfg.nucleus_count_range.second));

    InstanceMap map(cfg.canvas_width, cfg.canvas_height);
    uint32_t next_label = 1;

    for (int k = 0; k < target; ++k) {
        for (int attempt = 0; attempt < cfg.max_placement_attempts; ++attempt) {
            const std::pair<double, double> center = {
                rng.next_real(0.0, cfg.canvas_width),
                rng.next_real(0.0, cfg.canvas_height)};
            const Polygon poly = generate_polygon(rng, cfg, center);
            const BinaryMask candidate = rasterize(poly, cfg.canvas_width, cfg.canvas_height);

            bool any_pixel = false;
            bool ok = true;
            for (int row = 0; row < cfg.canvas_height && ok; ++row) {
                for (int col = 0; col < cfg.canvas_width && ok; ++col) {
                    if (!candidate.at(row, col)) continue;
                    any_pixel = true;
                    if (map.at(row, col) == 0) continue;
                    switch (cfg.overlap_policy) {
                        case OverlapPolicy::kDisjoint:
                            ok = false;
                            break;
                        case OverlapPolicy::kTouching:
                            if (!is_border_pixel(candidate, row, col)) ok = false;
                            break;
                        case OverlapPolicy::kOverlapping:
                            break;
                    }
                }
            }
            if (!ok || !any_pixel) continue;

            // Shared pixels go to the later-placed nucleus.
            for (int row = 0; row < cfg.canvas_height; ++row) {
                for (int col = 0; col < cfg.canvas_width; ++col) {
                    if (candidate.at(row, col)) map.at(row, col) = next_label;
                }
            }
            ++next_label;
            break;
        }
    }
    // Labels fully overwritten by later placements are dropped here.
    return relabel_sequential(map);
}

}  // namespace sharpgan
