#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "sharpgan/image.hpp"
#include "sharpgan/rng.hpp"

namespace sharpgan {

enum class OverlapPolicy {
    kDisjoint,     // candidates intersecting existing nuclei are retried
    kTouching,     // only candidate border pixels may overlap; later placement wins
    kOverlapping,  // unrestricted; later placement wins shared pixels
};

struct MaskGenConfig {
    int canvas_width = 256;
    int canvas_height = 256;
    std::pair<int, int> nucleus_count_range = {20, 40};
    std::pair<double, double> radius_range = {6.0, 14.0};
    double irregularity = 0.4;       // angular jitter fraction, [0,1]
    double spikiness = 0.2;          // radial jitter fraction of mean radius, [0,1]
    std::pair<int, int> vertex_count_range = {8, 16};
    OverlapPolicy overlap_policy = OverlapPolicy::kDisjoint;
    int max_placement_attempts = 50;
};

struct Polygon {
    std::vector<std::pair<double, double>> vertices;  // (x, y), counterclockwise
};

void validate_config(const MaskGenConfig& cfg);  // throws ConfigError

/// Radial-perturbation polygon sampler around `center` (x, y).
Polygon generate_polygon(Rng& rng, const MaskGenConfig& cfg,
                         std::pair<double, double> center);

/// Pixel (row, col) set iff its center (col+0.5, row+0.5) is inside the
/// polygon under the even-odd rule.
BinaryMask rasterize(const Polygon& poly, int width, int height);

/// Places N ~ nucleus_count_range polygons per the overlap policy; output is
/// sequentially relabeled and every surviving label is nonempty.
InstanceMap synthesize_layout(const MaskGenConfig& cfg, uint64_t seed);

}  // namespace sharpgan
