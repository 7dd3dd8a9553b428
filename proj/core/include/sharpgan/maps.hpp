#pragma once

#include "sharpgan/image.hpp"

namespace sharpgan {

enum class DistanceMode {
    kCentroid,          // raw or per-nucleus normalized centroid distance
    kCentroidInverted,  // 1 - d/d_max per nucleus; requires normalize
};

struct DistanceMap {
    int width = 0;
    int height = 0;
    std::vector<double> values;  // 0 on background
    bool normalized = false;

    DistanceMap() = default;
    DistanceMap(int w, int h)
        : width(w), height(h), values(static_cast<size_t>(w) * h, 0.0) {}

    double& at(int row, int col) {
        return values[static_cast<size_t>(row) * width + col];
    }
    double at(int row, int col) const {
        return values[static_cast<size_t>(row) * width + col];
    }
};

struct ContourMap {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> values;  // 0 or 1

    ContourMap() = default;
    ContourMap(int w, int h)
        : width(w), height(h), values(static_cast<size_t>(w) * h, 0) {}

    uint8_t& at(int row, int col) {
        return values[static_cast<size_t>(row) * width + col];
    }
    uint8_t at(int row, int col) const {
        return values[static_cast<size_t>(row) * width + col];
    }
};

/// Per-pixel Euclidean distance to the centroid of the containing nucleus;
/// background is 0. Normalization divides by the nucleus's max distance
/// (single-pixel nuclei map to 1).
DistanceMap distance_map(const InstanceMap& m, DistanceMode mode = DistanceMode::kCentroid,
                         bool normalize = false);

/// Pixel is contour iff it is foreground and some neighbor (image border
/// counts as background) carries a different label. Marks shared boundaries
/// between touching nuclei.
ContourMap contour_map(const InstanceMap& m, int connectivity = 8);

BinaryMask binary_mask(const InstanceMap& m);

}  // namespace sharpgan
