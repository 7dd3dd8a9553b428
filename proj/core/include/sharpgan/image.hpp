#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "sharpgan/errors.hpp"

namespace sharpgan {

/// RGB raster, row-major, channel-interleaved, intensities in [0,1].
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;  // 3 * width * height, r,g,b per pixel

    RgbImage() = default;
    RgbImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<size_t>(w) * h * 3, fill) {}

    double& at(int row, int col, int ch) {
        return data[(static_cast<size_t>(row) * width + col) * 3 + ch];
    }
    double at(int row, int col, int ch) const {
        return data[(static_cast<size_t>(row) * width + col) * 3 + ch];
    }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

/// Single-channel raster, row-major, intensities in [0,1].
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<double> data;

    GrayImage() = default;
    GrayImage(int w, int h, double fill = 0.0)
        : width(w), height(h), data(static_cast<size_t>(w) * h, fill) {}

    double& at(int row, int col) {
        return data[static_cast<size_t>(row) * width + col];
    }
    double at(int row, int col) const {
        return data[static_cast<size_t>(row) * width + col];
    }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
};

/// Integer label map: 0 = background, k >= 1 = nucleus k.
struct InstanceMap {
    int width = 0;
    int height = 0;
    std::vector<uint32_t> labels;

    InstanceMap() = default;
    InstanceMap(int w, int h, uint32_t fill = 0)
        : width(w), height(h), labels(static_cast<size_t>(w) * h, fill) {}

    uint32_t& at(int row, int col) {
        return labels[static_cast<size_t>(row) * width + col];
    }
    uint32_t at(int row, int col) const {
        return labels[static_cast<size_t>(row) * width + col];
    }
    size_t pixel_count() const { return static_cast<size_t>(width) * height; }
    uint32_t max_label() const;
};

struct BinaryMask {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> values;  // 0 or 1

    BinaryMask() = default;
    BinaryMask(int w, int h, uint8_t fill = 0)
        : width(w), height(h), values(static_cast<size_t>(w) * h, fill) {}

    uint8_t& at(int row, int col) {
        return values[static_cast<size_t>(row) * width + col];
    }
    uint8_t at(int row, int col) const {
        return values[static_cast<size_t>(row) * width + col];
    }
};

struct ValidationReport {
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> issues;  // (code, message)

    void add(std::string code, std::string message) {
        ok = false;
        issues.emplace_back(std::move(code), std::move(message));
    }
};

/// BT.601 luma: 0.299 R + 0.587 G + 0.114 B.
inline constexpr double kLumaR = 0.299;
inline constexpr double kLumaG = 0.587;
inline constexpr double kLumaB = 0.114;

GrayImage rgb_to_gray(const RgbImage& img);

/// Remaps nonzero labels to 1..K, order-preserving; background stays 0.
InstanceMap relabel_sequential(const InstanceMap& m);

ValidationReport validate_instance_map(const InstanceMap& m);

}  // namespace sharpgan
