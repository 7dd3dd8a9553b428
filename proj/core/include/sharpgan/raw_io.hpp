#pragma once

#include <filesystem>

#include "sharpgan/image.hpp"
#include "sharpgan/maps.hpp"

namespace sharpgan {

// SGDM raw float format: magic "SGDM", then width and height as 32-bit
// little-endian unsigned integers, then row-major 32-bit little-endian
// floats. Exact round-trip for distance maps, S maps, and gradients.

void write_sgdm(const std::filesystem::path& path, int width, int height,
                const std::vector<double>& values);
void write_sgdm(const std::filesystem::path& path, const DistanceMap& map);
void write_sgdm(const std::filesystem::path& path, const GrayImage& img);

struct SgdmData {
    int width = 0;
    int height = 0;
    std::vector<float> values;
};

SgdmData read_sgdm(const std::filesystem::path& path);

}  // namespace sharpgan
