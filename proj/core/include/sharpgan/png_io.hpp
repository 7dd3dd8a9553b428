#pragma once

#include <filesystem>

#include "sharpgan/image.hpp"
#include "sharpgan/maps.hpp"

namespace sharpgan {

// 8-bit I/O converts by v/255 on read and round(v*255) on write.

RgbImage read_rgb_png(const std::filesystem::path& path);
GrayImage read_gray_png(const std::filesystem::path& path);
void write_gray_png(const std::filesystem::path& path, const GrayImage& img);

/// Instance maps are 16-bit single-channel PNGs, pixel value = label.
InstanceMap read_instance_png(const std::filesystem::path& path);
void write_instance_png(const std::filesystem::path& path, const InstanceMap& m);

void write_mask_png(const std::filesystem::path& path, const BinaryMask& mask);
void write_contour_png(const std::filesystem::path& path, const ContourMap& c);

}  // namespace sharpgan
