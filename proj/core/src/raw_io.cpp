#include "sharpgan/raw_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace sharpgan {

namespace {

constexpr char kMagic[4] = {'S', 'G', 'D', 'M'};

void put_u32le(std::ostream& out, uint32_t v) {
    const uint8_t bytes[4] = {static_cast<uint8_t>(v), static_cast<uint8_t>(v >> 8),
                              static_cast<uint8_t>(v >> 16),
                              static_cast<uint8_t>(v >> 24)};
    out.write(reinterpret_cast<const char*>(bytes), 4);
}

uint32_t get_u32le(std::istream& in) {
    uint8_t bytes[4];
    in.read(reinterpret_cast<char*>(bytes), 4);
    return static_cast<uint32_t>(bytes[0]) | (static_cast<uint32_t>(bytes[1]) << 8) |
           (static_cast<uint32_t>(bytes[2]) << 16) |
           (static_cast<uint32_t>(bytes[3]) << 24);
}

static_assert(std::endian::native == std::endian::little,
              "float byte swapping not implemented for big-endian hosts");

}  // namespace

void write_sgdm(const std::filesystem::path& path, int width, int height,
                const std::vector<double>& values) {
    if (values.size() != static_cast<size_t>(width) * height)
        throw DimensionMismatch("value buffer does not match width*height");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path.string());
    out.write(kMagic, 4);
    put_u32le(out, static_cast<uint32_t>(width));
    put_u32le(out, static_cast<uint32_t>(height));
    for (double v : values) {
        const float f = static_cast<float>(v);
        out.write(reinterpret_cast<const char*>(&f), 4);
    }
    if (!out) throw IoError("write failed: " + path.string());
}

void write_sgdm(const std::filesystem::path& path, const DistanceMap& map) {
    write_sgdm(path, map.width, map.height, map.values);
}

void write_sgdm(const std::filesystem::path& path, const GrayImage& img) {
    write_sgdm(path, img.width, img.height, img.data);
}

SgdmData read_sgdm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, kMagic, 4) != 0)
        throw FormatError("not an SGDM file: " + path.string());

    SgdmData data;
    data.width = static_cast<int>(get_u32le(in));
    data.height = static_cast<int>(get_u32le(in));
    const size_t n = static_cast<size_t>(data.width) * data.height;
    data.values.resize(n);
    in.read(reinterpret_cast<char*>(data.values.data()), n * 4);
    if (!in) throw FormatError("truncated SGDM file: " + path.string());
    return data;
}

}  // namespace sharpgan
